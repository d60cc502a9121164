#pragma once

#include "fdq/lattice_constants.hpp"
#include "fdq/rational.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace fdq {

// Opaque symbols of the coefficient ring.
enum class AtomKind {
  LogQ,          // log q
  TwoPi,         // 2 pi
  CycloMinus,    // 1 - q^{-k}, k > 0
  CycloPlus,     // 1 + q^{-k}, k > 0
  GammaValue,    // gamma_label(point), regular and nonzero
  GammaLeading,  // leading Laurent coefficient of gamma_label at point
  Unit,          // unimodular constant attached to label (psi versus psi-bar)
  Named,         // any other opaque quantity, e.g. "gamma(G/M)"
};

struct Atom {
  AtomKind kind = AtomKind::Named;
  std::string label;
  Rational param;  // k for the cyclotomic atoms, the point for gamma atoms

  auto key() const { return std::tie(kind, label, param); }
  bool operator<(const Atom& o) const { return key() < o.key(); }
  bool operator==(const Atom& o) const { return key() == o.key(); }
  std::string str() const;
};

// scalar * q^{q_exp} * prod atom^{exp}, kept in canonical form.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational scalar) : scalar_(std::move(scalar)) {}  // NOLINT

  static Coefficient atom(AtomKind kind, std::string label = {}, Rational param = 0, int exp = 1);
  static Coefficient log_q() { return atom(AtomKind::LogQ); }
  static Coefficient two_pi() { return atom(AtomKind::TwoPi); }
  static Coefficient cyclo_minus(const Rational& k, int exp = 1);
  static Coefficient cyclo_plus(const Rational& k, int exp = 1);
  static Coefficient named(std::string name, int exp = 1) { return atom(AtomKind::Named, std::move(name), 0, exp); }
  static Coefficient q_power(Rational e);

  const Rational& scalar() const { return scalar_; }
  const Rational& q_exp() const { return q_exp_; }
  const std::map<Atom, int>& atoms() const { return atoms_; }

  bool is_zero() const { return scalar_ == 0; }
  // A pure rational: no q-power and no atoms.
  bool is_rational() const { return q_exp_ == 0 && atoms_.empty(); }

  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.pow(-1); }
  Coefficient pow(int e) const;
  // Drops unimodular Unit atoms and the sign: the class of |c|.
  Coefficient abs_normalized() const;
  bool operator==(const Coefficient&) const = default;

  // Numerical value; throws InputError if a gamma, unit or named atom is present.
  long double eval(long double q) const;

  std::string str() const;

 private:
  Rational scalar_ = 1;
  Rational q_exp_ = 0;
  std::map<Atom, int> atoms_;
};

// 1 - sign * q^{-(a s + b)}
struct Cyclotomic {
  Rational a, b;
  int sign = 1;
  bool operator==(const Cyclotomic&) const = default;
};

// gamma_label(a s + b); conj_psi marks the psi-bar variant of the same label.
struct GammaSym {
  std::string label;
  bool conj_psi = false;
  Rational a, b;
  bool operator==(const GammaSym&) const = default;
};

struct ConstSym {
  Coefficient value;
  bool operator==(const ConstSym&) const = default;
};

struct MeroFactor {
  std::variant<Cyclotomic, GammaSym, ConstSym> kind;
  int exponent = 1;
  bool operator==(const MeroFactor&) const = default;
  std::string str() const;
};

// Formal product of factors; equal factors are merged and cancelled.
class MeroExpr {
 public:
  MeroExpr() = default;
  static MeroExpr cyclo(Rational a, Rational b, int sign = 1, int exponent = 1);
  static MeroExpr gamma(std::string label, Rational a, Rational b, bool conj_psi = false, int exponent = 1);
  static MeroExpr constant(Coefficient c, int exponent = 1);

  const std::vector<MeroFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  friend MeroExpr operator*(const MeroExpr& x, const MeroExpr& y);
  MeroExpr inverse() const;
  MeroExpr pow(int e) const;
  bool operator==(const MeroExpr&) const = default;

  // Numerical value for expressions without gamma symbols.
  long double eval(long double q, long double s) const;
  bool has_gamma() const;

  std::string str() const;

 private:
  void push(MeroFactor f);
  std::vector<MeroFactor> factors_;
};

// Declared analytic data of the gamma symbols.
class GammaAxioms {
 public:
  void declare_label(const std::string& label);
  // order > 0 is a pole, order < 0 a zero. Redeclaring with another order throws.
  void declare(const std::string& label, const Rational& point, int order);

  bool knows(const std::string& label) const { return decl_.count(label) != 0; }
  // Declared order at point (0 when regular and nonzero). Unknown label throws
  // MissingDeclarationError.
  int order_at(const std::string& label, const Rational& point) const;
  const std::map<std::string, std::map<Rational, int>>& declarations() const { return decl_; }

 private:
  std::map<std::string, std::map<Rational, int>> decl_;
};

// Labels "sigma:r_i", "sigma~:r_i" (i = 1..m_ls) and "sigma:Ad"; a simple pole
// at 1 on "sigma:r_j".
GammaAxioms standard_axioms(int m_ls, int j);
std::string level_label(int i, bool contragredient);

struct LaurentLeading {
  int order = 0;  // negative for a pole
  Coefficient coeff;
  bool operator==(const LaurentLeading&) const = default;
};

LaurentLeading laurent_leading(const MeroExpr& expr, const Rational& s0, const GammaAxioms& axioms = {});
// Leading coefficient when the order is -1, nullopt otherwise.
std::optional<Coefficient> residue(const MeroExpr& expr, const Rational& s0, const GammaAxioms& axioms = {});

// s -> lambda s in every factor.
MeroExpr rescale(const MeroExpr& expr, const Rational& lambda);

// prod_i gamma(i s, sigma, r_i, psi-bar) gamma(-i s, sigma~, r_i, psi)
MeroExpr mu_expression(int m_ls);
// (1 - q^{-s})/(1 - q^{s-1}) * prod_i gamma(s + i s0, sigma, r_i) gamma(s - i s0, sigma~, r_i)
MeroExpr adjoint_quotient_expression(int m_ls, const Rational& s0);
// Same product, before the gamma(s, sigma, Ad) factor is cancelled.
MeroExpr adjoint_gamma_expression(int m_ls, const Rational& s0);

struct DerivationStep {
  std::string rule;
  std::string cites;
  std::string before;
  std::string after;
};

struct DerivationReport {
  int m_ls = 0;
  int j = 0;
  Rational expected;                    // m_idx / (j <chi, alpha^vee>)
  std::optional<Rational> constant;     // set when only a rational survives
  std::vector<std::string> surviving;   // symbols left in |d ratio| / |Ad ratio|
  std::vector<DerivationStep> steps;
  std::string failure;                  // empty on success
  bool success() const { return failure.empty(); }
};

DerivationReport derive_main_theorem(int m_ls, int j, const StructureConstants& sc, const GammaAxioms& axioms);
DerivationReport derive_main_theorem(int m_ls, int j, const StructureConstants& sc);

nlohmann::ordered_json to_json(const Coefficient& c);
nlohmann::ordered_json to_json(const DerivationReport& r);
std::string to_markdown(const DerivationReport& r);

}  // namespace fdq
