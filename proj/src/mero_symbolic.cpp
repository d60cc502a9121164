#include "fdq/mero_symbolic.hpp"

#include "fdq/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fdq {

namespace {

Rational rpow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw InvariantViolation("zero raised to a negative power");
    return rpow(Rational(1) / x, -e);
  }
  Rational out = 1, base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

long double to_ld(const Rational& r) { return r.convert_to<long double>(); }

// "2s + 1/2", "-s", "1"
std::string affine(const Rational& a, const Rational& b) {
  std::string out;
  if (a != 0) {
    if (a == 1)
      out = "s";
    else if (a == -1)
      out = "-s";
    else
      out = to_string(a) + "s";
  }
  if (b != 0 || out.empty()) {
    if (out.empty())
      out = to_string(b);
    else if (b > 0)
      out += " + " + to_string(b);
    else
      out += " - " + to_string(Rational(-b));
  }
  return out;
}

std::string with_exponent(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

std::string Atom::str() const {
  switch (kind) {
    case AtomKind::LogQ:
      return "log q";
    case AtomKind::TwoPi:
      return "2pi";
    case AtomKind::CycloMinus:
      return "(1 - q^-" + to_string(param) + ")";
    case AtomKind::CycloPlus:
      return "(1 + q^-" + to_string(param) + ")";
    case AtomKind::GammaValue:
      return "gamma[" + label + "](" + to_string(param) + ")";
    case AtomKind::GammaLeading:
      return "lc gamma[" + label + "](" + to_string(param) + ")";
    case AtomKind::Unit:
      return "u[" + label + "]";
    case AtomKind::Named:
      return "{" + label + "}";
  }
  return "?";
}

Coefficient Coefficient::atom(AtomKind kind, std::string label, Rational param, int exp) {
  if ((kind == AtomKind::CycloMinus || kind == AtomKind::CycloPlus) && param <= 0)
    throw InvariantViolation("cyclotomic atom needs a positive exponent");
  Coefficient c;
  if (exp != 0) c.atoms_[Atom{kind, std::move(label), std::move(param)}] = exp;
  return c;
}

Coefficient Coefficient::cyclo_minus(const Rational& k, int exp) { return atom(AtomKind::CycloMinus, {}, k, exp); }
Coefficient Coefficient::cyclo_plus(const Rational& k, int exp) { return atom(AtomKind::CycloPlus, {}, k, exp); }

Coefficient Coefficient::q_power(Rational e) {
  Coefficient c;
  c.q_exp_ = std::move(e);
  return c;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  scalar_ *= o.scalar_;
  q_exp_ += o.q_exp_;
  for (const auto& [a, e] : o.atoms_) {
    auto it = atoms_.find(a);
    if (it == atoms_.end()) {
      atoms_.emplace(a, e);
    } else if ((it->second += e) == 0) {
      atoms_.erase(it);
    }
  }
  return *this;
}

Coefficient Coefficient::pow(int e) const {
  Coefficient c;
  c.scalar_ = rpow(scalar_, e);
  c.q_exp_ = q_exp_ * e;
  if (e != 0)
    for (const auto& [a, x] : atoms_) c.atoms_[a] = x * e;
  return c;
}

Coefficient Coefficient::abs_normalized() const {
  Coefficient c = *this;
  if (c.scalar_ < 0) c.scalar_ = -c.scalar_;
  for (auto it = c.atoms_.begin(); it != c.atoms_.end();) {
    if (it->first.kind == AtomKind::Unit)
      it = c.atoms_.erase(it);
    else
      ++it;
  }
  return c;
}

long double Coefficient::eval(long double q) const {
  long double v = to_ld(scalar_) * std::pow(q, to_ld(q_exp_));
  for (const auto& [a, e] : atoms_) {
    long double base = 0;
    switch (a.kind) {
      case AtomKind::LogQ:
        base = std::log(q);
        break;
      case AtomKind::TwoPi:
        base = 2 * std::numbers::pi_v<long double>;
        break;
      case AtomKind::CycloMinus:
        base = 1 - std::pow(q, -to_ld(a.param));
        break;
      case AtomKind::CycloPlus:
        base = 1 + std::pow(q, -to_ld(a.param));
        break;
      default:
        throw InputError("no numerical value for " + a.str());
    }
    v *= std::pow(base, static_cast<long double>(e));
  }
  return v;
}

std::string Coefficient::str() const {
  std::vector<std::string> parts;
  if (scalar_ != 1 || (q_exp_ == 0 && atoms_.empty())) parts.push_back(to_string(scalar_));
  if (q_exp_ != 0) parts.push_back("q^(" + to_string(q_exp_) + ")");
  for (const auto& [a, e] : atoms_) parts.push_back(with_exponent(a.str(), e));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

std::string MeroFactor::str() const {
  std::string base;
  if (const auto* c = std::get_if<Cyclotomic>(&kind)) {
    base = std::string("(1 ") + (c->sign > 0 ? "-" : "+") + " q^-(" + affine(c->a, c->b) + "))";
  } else if (const auto* g = std::get_if<GammaSym>(&kind)) {
    base = "gamma(" + affine(g->a, g->b) + ", " + g->label + (g->conj_psi ? ", psibar)" : ")");
  } else {
    base = "[" + std::get<ConstSym>(kind).value.str() + "]";
  }
  return with_exponent(base, exponent);
}

void MeroExpr::push(MeroFactor f) {
  if (f.exponent == 0) return;
  if (const auto* c = std::get_if<Cyclotomic>(&f.kind)) {
    if (c->sign != 1 && c->sign != -1) throw InvariantViolation("cyclotomic sign must be +1 or -1");
    if (c->a == 0 && c->b == 0 && c->sign == 1) throw InvariantViolation("identically zero cyclotomic factor");
  }
  if (const auto* k = std::get_if<ConstSym>(&f.kind)) {
    if (k->value.is_zero()) throw InvariantViolation("zero constant factor");
  }
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->kind == f.kind) {
      it->exponent += f.exponent;
      if (it->exponent == 0) factors_.erase(it);
      return;
    }
  }
  factors_.push_back(std::move(f));
}

MeroExpr MeroExpr::cyclo(Rational a, Rational b, int sign, int exponent) {
  MeroExpr e;
  e.push(MeroFactor{Cyclotomic{std::move(a), std::move(b), sign}, exponent});
  return e;
}

MeroExpr MeroExpr::gamma(std::string label, Rational a, Rational b, bool conj_psi, int exponent) {
  MeroExpr e;
  e.push(MeroFactor{GammaSym{std::move(label), conj_psi, std::move(a), std::move(b)}, exponent});
  return e;
}

MeroExpr MeroExpr::constant(Coefficient c, int exponent) {
  MeroExpr e;
  e.push(MeroFactor{ConstSym{std::move(c)}, exponent});
  return e;
}

MeroExpr operator*(const MeroExpr& x, const MeroExpr& y) {
  MeroExpr out = x;
  for (const auto& f : y.factors_) out.push(f);
  return out;
}

MeroExpr MeroExpr::inverse() const { return pow(-1); }

MeroExpr MeroExpr::pow(int e) const {
  MeroExpr out;
  for (auto f : factors_) {
    f.exponent *= e;
    out.push(std::move(f));
  }
  return out;
}

bool MeroExpr::has_gamma() const {
  for (const auto& f : factors_)
    if (std::holds_alternative<GammaSym>(f.kind)) return true;
  return false;
}

long double MeroExpr::eval(long double q, long double s) const {
  long double v = 1;
  for (const auto& f : factors_) {
    long double base = 0;
    if (const auto* c = std::get_if<Cyclotomic>(&f.kind)) {
      const long double x = -(to_ld(c->a) * s + to_ld(c->b)) * std::log(q);
      base = c->sign == 1 ? -std::expm1(x) : 1 + std::exp(x);
    } else if (const auto* k = std::get_if<ConstSym>(&f.kind)) {
      base = k->value.eval(q);
    } else {
      throw InputError("gamma symbols have no numerical value");
    }
    v *= std::pow(base, static_cast<long double>(f.exponent));
  }
  return v;
}

std::string MeroExpr::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " * " : "") + factors_[i].str();
  return out;
}

void GammaAxioms::declare_label(const std::string& label) { decl_[label]; }

void GammaAxioms::declare(const std::string& label, const Rational& point, int order) {
  auto& pts = decl_[label];
  if (order == 0) return;
  auto [it, inserted] = pts.emplace(point, order);
  if (!inserted && it->second != order)
    throw InputError("conflicting declarations for '" + label + "' at " + to_string(point));
}

int GammaAxioms::order_at(const std::string& label, const Rational& point) const {
  const auto it = decl_.find(label);
  if (it == decl_.end()) throw MissingDeclarationError(label);
  const auto p = it->second.find(point);
  return p == it->second.end() ? 0 : p->second;
}

std::string level_label(int i, bool contragredient) {
  return std::string(contragredient ? "sigma~" : "sigma") + ":r_" + std::to_string(i);
}

GammaAxioms standard_axioms(int m_ls, int j) {
  GammaAxioms ax;
  for (int i = 1; i <= m_ls; ++i) {
    ax.declare_label(level_label(i, false));
    ax.declare_label(level_label(i, true));
  }
  ax.declare_label("sigma:Ad");
  ax.declare(level_label(j, false), Rational(1), 1);
  return ax;
}

LaurentLeading laurent_leading(const MeroExpr& expr, const Rational& s0, const GammaAxioms& axioms) {
  LaurentLeading out;
  for (const auto& f : expr.factors()) {
    const int e = f.exponent;
    if (const auto* c = std::get_if<Cyclotomic>(&f.kind)) {
      const Rational x = c->a * s0 + c->b;
      if (x == 0) {
        if (c->sign == 1) {
          // 1 - q^{-a(s - s0)} ~ a log q (s - s0)
          out.order += e;
          out.coeff *= (Coefficient(c->a) * Coefficient::log_q()).pow(e);
        } else {
          out.coeff *= Coefficient(rpow(Rational(2), e));
        }
      } else if (x > 0) {
        out.coeff *= c->sign == 1 ? Coefficient::cyclo_minus(x, e) : Coefficient::cyclo_plus(x, e);
      } else {
        // 1 -+ q^{y} = -+ q^{y} (1 -+ q^{-y}) with y = -x > 0
        const Rational y = -x;
        Coefficient v = Coefficient::q_power(y);
        if (c->sign == 1) {
          v *= Coefficient(Rational(-1)) * Coefficient::cyclo_minus(y);
        } else {
          v *= Coefficient::cyclo_plus(y);
        }
        out.coeff *= v.pow(e);
      }
    } else if (const auto* g = std::get_if<GammaSym>(&f.kind)) {
      const Rational u0 = g->a * s0 + g->b;
      const int k = axioms.order_at(g->label, u0);
      Coefficient v;
      if (k != 0) {
        if (g->a == 0) throw InvariantViolation("constant gamma factor sits on a declared pole or zero");
        // gamma(u) ~ L (u - u0)^{-k} and u - u0 = a (s - s0)
        out.order += -k * e;
        v = Coefficient::atom(AtomKind::GammaLeading, g->label, u0) * Coefficient(rpow(g->a, -k));
      } else {
        v = Coefficient::atom(AtomKind::GammaValue, g->label, u0);
      }
      if (g->conj_psi) v *= Coefficient::atom(AtomKind::Unit, g->label);
      out.coeff *= v.pow(e);
    } else {
      out.coeff *= std::get<ConstSym>(f.kind).value.pow(e);
    }
  }
  return out;
}

std::optional<Coefficient> residue(const MeroExpr& expr, const Rational& s0, const GammaAxioms& axioms) {
  const LaurentLeading l = laurent_leading(expr, s0, axioms);
  if (l.order != -1) return std::nullopt;
  return l.coeff;
}

MeroExpr rescale(const MeroExpr& expr, const Rational& lambda) {
  if (lambda == 0) throw InputError("rescale factor must be nonzero");
  MeroExpr out;
  for (const auto& f : expr.factors()) {
    if (const auto* c = std::get_if<Cyclotomic>(&f.kind))
      out = out * MeroExpr::cyclo(c->a * lambda, c->b, c->sign, f.exponent);
    else if (const auto* g = std::get_if<GammaSym>(&f.kind))
      out = out * MeroExpr::gamma(g->label, g->a * lambda, g->b, g->conj_psi, f.exponent);
    else
      out = out * MeroExpr::constant(std::get<ConstSym>(f.kind).value, f.exponent);
  }
  return out;
}

MeroExpr mu_expression(int m_ls) {
  if (m_ls < 1) throw InputError("m_LS must be at least 1");
  MeroExpr e;
  for (int i = 1; i <= m_ls; ++i) {
    e = e * MeroExpr::gamma(level_label(i, false), Rational(i), 0, true);
    e = e * MeroExpr::gamma(level_label(i, true), Rational(-i), 0);
  }
  return e;
}

namespace {

MeroExpr level_product(int m_ls, const Rational& s0) {
  MeroExpr e;
  for (int i = 1; i <= m_ls; ++i) {
    e = e * MeroExpr::gamma(level_label(i, false), 1, s0 * i);
    e = e * MeroExpr::gamma(level_label(i, true), 1, -s0 * i);
  }
  return e;
}

MeroExpr trivial_gamma() { return MeroExpr::cyclo(1, 0) * MeroExpr::cyclo(-1, 1, 1, -1); }

}  // namespace

MeroExpr adjoint_gamma_expression(int m_ls, const Rational& s0) {
  if (m_ls < 1) throw InputError("m_LS must be at least 1");
  return trivial_gamma() * MeroExpr::gamma("sigma:Ad", 1, 0) * level_product(m_ls, s0);
}

MeroExpr adjoint_quotient_expression(int m_ls, const Rational& s0) {
  return adjoint_gamma_expression(m_ls, s0) * MeroExpr::gamma("sigma:Ad", 1, 0).inverse();
}

namespace {

std::vector<std::string> symbols_of(const Coefficient& c) {
  std::vector<std::string> out;
  if (c.q_exp() != 0) out.push_back("q^(" + to_string(c.q_exp()) + ")");
  for (const auto& [a, e] : c.atoms()) out.push_back(with_exponent(a.str(), e));
  return out;
}

std::string order_text(const LaurentLeading& l) {
  return "order " + std::to_string(l.order) + ", leading coefficient " + l.coeff.str();
}

}  // namespace

DerivationReport derive_main_theorem(int m_ls, int j, const StructureConstants& sc, const GammaAxioms& axioms) {
  if (m_ls < 1) throw InputError("m_LS must be at least 1");
  if (j != 1 && j != 2) throw InputError("j must be 1 or 2");
  DerivationReport r;
  r.m_ls = m_ls;
  r.j = j;
  const Rational s0(1, j);
  const Rational hc = sc.heiermann_constant();
  r.expected = hc / j;
  const int e = sc.dim_a_m - sc.dim_a_g;

  const Coefficient gamma_gm = Coefficient::named("gamma(G/M)");
  const Coefficient log_q = Coefficient::log_q();

  // Measure conversion between the two Haar normalizations.
  const Coefficient deg_ratio = Coefficient::named("deg(pi)/deg(sigma)");
  Coefficient d_ratio = deg_ratio * gamma_gm.pow(-1) * Coefficient::cyclo_minus(1, -e);
  r.steps.push_back({"measure quotient", "Prop 3.1", "d(pi)/d(sigma)", d_ratio.str()});

  // mu as a product over the levels, and its residue at s0.
  const MeroExpr mu = mu_expression(m_ls);
  const LaurentLeading mu_lead = laurent_leading(mu, s0, axioms);
  r.steps.push_back({"mu as a product of gamma factors", "Thm 4.2", "mu(sigma x chi_{s alpha~})",
                     mu.str() + "; at s = " + to_string(s0) + ": " + order_text(mu_lead)});
  if (mu_lead.order != -1) {
    r.failure = "mu has order " + std::to_string(mu_lead.order) + " at s = " + to_string(s0) +
                ", so there is no simple pole to take a residue of";
    r.surviving = symbols_of(mu_lead.coeff);
    return r;
  }
  const Coefficient res_mu = mu_lead.coeff;

  // Residue formula for deg(pi)/deg(sigma); gamma(G/M) cancels against the measure factor.
  const Coefficient deg_formula = gamma_gm * log_q * Coefficient(hc) * res_mu;
  r.steps.push_back({"residue formula", "Thm 4.8", "deg(pi)/deg(sigma)",
                     (gamma_gm * log_q * Coefficient(hc) * Coefficient::named("Res mu")).str()});
  d_ratio = d_ratio * deg_ratio.pow(-1) * deg_formula;
  r.steps.push_back({"substitute into the measure quotient", "Thm 4.8", "d(pi)/d(sigma)", d_ratio.str()});

  // Adjoint gamma quotient at s = 0, computed two ways.
  const MeroExpr full = adjoint_gamma_expression(m_ls, s0);
  const MeroExpr quot = adjoint_quotient_expression(m_ls, s0);
  r.steps.push_back({"cancel gamma(s, sigma, Ad)", "Cor 5.6", full.str(), quot.str()});
  const LaurentLeading ad = laurent_leading(quot, 0, axioms);
  if (ad.order != 0) {
    r.failure = "adjoint quotient has order " + std::to_string(ad.order) + " at s = 0";
    r.surviving = symbols_of(ad.coeff);
    return r;
  }
  const auto res_prod = residue(level_product(m_ls, s0), 0, axioms);
  const LaurentLeading triv = laurent_leading(trivial_gamma(), 0, axioms);
  if (!res_prod || triv.order != 1 || triv.coeff * *res_prod != ad.coeff) {
    r.failure = "adjoint quotient does not factor as (log q/(1 - q^-1)) * Res";
    r.surviving = symbols_of(ad.coeff);
    return r;
  }
  r.steps.push_back({"adjoint gamma quotient at s = 0", "Cor 5.6", "gamma(0, pi, Ad)/gamma(0, sigma, Ad)",
                     triv.coeff.str() + " * Res_{s=0} = " + ad.coeff.str()});

  // Rescaling law for the pole-carrying factor of mu.
  for (const auto& f : mu.factors()) {
    const auto* g = std::get_if<GammaSym>(&f.kind);
    if (!g || axioms.order_at(g->label, g->a * s0 + g->b) <= 0) continue;
    const MeroExpr base = MeroExpr::gamma(g->label, 1, g->b, g->conj_psi);
    const auto lhs = residue(rescale(base, g->a), s0, axioms);
    const auto rhs = residue(base, g->a * s0, axioms);
    if (!lhs || !rhs || *lhs != Coefficient(Rational(1) / g->a) * *rhs) {
      r.failure = "rescaling law fails for " + f.str();
      return r;
    }
    r.steps.push_back({"residue rescaling", "Thm 6.1", "Res_{s=" + to_string(s0) + "} " + f.str(),
                       "(1/" + to_string(g->a) + ") * Res_{u=" + to_string(g->a * s0) + "} gamma(u, " + g->label +
                           ") = " + lhs->str()});
  }

  const Coefficient quotient = (d_ratio / ad.coeff).abs_normalized();
  r.steps.push_back({"absolute values and cancellation", "Thm 6.1",
                     "|d(pi)/d(sigma)| / |gamma(0, pi, Ad)/gamma(0, sigma, Ad)|", quotient.str()});
  r.surviving = symbols_of(quotient);
  if (!quotient.is_rational()) {
    r.failure = "symbols survive the cancellation";
    return r;
  }
  r.constant = quotient.scalar();
  if (*r.constant != r.expected)
    r.failure = "surviving constant " + to_string(*r.constant) + " differs from " + to_string(r.expected);
  return r;
}

DerivationReport derive_main_theorem(int m_ls, int j, const StructureConstants& sc) {
  return derive_main_theorem(m_ls, j, sc, standard_axioms(m_ls, j));
}

nlohmann::ordered_json to_json(const Coefficient& c) {
  nlohmann::ordered_json j;
  j["scalar"] = to_string(c.scalar());
  j["qExponent"] = to_string(c.q_exp());
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  for (const auto& [a, e] : c.atoms()) atoms.push_back({{"symbol", a.str()}, {"exponent", e}});
  j["atoms"] = atoms;
  j["text"] = c.str();
  return j;
}

nlohmann::ordered_json to_json(const DerivationReport& r) {
  nlohmann::ordered_json j;
  j["mLS"] = r.m_ls;
  j["j"] = r.j;
  j["expected"] = to_string(r.expected);
  j["constant"] = r.constant ? nlohmann::ordered_json(to_string(*r.constant)) : nlohmann::ordered_json();
  j["surviving"] = r.surviving;
  j["pass"] = r.success();
  if (!r.success()) j["failure"] = r.failure;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"rule", s.rule}, {"cites", s.cites}, {"before", s.before}, {"after", s.after}});
  j["steps"] = steps;
  return j;
}

namespace {

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_markdown(const DerivationReport& r) {
  std::ostringstream os;
  os << "### derivation (m_LS = " << r.m_ls << ", j = " << r.j << ")\n\n";
  os << "| # | rule | cites | before | after |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    os << "| " << i + 1 << " | " << s.rule << " | " << s.cites << " | `" << md_cell(s.before) << "` | `"
       << md_cell(s.after) << "` |\n";
  }
  os << "\nexpected constant: " << to_string(r.expected) << "\n";
  if (r.constant) os << "surviving constant: " << to_string(*r.constant) << "\n";
  if (!r.surviving.empty()) {
    os << "surviving symbols:";
    for (const auto& s : r.surviving) os << " `" << s << "`";
    os << "\n";
  }
  os << "result: " << (r.success() ? "pass" : "FAIL (" + r.failure + ")") << "\n";
  return os.str();
}

}  // namespace fdq
