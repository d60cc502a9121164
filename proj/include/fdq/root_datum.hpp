#pragma once

#include "fdq/rational.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdq {

enum class LengthClass { Short, Intermediate, Long };
std::string_view to_string(LengthClass c);

// a(i, j) = <alpha_j, alpha_i^vee>: rows are indexed by coroots.
class CartanMatrix {
 public:
  CartanMatrix() = default;

  // Validates shape, the diagonal, signs and the zero pattern. rootDims, when
  // given, lists dim U_beta per positive root in enumeration order.
  static CartanMatrix from_rows(std::vector<IntVec> rows, IntVec root_dims = {});

  int rank() const { return static_cast<int>(rows_.size()); }
  int operator()(int i, int j) const { return rows_[i][j]; }
  const std::vector<IntVec>& rows() const { return rows_; }
  const IntVec& root_dims() const { return root_dims_; }

  CartanMatrix principal_submatrix(const std::vector<int>& subset) const;

  // d_i = (alpha_i, alpha_i)/2, normalized so the smallest value in each
  // connected component is 1. Throws InputError if not symmetrizable.
  std::vector<Rational> symmetrizer() const;

  // Connected components of the Dynkin diagram, each sorted ascending.
  std::vector<std::vector<int>> components() const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  std::vector<IntVec> rows_;
  IntVec root_dims_;
};

struct Root {
  IntVec coords;  // simple-root basis
  bool positive = true;
  LengthClass length = LengthClass::Long;

  int height() const;
};

struct Coroot {
  IntVec coords;  // simple-coroot basis
  bool operator==(const Coroot&) const = default;
};

// Root indices below are "signed": 0..N-1 are the positive roots in
// enumeration order, N..2N-1 their negatives in the same order.
class RootSystem {
 public:
  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return 2 * positive_.size(); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& positive_root(std::size_t k) const { return positive_.at(k); }
  const Coroot& coroot(std::size_t k) const { return coroots_.at(k); }
  // dim U_beta for positive root k (1 for split data).
  int root_dim(std::size_t k) const;

  std::size_t simple_index(int i) const { return simple_.at(i); }
  std::optional<std::size_t> find_positive(const IntVec& coords) const;
  // Signed index of a root given by coordinates; nullopt if not a root.
  std::optional<std::size_t> find_root(const IntVec& coords) const;
  IntVec root_coords(std::size_t signed_index) const;
  Coroot coroot_of(std::size_t signed_index) const;

  IntVec reflect_root(int i, const IntVec& coords) const;
  IntVec reflect_coroot(int i, const IntVec& coords) const;

  // <root, coroot> for integer coordinates in the two simple bases.
  int pair(const IntVec& root_coords, const IntVec& coroot_coords) const;

  // False when some beta and 2*beta are both roots.
  bool is_reduced() const;

  std::size_t component_of(std::size_t k) const { return component_.at(k); }

 private:
  friend RootSystem build_root_system(const CartanMatrix&, std::size_t);
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<Coroot> coroots_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> component_;
};

inline constexpr std::size_t kDefaultRootBound = 10000;

// Reflection closure from the simple roots. Positive roots are ordered by
// height, then by descending lexicographic coordinates (alpha_1 first).
RootSystem build_root_system(const CartanMatrix& cartan, std::size_t max_roots = kDefaultRootBound);

// <x, c> for x in X (x) Q written in the simple-root basis and c in the
// simple-coroot basis. Throws InputError on rank mismatch.
Rational pairing(const RootSystem& rs, const RatVec& x, const IntVec& c);

// Column-major action on the simple-root basis: entry (i, j) is the
// coefficient of alpha_i in w(alpha_j).
class WeylMatrix {
 public:
  explicit WeylMatrix(int rank = 0);
  static WeylMatrix identity(int rank);
  static WeylMatrix simple_reflection(const CartanMatrix& cartan, int i);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return data_[i * rank_ + j]; }
  int& operator()(int i, int j) { return data_[i * rank_ + j]; }
  IntVec apply(const IntVec& coords) const;
  WeylMatrix operator*(const WeylMatrix& other) const;
  bool operator==(const WeylMatrix&) const = default;
  const std::vector<int>& data() const { return data_; }

 private:
  int rank_;
  std::vector<int> data_;
};

class WeylElement {
 public:
  static WeylElement from_word(const RootSystem& rs, std::vector<int> word);
  // Recovers a reduced word by stripping right descents.
  static WeylElement from_matrix(const RootSystem& rs, const WeylMatrix& m);

  // w = s_{word[0]} s_{word[1]} ... s_{word[k-1]}.
  const std::vector<int>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::size_t act(std::size_t signed_index) const { return perm_.at(signed_index); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  const WeylMatrix& matrix() const { return matrix_; }

 private:
  std::vector<int> word_;
  std::vector<std::size_t> perm_;
  WeylMatrix matrix_;
};

// theta is a subset of simple-root indices. Returns w0 * w0(theta): for
// theta = Delta - {alpha} this is the element with w(theta) in Delta and
// w(alpha) < 0; for theta empty it is the longest element of W.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& theta);

// Order of the parabolic subgroup W_J by the orbit-stabilizer recursion
// |W_J| = |W_J . omega_j| * |W_{J - j}|.
Integer weyl_group_order(const RootSystem& rs, const std::vector<int>& subset);
Integer weyl_group_order(const RootSystem& rs);

// Every element of W as a matrix, by breadth-first closure. Throws InputError
// if more than `limit` elements are produced.
std::vector<WeylMatrix> enumerate_weyl_group(const RootSystem& rs, std::size_t limit = 1'000'000);

// Character lattice X = Z^n with the simple roots and coroots embedded. The
// pairing X x X^vee -> Z is the dot product of coordinates.
struct RootDatum {
  std::string name;
  RootSystem system;
  int lattice_rank = 0;
  std::vector<IntVec> root_embed;    // alpha_i in X
  std::vector<IntVec> coroot_embed;  // alpha_i^vee in X^vee

  int semisimple_rank() const { return system.rank(); }
  IntVec embed_root(const IntVec& root_coords) const;
  IntVec embed_coroot(const IntVec& coroot_coords) const;
  // Root datum of the standard Levi with simple roots theta, same lattice.
  RootDatum levi(const std::vector<int>& theta) const;
};

// Validates <root_embed[i], coroot_embed[j]> = a(j, i).
RootDatum make_root_datum(std::string name, RootSystem system, int lattice_rank,
                          std::vector<IntVec> root_embed, std::vector<IntVec> coroot_embed);

RootDatum adjoint_datum(std::string name, RootSystem system);
RootDatum simply_connected_datum(std::string name, RootSystem system);
RootDatum gl_datum(int n);

// Bourbaki labelling. family in A..G.
CartanMatrix cartan_of_type(char family, int rank);

// "G2", "A3", "E8" (adjoint datum), "SL3" (simply connected A2), "PGL3",
// "GL4". Throws InputError for unknown names.
RootDatum builtin_datum(std::string_view name);
bool is_builtin_name(std::string_view name);

// {"cartan": [[...]], "latticeRank": n, "rootEmbed": [...], "corootEmbed": [...],
//  "rootDims": [...], "name": "..."}. Without an embedding the adjoint datum is used.
RootDatum root_datum_from_json(const nlohmann::json& j);
nlohmann::json root_datum_to_json(const RootDatum& d);

// Resolves "alpha"/"beta" (rank 2), "a<k>" (1-based) or a 0-based integer.
int parse_simple_root(const RootSystem& rs, std::string_view text);

// Human-readable root label, e.g. "3a+2b" for G2 or "a1+a2".
std::string root_label(const RootSystem& rs, const IntVec& coords, bool coroot = false);

}  // namespace fdq
