#include "fdq/root_datum.hpp"

#include "fdq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace fdq {

std::string_view to_string(LengthClass c) {
  switch (c) {
    case LengthClass::Short: return "short";
    case LengthClass::Intermediate: return "intermediate";
    case LengthClass::Long: return "long";
  }
  return "long";
}

// ---------------------------------------------------------------------------
// CartanMatrix

CartanMatrix CartanMatrix::from_rows(std::vector<IntVec> rows, IntVec root_dims) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 2) throw InputError("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows[i][j] > 0) throw InputError("Cartan matrix has a positive off-diagonal entry");
      if ((rows[i][j] == 0) != (rows[j][i] == 0))
        throw InputError("Cartan matrix zero pattern is not symmetric");
    }
  }
  for (int d : root_dims) {
    if (d < 1) throw InputError("rootDims entries must be positive");
  }
  CartanMatrix m;
  m.rows_ = std::move(rows);
  m.root_dims_ = std::move(root_dims);
  return m;
}

CartanMatrix CartanMatrix::principal_submatrix(const std::vector<int>& subset) const {
  std::vector<IntVec> rows;
  rows.reserve(subset.size());
  for (int i : subset) {
    IntVec row;
    for (int j : subset) row.push_back(rows_.at(i).at(j));
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(rows));
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  const int n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> members;
    std::deque<int> queue{start};
    comp[start] = static_cast<int>(out.size());
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j != i && rows_[i][j] != 0 && comp[j] < 0) {
          comp[j] = comp[start];
          queue.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<Rational> CartanMatrix::symmetrizer() const {
  const int n = rank();
  std::vector<Rational> d(n, Rational(0));
  for (const auto& members : components()) {
    d[members.front()] = 1;
    std::deque<int> queue{members.front()};
    std::vector<bool> seen(n, false);
    seen[members.front()] = true;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : members) {
        if (j == i || rows_[i][j] == 0) continue;
        // d_i a(i,j) = d_j a(j,i)
        const Rational dj = d[i] * rows_[i][j] / rows_[j][i];
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational smallest = d[members.front()];
    for (int i : members) smallest = std::min(smallest, d[i]);
    for (int i : members) d[i] /= smallest;
  }
  return d;
}

// ---------------------------------------------------------------------------
// RootSystem

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

int RootSystem::root_dim(std::size_t k) const {
  if (cartan_.root_dims().empty()) return 1;
  return cartan_.root_dims().at(k);
}

std::optional<std::size_t> RootSystem::find_positive(const IntVec& coords) const {
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (positive_[k].coords == coords) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::find_root(const IntVec& coords) const {
  if (auto k = find_positive(coords)) return k;
  IntVec neg(coords);
  for (int& x : neg) x = -x;
  if (auto k = find_positive(neg)) return *k + positive_.size();
  return std::nullopt;
}

IntVec RootSystem::root_coords(std::size_t signed_index) const {
  const std::size_t n = positive_.size();
  if (signed_index < n) return positive_.at(signed_index).coords;
  IntVec v = positive_.at(signed_index - n).coords;
  for (int& x : v) x = -x;
  return v;
}

Coroot RootSystem::coroot_of(std::size_t signed_index) const {
  const std::size_t n = positive_.size();
  if (signed_index < n) return coroots_.at(signed_index);
  Coroot c = coroots_.at(signed_index - n);
  for (int& x : c.coords) x = -x;
  return c;
}

int RootSystem::pair(const IntVec& root_coords, const IntVec& coroot_coords) const {
  const int n = rank();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (coroot_coords[i] == 0) continue;
    int inner = 0;
    for (int j = 0; j < n; ++j) inner += root_coords[j] * cartan_(i, j);
    total += coroot_coords[i] * inner;
  }
  return total;
}

IntVec RootSystem::reflect_root(int i, const IntVec& coords) const {
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += coords[j] * cartan_(i, j);
  IntVec out(coords);
  out[i] -= c;
  return out;
}

IntVec RootSystem::reflect_coroot(int i, const IntVec& coords) const {
  int c = 0;
  for (int k = 0; k < rank(); ++k) c += coords[k] * cartan_(k, i);
  IntVec out(coords);
  out[i] -= c;
  return out;
}

bool RootSystem::is_reduced() const {
  for (const auto& r : positive_) {
    IntVec doubled(r.coords);
    for (int& x : doubled) x *= 2;
    if (find_positive(doubled)) return false;
  }
  return true;
}

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

RootSystem build_root_system(const CartanMatrix& cartan, std::size_t max_roots) {
  const int n = cartan.rank();
  const auto d = cartan.symmetrizer();
  RootSystem rs;
  rs.cartan_ = cartan;

  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  std::unordered_set<IntVec, VecHash> seen;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    coroots.push_back(e);
    seen.insert(e);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntVec next = rs.reflect_root(i, roots[head]);
      if (next == roots[head]) continue;
      const bool nonneg = std::all_of(next.begin(), next.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(next.begin(), next.end(), [](int x) { return x <= 0; });
      if (!nonneg && !nonpos) throw NotFiniteTypeError();
      if (nonpos) continue;
      if (seen.insert(next).second) {
        coroots.push_back(rs.reflect_coroot(i, coroots[head]));
        roots.push_back(std::move(next));
        if (roots.size() > max_roots) throw NotFiniteTypeError();
      }
    }
  }

  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [&](std::size_t k) { return std::accumulate(roots[k].begin(), roots[k].end(), 0); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return roots[a] > roots[b];
  });

  // Dynkin component of each simple root, then squared lengths per component.
  const auto comps = cartan.components();
  std::vector<std::size_t> comp_of_simple(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int i : comps[c]) comp_of_simple[i] = c;
  }
  auto norm2 = [&](const IntVec& v) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < n; ++j) total += Rational(v[i] * v[j]) * d[i] * cartan(i, j);
    }
    return total;
  };

  std::vector<std::set<Rational>> lengths(comps.size());
  std::vector<Rational> norms(roots.size());
  std::vector<std::size_t> comp_of_root(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    norms[k] = norm2(roots[k]);
    std::size_t c = 0;
    for (int i = 0; i < n; ++i) {
      if (roots[k][i] != 0) {
        c = comp_of_simple[i];
        break;
      }
    }
    comp_of_root[k] = c;
    lengths[c].insert(norms[k]);
  }

  for (std::size_t k : order) {
    Root r;
    r.coords = roots[k];
    r.positive = true;
    const auto& ls = lengths[comp_of_root[k]];
    const auto rank_in = std::distance(ls.begin(), ls.find(norms[k]));
    if (ls.size() == 1 || rank_in == static_cast<long>(ls.size()) - 1) {
      r.length = LengthClass::Long;
    } else if (rank_in == 0) {
      r.length = LengthClass::Short;
    } else {
      r.length = LengthClass::Intermediate;
    }
    rs.positive_.push_back(std::move(r));
    rs.coroots_.push_back(Coroot{coroots[k]});
    rs.component_.push_back(comp_of_root[k]);
  }
  rs.simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rs.simple_[i] = *rs.find_positive(e);
  }
  if (!cartan.root_dims().empty() && cartan.root_dims().size() != rs.positive_.size())
    throw InputError("rootDims must list one entry per positive root (" +
                     std::to_string(rs.positive_.size()) + ")");
  return rs;
}

Rational pairing(const RootSystem& rs, const RatVec& x, const IntVec& c) {
  const int n = rs.rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(c.size()) != n)
    throw InputError("pairing: rank mismatch");
  Rational total = 0;
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    Rational inner = 0;
    for (int j = 0; j < n; ++j) inner += x[j] * rs.cartan()(i, j);
    total += inner * c[i];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Weyl group

WeylMatrix::WeylMatrix(int rank) : rank_(rank), data_(static_cast<std::size_t>(rank) * rank, 0) {}

WeylMatrix WeylMatrix::identity(int rank) {
  WeylMatrix m(rank);
  for (int i = 0; i < rank; ++i) m(i, i) = 1;
  return m;
}

WeylMatrix WeylMatrix::simple_reflection(const CartanMatrix& cartan, int i) {
  WeylMatrix m = identity(cartan.rank());
  // s_i(alpha_j) = alpha_j - a(i, j) alpha_i
  for (int j = 0; j < cartan.rank(); ++j) m(i, j) -= cartan(i, j);
  return m;
}

IntVec WeylMatrix::apply(const IntVec& coords) const {
  IntVec out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += (*this)(i, j) * coords[j];
    out[i] = s;
  }
  return out;
}

WeylMatrix WeylMatrix::operator*(const WeylMatrix& other) const {
  WeylMatrix out(rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int k = 0; k < rank_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rank_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> permutation_of(const RootSystem& rs, const WeylMatrix& m) {
  std::vector<std::size_t> perm(rs.num_roots());
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    const auto image = rs.find_root(m.apply(rs.root_coords(k)));
    if (!image) throw InternalError("Weyl element does not permute the roots");
    perm[k] = *image;
  }
  return perm;
}

bool is_positive(const IntVec& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

IntVec unit(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

WeylElement WeylElement::from_word(const RootSystem& rs, std::vector<int> word) {
  WeylElement w;
  w.matrix_ = WeylMatrix::identity(rs.rank());
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw InputError("Weyl word index out of range");
    w.matrix_ = w.matrix_ * WeylMatrix::simple_reflection(rs.cartan(), i);
  }
  w.word_ = std::move(word);
  w.perm_ = permutation_of(rs, w.matrix_);
  return w;
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, const WeylMatrix& m) {
  const int n = rs.rank();
  std::vector<int> reversed;
  WeylMatrix u = m;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      if (!is_positive(u.apply(unit(n, i)))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    reversed.push_back(descent);
    u = u * WeylMatrix::simple_reflection(rs.cartan(), descent);
    if (reversed.size() > rs.num_positive()) throw InternalError("descent loop did not terminate");
  }
  if (!(u == WeylMatrix::identity(n))) throw InternalError("matrix is not a Weyl group element");
  std::reverse(reversed.begin(), reversed.end());
  WeylElement w = from_word(rs, std::move(reversed));
  if (!(w.matrix_ == m)) throw InternalError("reduced word does not reproduce the matrix");
  return w;
}

namespace {

// Longest element of W_J as a matrix: right-multiply by s_i while w(alpha_i) > 0.
WeylMatrix longest_in(const RootSystem& rs, const std::vector<int>& subset) {
  const int n = rs.rank();
  WeylMatrix w = WeylMatrix::identity(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : subset) {
      if (is_positive(w.apply(unit(n, i)))) {
        w = w * WeylMatrix::simple_reflection(rs.cartan(), i);
        grew = true;
      }
    }
  }
  return w;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& theta) {
  for (int i : theta) {
    if (i < 0 || i >= rs.rank()) throw InputError("theta is not a subset of the simple roots");
  }
  const WeylMatrix w0 = longest_in(rs, all_indices(rs.rank()));
  const WeylMatrix w0_theta = longest_in(rs, theta);
  return WeylElement::from_matrix(rs, w0 * w0_theta);
}

namespace {

// Orbit of the fundamental weight omega_j under the reflections in J, in
// fundamental-weight coordinates: s_i(lambda)_k = lambda_k - lambda_i a(k, i).
std::size_t weight_orbit_size(const RootSystem& rs, const std::vector<int>& subset, int j) {
  const int n = rs.rank();
  std::unordered_set<IntVec, VecHash> seen;
  std::vector<IntVec> queue{unit(n, j)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i : subset) {
      const int li = queue[head][i];
      if (li == 0) continue;
      IntVec next = queue[head];
      for (int k = 0; k < n; ++k) next[k] -= li * rs.cartan()(k, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue.size();
}

}  // namespace

Integer weyl_group_order(const RootSystem& rs, const std::vector<int>& subset) {
  if (subset.empty()) return 1;
  // Pick the node of the sub-diagram whose fundamental orbit is smallest
  // among its leaves; any node would do.
  std::vector<int> leaves;
  for (int j : subset) {
    int degree = 0;
    for (int i : subset) {
      if (i != j && rs.cartan()(i, j) != 0) ++degree;
    }
    if (degree <= 1) leaves.push_back(j);
  }
  if (leaves.empty()) leaves = subset;
  int best = leaves.front();
  std::size_t best_size = weight_orbit_size(rs, subset, best);
  for (std::size_t t = 1; t < leaves.size(); ++t) {
    const std::size_t s = weight_orbit_size(rs, subset, leaves[t]);
    if (s < best_size) {
      best_size = s;
      best = leaves[t];
    }
  }
  std::vector<int> rest;
  for (int i : subset) {
    if (i != best) rest.push_back(i);
  }
  return Integer(best_size) * weyl_group_order(rs, rest);
}

Integer weyl_group_order(const RootSystem& rs) { return weyl_group_order(rs, all_indices(rs.rank())); }

namespace {

struct MatrixHash {
  std::size_t operator()(const WeylMatrix& m) const noexcept { return VecHash{}(m.data()); }
};

}  // namespace

std::vector<WeylMatrix> enumerate_weyl_group(const RootSystem& rs, std::size_t limit) {
  const int n = rs.rank();
  std::vector<WeylMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(WeylMatrix::simple_reflection(rs.cartan(), i));
  std::unordered_set<WeylMatrix, MatrixHash> seen;
  std::vector<WeylMatrix> elements{WeylMatrix::identity(n)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      WeylMatrix next = s * elements[head];
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limit) throw InputError("Weyl group larger than enumeration limit");
      }
    }
  }
  return elements;
}

// ---------------------------------------------------------------------------
// RootDatum

IntVec RootDatum::embed_root(const IntVec& root_coords) const {
  IntVec x(lattice_rank, 0);
  for (int i = 0; i < semisimple_rank(); ++i) {
    for (int k = 0; k < lattice_rank; ++k) x[k] += root_coords[i] * root_embed[i][k];
  }
  return x;
}

IntVec RootDatum::embed_coroot(const IntVec& coroot_coords) const {
  IntVec x(lattice_rank, 0);
  for (int i = 0; i < semisimple_rank(); ++i) {
    for (int k = 0; k < lattice_rank; ++k) x[k] += coroot_coords[i] * coroot_embed[i][k];
  }
  return x;
}

RootDatum RootDatum::levi(const std::vector<int>& theta) const {
  std::vector<IntVec> roots, coroots;
  for (int i : theta) {
    roots.push_back(root_embed.at(i));
    coroots.push_back(coroot_embed.at(i));
  }
  return make_root_datum(name + "/levi", build_root_system(system.cartan().principal_submatrix(theta)),
                         lattice_rank, std::move(roots), std::move(coroots));
}

RootDatum make_root_datum(std::string name, RootSystem system, int lattice_rank,
                          std::vector<IntVec> root_embed, std::vector<IntVec> coroot_embed) {
  const int r = system.rank();
  if (lattice_rank < r) throw InputError("lattice rank is smaller than the semisimple rank");
  if (static_cast<int>(root_embed.size()) != r || static_cast<int>(coroot_embed.size()) != r)
    throw InputError("root/coroot embedding must list one vector per simple root");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(root_embed[i].size()) != lattice_rank ||
        static_cast<int>(coroot_embed[i].size()) != lattice_rank)
      throw InputError("embedding vector has the wrong length");
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      int p = 0;
      for (int k = 0; k < lattice_rank; ++k) p += root_embed[i][k] * coroot_embed[j][k];
      if (p != system.cartan()(j, i))
        throw InputError("embedding does not reproduce the Cartan matrix at (" + std::to_string(j) +
                         ", " + std::to_string(i) + ")");
    }
  }
  RootDatum d;
  d.name = std::move(name);
  d.system = std::move(system);
  d.lattice_rank = lattice_rank;
  d.root_embed = std::move(root_embed);
  d.coroot_embed = std::move(coroot_embed);
  return d;
}

RootDatum adjoint_datum(std::string name, RootSystem system) {
  // X = root lattice; X^vee = coweight lattice, alpha_j^vee = sum_i a(j, i) omega_i^vee.
  const int r = system.rank();
  std::vector<IntVec> roots, coroots;
  for (int i = 0; i < r; ++i) {
    roots.push_back(unit(r, i));
    coroots.push_back(system.cartan().rows()[i]);
  }
  return make_root_datum(std::move(name), std::move(system), r, std::move(roots), std::move(coroots));
}

RootDatum simply_connected_datum(std::string name, RootSystem system) {
  // X = weight lattice, alpha_i = sum_j a(j, i) omega_j; X^vee = coroot lattice.
  const int r = system.rank();
  std::vector<IntVec> roots, coroots;
  for (int i = 0; i < r; ++i) {
    IntVec v(r);
    for (int j = 0; j < r; ++j) v[j] = system.cartan()(j, i);
    roots.push_back(std::move(v));
    coroots.push_back(unit(r, i));
  }
  return make_root_datum(std::move(name), std::move(system), r, std::move(roots), std::move(coroots));
}

RootDatum gl_datum(int n) {
  if (n < 1) throw InputError("GL_n needs n >= 1");
  std::vector<IntVec> roots;
  for (int i = 0; i + 1 < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    roots.push_back(std::move(v));
  }
  std::vector<IntVec> rows;
  for (int i = 0; i + 1 < n; ++i) {
    IntVec row;
    for (int j = 0; j + 1 < n; ++j) {
      int p = 0;
      for (int k = 0; k < n; ++k) p += roots[i][k] * roots[j][k];
      row.push_back(p);
    }
    rows.push_back(std::move(row));
  }
  auto coroots = roots;
  return make_root_datum("GL" + std::to_string(n), build_root_system(CartanMatrix::from_rows(rows)), n,
                         std::move(roots), std::move(coroots));
}

CartanMatrix cartan_of_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto chain = [](int n) {
    std::vector<IntVec> a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  std::vector<IntVec> a;
  switch (family) {
    case 'A':
      if (rank < 1) break;
      a = chain(rank);
      break;
    case 'B':
      if (rank < 2) break;
      a = chain(rank);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) break;
      a = chain(rank);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 3) break;
      a = chain(rank);
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) break;
      a.assign(rank, IntVec(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (rank != 4) break;
      a = chain(4);
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      a[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) break;
      // alpha short (0), beta long (1): <beta, alpha^vee> = -3, <alpha, beta^vee> = -1
      a = {{2, -3}, {-1, 2}};
      break;
    default:
      break;
  }
  if (a.empty())
    throw InputError(std::string("unsupported type ") + family + std::to_string(rank));
  return CartanMatrix::from_rows(std::move(a));
}

namespace {

struct ParsedName {
  std::string prefix;
  int number = 0;
};

std::optional<ParsedName> split_name(std::string_view name) {
  std::size_t pos = 0;
  while (pos < name.size() && std::isalpha(static_cast<unsigned char>(name[pos]))) ++pos;
  if (pos == 0 || pos == name.size()) return std::nullopt;
  ParsedName p;
  p.prefix = std::string(name.substr(0, pos));
  for (char& c : p.prefix) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  const auto digits = name.substr(pos);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p.number);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return p;
}

}  // namespace

RootDatum builtin_datum(std::string_view name) {
  const auto parsed = split_name(name);
  if (!parsed) throw InputError("unknown group '" + std::string(name) + "'");
  const auto& [prefix, n] = *parsed;
  if (prefix == "GL") return gl_datum(n);
  if (prefix == "SL" && n >= 2)
    return simply_connected_datum("SL" + std::to_string(n), build_root_system(cartan_of_type('A', n - 1)));
  if (prefix == "PGL" && n >= 2)
    return adjoint_datum("PGL" + std::to_string(n), build_root_system(cartan_of_type('A', n - 1)));
  if (prefix.size() == 1 && prefix[0] >= 'A' && prefix[0] <= 'G')
    return adjoint_datum(prefix + std::to_string(n), build_root_system(cartan_of_type(prefix[0], n)));
  throw InputError("unknown group '" + std::string(name) + "'");
}

bool is_builtin_name(std::string_view name) {
  try {
    builtin_datum(name);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("cartan")) throw InputError("root datum JSON needs a \"cartan\" field");
    auto rows = j.at("cartan").get<std::vector<IntVec>>();
    IntVec dims;
    if (j.contains("rootDims")) dims = j.at("rootDims").get<IntVec>();
    auto system = build_root_system(CartanMatrix::from_rows(std::move(rows), std::move(dims)));
    const std::string name = j.value("name", std::string("custom"));
    if (!j.contains("latticeRank")) return adjoint_datum(name, std::move(system));
    return make_root_datum(name, std::move(system), j.at("latticeRank").get<int>(),
                           j.at("rootEmbed").get<std::vector<IntVec>>(),
                           j.at("corootEmbed").get<std::vector<IntVec>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed root datum JSON: ") + e.what());
  }
}

nlohmann::json root_datum_to_json(const RootDatum& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["cartan"] = d.system.cartan().rows();
  j["latticeRank"] = d.lattice_rank;
  j["rootEmbed"] = d.root_embed;
  j["corootEmbed"] = d.coroot_embed;
  if (!d.system.cartan().root_dims().empty()) j["rootDims"] = d.system.cartan().root_dims();
  return j;
}

int parse_simple_root(const RootSystem& rs, std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  int index = -1;
  if (rs.rank() == 2 && (lower == "alpha" || lower == "a")) index = 0;
  else if (rs.rank() == 2 && (lower == "beta" || lower == "b")) index = 1;
  else if (lower.size() > 1 && (lower[0] == 'a')) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(lower.data() + 1, lower.data() + lower.size(), k);
    if (ec == std::errc() && ptr == lower.data() + lower.size()) index = k - 1;
  } else {
    int k = 0;
    auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), k);
    if (ec == std::errc() && ptr == lower.data() + lower.size()) index = k;
  }
  if (index < 0 || index >= rs.rank()) throw InputError("unknown simple root '" + std::string(text) + "'");
  return index;
}

std::string root_label(const RootSystem& rs, const IntVec& coords, bool coroot) {
  std::string out;
  const bool letters = rs.rank() <= 2;
  for (int i = 0; i < rs.rank(); ++i) {
    const int c = coords.at(i);
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += letters ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1);
    if (coroot) out += "^v";
  }
  return out.empty() ? "0" : out;
}

}  // namespace fdq
