#include "fdq/lattice_constants.hpp"

#include "fdq/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fdq {

namespace {

IntMatrix rows_of(const std::vector<IntVec>& vecs, const std::vector<int>& pick, int width) {
  std::vector<IntVec> rows;
  for (int i : pick) rows.push_back(vecs.at(i));
  return IntMatrix::from_rows(rows, width);
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

int central_torus_rank(const RootDatum& datum, const std::vector<int>& theta) {
  if (theta.empty()) return datum.lattice_rank;
  return static_cast<int>(integer_kernel(rows_of(datum.root_embed, theta, datum.lattice_rank)).cols());
}

StructureConstants structure_constants(const RootDatum& datum, const std::vector<int>& theta, int alpha) {
  const int n = datum.lattice_rank;
  const int r = datum.semisimple_rank();
  if (alpha < 0 || alpha >= r) throw InputError("removed root out of range");
  std::vector<int> expected;
  for (int i = 0; i < r; ++i)
    if (i != alpha) expected.push_back(i);
  std::vector<int> sorted = theta;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected) throw StructureError("theta must be Delta minus the removed root");

  // X_*(A_G) and X_*(A_M) as saturated sublattices of X^vee.
  const IntMatrix k_g = r == 0 ? IntMatrix::identity(n)
                               : integer_kernel(rows_of(datum.root_embed, all_indices(r), n));
  const IntMatrix k_m = theta.empty() ? IntMatrix::identity(n)
                                      : integer_kernel(rows_of(datum.root_embed, theta, n));

  // X^*(M)^G: orthogonal to the Levi coroots and to X_*(A_G).
  std::vector<IntVec> cond;
  for (int g : theta) cond.push_back(datum.coroot_embed[g]);
  IntMatrix constraints(cond.size() + k_g.cols(), n);
  for (std::size_t i = 0; i < cond.size(); ++i)
    for (int c = 0; c < n; ++c) constraints(i, c) = cond[i][c];
  for (std::size_t j = 0; j < k_g.cols(); ++j)
    for (int c = 0; c < n; ++c) constraints(cond.size() + j, c) = k_g(c, j);
  const IntMatrix inv = integer_kernel(constraints);
  if (inv.cols() != 1)
    throw StructureError("X^*(M)^G has rank " + std::to_string(inv.cols()) + ", expected 1");

  std::vector<Integer> chi = inv.column(0);
  Integer content = 0;
  for (const auto& x : chi) content = boost::multiprecision::gcd(content, x);
  for (auto& x : chi) x /= content;
  Integer pairing = 0;
  for (int c = 0; c < n; ++c) pairing += chi[c] * datum.coroot_embed[alpha][c];
  if (pairing == 0) throw StructureError("chi pairs to zero with alpha^vee");
  if (pairing < 0) {
    for (auto& x : chi) x = -x;
    pairing = -pairing;
  }

  // Coordinates of X_*(A_G) inside X_*(A_M), then X^*(A_M)^G = Hom(X_*(A_M)/X_*(A_G), Z).
  const std::size_t km = k_m.cols();
  IntMatrix coords(km, k_g.cols());
  for (std::size_t j = 0; j < k_g.cols(); ++j) {
    const auto sol = solve_integer(k_m, k_g.column(j));
    if (!sol) throw InternalError("X_*(A_G) is not contained in X_*(A_M)");
    for (std::size_t i = 0; i < km; ++i) coords(i, j) = (*sol)[i];
  }
  const IntMatrix dual = k_g.cols() == 0 ? IntMatrix::identity(km) : integer_kernel(coords.transpose());
  if (dual.cols() != 1)
    throw StructureError("X^*(A_M)^G has rank " + std::to_string(dual.cols()) + ", expected 1");

  std::vector<Integer> res(km, 0);
  for (std::size_t i = 0; i < km; ++i)
    for (int c = 0; c < n; ++c) res[i] += k_m(c, i) * chi[c];
  const auto y = solve_integer(dual, res);
  if (!y) throw InternalError("res(chi) does not lie in X^*(A_M)^G");
  Integer m = (*y)[0];
  if (m < 0) m = -m;
  if (m == 0) throw StructureError("restriction of chi vanishes");

  StructureConstants sc;
  for (const auto& x : chi) sc.chi.push_back(static_cast<int>(x));
  sc.chi_pairing = pairing;
  sc.m_idx = m;
  sc.dim_a_m = static_cast<int>(km);
  sc.dim_a_g = static_cast<int>(k_g.cols());
  return sc;
}

StructureConstants structure_constants(const RootDatum& datum, int alpha) {
  std::vector<int> theta;
  for (int i = 0; i < datum.semisimple_rank(); ++i)
    if (i != alpha) theta.push_back(i);
  return structure_constants(datum, theta, alpha);
}

OrbitVolumeData orbit_volume(const StructureConstants& sc, int l, int torsion_t) {
  if (l < 1 || torsion_t < 1) throw InputError("l and t must be positive");
  OrbitVolumeData ov;
  ov.l = l;
  ov.torsion_t = torsion_t;
  const Rational lt(l * torsion_t);
  ov.y1_coeff = Rational(sc.chi_pairing) / lt;
  ov.vol = Rational(sc.m_idx) / lt;
  ov.ratio_coeff = ov.vol / ov.y1_coeff;
  return ov;
}

nlohmann::ordered_json structure_constants_to_json(const StructureConstants& sc) {
  nlohmann::ordered_json j;
  j["chi"] = sc.chi;
  j["chiPairing"] = to_long(sc.chi_pairing);
  j["mIdx"] = to_long(sc.m_idx);
  j["mOverChiPairing"] = to_string(sc.heiermann_constant());
  j["dimAM"] = sc.dim_a_m;
  j["dimAG"] = sc.dim_a_g;
  return j;
}

nlohmann::ordered_json orbit_volume_to_json(const OrbitVolumeData& ov) {
  nlohmann::ordered_json j;
  j["l"] = ov.l;
  j["t"] = ov.torsion_t;
  j["y1"] = to_string(ov.y1_coeff) + " * 2pi/log q";
  j["vol"] = to_string(ov.vol);
  j["ratio"] = to_string(ov.ratio_coeff) + " * log q/2pi";
  return j;
}

}  // namespace fdq
