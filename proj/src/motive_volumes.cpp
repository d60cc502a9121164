#include "fdq/motive_volumes.hpp"

#include "fdq/errors.hpp"
#include "fdq/lattice_constants.hpp"

#include <algorithm>
#include <numeric>

namespace fdq {

std::vector<int> invariant_degrees(char family, int rank) {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case 'D':
      if (rank < 3) break;
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case 'E':
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      if (rank == 4) d = {2, 6, 8, 12};
      break;
    case 'G':
      if (rank == 2) d = {2, 6};
      break;
    default:
      break;
  }
  if (d.empty()) throw InputError(std::string("unsupported type ") + family + std::to_string(rank));
  std::sort(d.begin(), d.end());
  return d;
}

std::string classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  const int r = static_cast<int>(nodes.size());
  std::size_t count = 0;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const IntVec& c = rs.positive_root(k).coords;
    if (std::any_of(nodes.begin(), nodes.end(), [&](int i) { return c[i] != 0; })) ++count;
  }
  bool simply_laced = true;
  for (int i : nodes)
    for (int j : nodes)
      if (i != j && rs.cartan()(i, j) < -1) simply_laced = false;
  const long long n = static_cast<long long>(count);
  auto name = [](char f, int rank) { return std::string(1, f) + std::to_string(rank); };
  if (simply_laced) {
    if (n == 1LL * r * (r + 1) / 2) return name('A', r);
    if (r >= 4 && n == 1LL * r * (r - 1)) return name('D', r);
    if (r == 6 && n == 36) return name('E', 6);
    if (r == 7 && n == 63) return name('E', 7);
    if (r == 8 && n == 120) return name('E', 8);
  } else {
    if (r == 2 && n == 6) return name('G', 2);
    if (r == 4 && n == 24) return name('F', 4);
    // B and C share their degrees; the label records only the family pair.
    if (n == 1LL * r * r) return name('B', r);
  }
  throw InputError("unrecognized simple component of rank " + std::to_string(r));
}

MotiveData motive_degrees(const RootDatum& datum) {
  const RootSystem& rs = datum.system;
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    if (rs.root_dim(k) != 1) throw InputError("motive degrees need split data");
  MotiveData md;
  md.dim_t = datum.lattice_rank;
  md.dim_g = datum.lattice_rank + 2 * static_cast<int>(rs.num_positive());
  const int central = datum.lattice_rank - datum.semisimple_rank();
  if (central > 0) md.degrees_with_mult[1] += central;
  for (const auto& nodes : rs.cartan().components()) {
    SimpleFactor f;
    f.type = classify_component(rs, nodes);
    f.nodes = nodes;
    f.degrees = invariant_degrees(f.type[0], std::stoi(f.type.substr(1)));
    f.weyl_order = weyl_group_order(rs, nodes);
    Integer prod = 1;
    for (int d : f.degrees) prod *= d;
    if (prod != f.weyl_order)
      throw InvariantViolation("degree product " + prod.str() + " differs from |W| = " + f.weyl_order.str() +
                               " for " + f.type);
    for (int d : f.degrees) md.degrees_with_mult[d] += 1;
    md.factors.push_back(std::move(f));
  }
  int dim = 0, rank = 0;
  for (const auto& [d, mult] : md.degrees_with_mult) {
    dim += (2 * d - 1) * mult;
    rank += mult;
  }
  if (dim != md.dim_g || rank != md.dim_t)
    throw InvariantViolation("motive identity fails for " + datum.name);
  return md;
}

Rational iwahori_volume_exponent(const MotiveData& md) { return Rational(md.dim_g + md.dim_t, 2); }

QRational point_count(const RootDatum& datum) {
  const MotiveData md = motive_degrees(datum);
  Poly p = Poly::monomial(static_cast<int>(datum.system.num_positive()));
  for (const auto& [d, mult] : md.degrees_with_mult) p = p * (Poly::monomial(d) - Poly(1)).pow(mult);
  return QRational(p, Poly(1));
}

namespace {

int dim_n(const RootSystem& rs, const std::vector<int>& theta) {
  int n = 0;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const IntVec& c = rs.positive_root(k).coords;
    bool in_levi = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] != 0 && std::find(theta.begin(), theta.end(), i) == theta.end()) in_levi = false;
    if (!in_levi) n += rs.root_dim(k);
  }
  return n;
}

}  // namespace

QRational gamma_GM(const RootDatum& datum, const std::vector<int>& theta) {
  const RootDatum levi = datum.levi(theta);
  return point_count(datum) / (point_count(levi) * QRational::q_power(2 * dim_n(datum.system, theta)));
}

QRational measure_quotient_factor(const RootDatum& datum, const std::vector<int>& theta) {
  const int e = central_torus_rank(datum, theta) - central_torus_rank(datum, [&] {
    std::vector<int> all(datum.semisimple_rank());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  const QRational one_minus_inv(Poly(std::vector<Integer>{-1, 1}), Poly::monomial(1));
  return gamma_GM(datum, theta) * one_minus_inv.pow(e);
}

QRational root_subgroup_index(const RootSystem& rs, std::size_t k) {
  return QRational::q_power(rs.root_dim(k));
}

nlohmann::ordered_json motive_to_json(const MotiveData& md) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (const auto& [d, mult] : md.degrees_with_mult) deg[std::to_string(d)] = mult;
  j["degrees"] = deg;
  j["dimG"] = md.dim_g;
  j["dimT"] = md.dim_t;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : md.factors)
    fs.push_back({{"type", f.type}, {"degrees", f.degrees}, {"weylOrder", f.weyl_order.str()}});
  j["factors"] = fs;
  return j;
}

}  // namespace fdq
