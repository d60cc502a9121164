#include "fdq/parabolic_levi.hpp"

#include "fdq/errors.hpp"

#include <algorithm>
#include <set>

namespace fdq {

namespace {

bool in_span(const IntVec& coords, const std::vector<int>& theta) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && std::find(theta.begin(), theta.end(), static_cast<int>(i)) == theta.end())
      return false;
  }
  return true;
}

}  // namespace

LeviData levi_data(const RootSystem& rs, int alpha) {
  if (alpha < 0 || alpha >= rs.rank())
    throw InputError("simple root index " + std::to_string(alpha) + " out of range");
  LeviData d;
  d.removed = alpha;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != alpha) d.theta.push_back(i);

  d.rho_p.assign(rs.rank(), Rational(0));
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const IntVec& c = rs.positive_root(k).coords;
    if (c[alpha] == 0) {
      d.levi_roots.push_back(k);
      continue;
    }
    d.sigma_p.push_back(k);
    d.dim_n += rs.root_dim(k);
    for (int i = 0; i < rs.rank(); ++i) d.rho_p[i] += Rational(rs.root_dim(k) * c[i], 2);
  }
  const Rational scale = pairing(rs, d.rho_p, rs.coroot(rs.simple_index(alpha)).coords);
  if (scale <= 0) throw InternalError("<rho_P, alpha^vee> is not positive");
  d.alpha_tilde = d.rho_p;
  for (auto& x : d.alpha_tilde) x /= scale;
  return d;
}

std::size_t ShahidiLevels::count() const {
  std::size_t n = 0;
  for (const auto& [i, roots] : levels) n += roots.size();
  return n;
}

ShahidiLevels shahidi_levels(const RootSystem& rs, const LeviData& levi) {
  ShahidiLevels out;
  for (std::size_t k : levi.sigma_p) {
    const IntVec& c = rs.positive_root(k).coords;
    bool halvable = true;
    for (int x : c) halvable = halvable && x % 2 == 0;
    if (halvable) {
      IntVec half = c;
      for (int& x : half) x /= 2;
      if (rs.find_positive(half)) {
        out.non_reduced = true;
        continue;
      }
    }
    const Rational level = pairing(rs, levi.alpha_tilde, rs.coroot(k).coords);
    if (!is_integral(level) || level < 1)
      throw InternalError("level " + to_string(level) + " of root " + to_string(c) + " is not a positive integer");
    const int i = to_int(level);
    out.levels[i].push_back(k);
    out.m_ls = std::max(out.m_ls, i);
  }
  return out;
}

RelativeWeylData relative_weyl(const RootSystem& rs, const LeviData& levi) {
  RelativeWeylData out;
  WeylElement w = longest_element(rs, levi.theta);
  // w(theta) lies in Delta by construction; self-associate iff it is theta again.
  std::set<std::size_t> image, target;
  for (int g : levi.theta) {
    image.insert(w.act(rs.simple_index(g)));
    target.insert(rs.simple_index(g));
  }
  out.self_associate = image == target;
  if (out.self_associate) {
    const IntVec wa = rs.root_coords(w.act(rs.simple_index(levi.removed)));
    if (wa[levi.removed] == -1) {
      out.wm_order = 2;
      out.nontrivial = std::move(w);
    }
  }
  return out;
}

std::size_t relative_weyl_order_bruteforce(const RootSystem& rs, const std::vector<int>& theta,
                                           std::size_t limit) {
  const auto group = enumerate_weyl_group(rs, limit);
  std::size_t normalizer = 0, levi_weyl = 0;
  for (const auto& w : group) {
    bool normalizes = true;
    for (int g : theta) {
      IntVec col(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) col[i] = w(i, g);
      normalizes = normalizes && in_span(col, theta);
    }
    if (!normalizes) continue;
    ++normalizer;
    // W_theta fixes every simple root outside theta modulo Z theta.
    bool in_w_theta = true;
    for (int i = 0; i < rs.rank() && in_w_theta; ++i) {
      if (std::find(theta.begin(), theta.end(), i) != theta.end()) continue;
      for (int r = 0; r < rs.rank(); ++r) {
        const bool outside = std::find(theta.begin(), theta.end(), r) == theta.end();
        if (outside && w(r, i) != (r == i ? 1 : 0)) {
          in_w_theta = false;
          break;
        }
      }
    }
    levi_weyl += in_w_theta;
  }
  if (levi_weyl == 0 || normalizer % levi_weyl != 0)
    throw InternalError("relative Weyl group count is inconsistent");
  return normalizer / levi_weyl;
}

namespace {

AdjointDimensionCheck dimension_check(int lattice_rank, const RootSystem& rs, const LeviData& levi) {
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    if (rs.root_dim(k) != 1) throw InputError("adjoint dimension check needs split data");
  }
  const int n = static_cast<int>(rs.num_positive());
  const int levi_pos = static_cast<int>(levi.levi_roots.size());
  const int theta = static_cast<int>(levi.theta.size());
  AdjointDimensionCheck c;
  const int dim_g = lattice_rank + 2 * n;
  c.dim_g_ad = dim_g - (lattice_rank - rs.rank());
  c.dim_m_ad = (lattice_rank + 2 * levi_pos) - (lattice_rank - theta);
  c.dim_n = levi.dim_n;
  c.pass = c.dim_g_ad == 1 + c.dim_m_ad + 2 * c.dim_n;
  return c;
}

}  // namespace

AdjointDimensionCheck adjoint_dimension_check(const RootSystem& rs, const LeviData& levi) {
  return dimension_check(rs.rank(), rs, levi);
}

AdjointDimensionCheck adjoint_dimension_check(const RootDatum& datum, const LeviData& levi) {
  return dimension_check(datum.lattice_rank, datum.system, levi);
}

nlohmann::ordered_json levi_to_json(const RootSystem& rs, const LeviData& levi,
                                    const ShahidiLevels& levels) {
  auto rat_array = [](const RatVec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) {
      if (is_integral(x))
        a.push_back(to_long(numerator_of(x)));
      else
        a.push_back(to_string(x));
    }
    return a;
  };
  nlohmann::ordered_json j;
  j["removedRoot"] = levi.removed;
  j["theta"] = levi.theta;
  j["dimN"] = levi.dim_n;
  j["rhoP"] = rat_array(levi.rho_p);
  j["alphaTilde"] = rat_array(levi.alpha_tilde);
  nlohmann::ordered_json sp = nlohmann::ordered_json::array();
  for (std::size_t k : levi.sigma_p) sp.push_back(rs.positive_root(k).coords);
  j["sigmaP"] = sp;
  nlohmann::ordered_json lv = nlohmann::ordered_json::object();
  for (const auto& [i, roots] : levels.levels) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k : roots) {
      row.push_back({{"root", rs.positive_root(k).coords},
                     {"coroot", rs.coroot(k).coords},
                     {"label", root_label(rs, rs.coroot(k).coords, true)}});
    }
    lv[std::to_string(i)] = row;
  }
  j["levels"] = lv;
  j["mLS"] = levels.m_ls;
  if (levels.non_reduced) j["nonReduced"] = true;
  return j;
}

}  // namespace fdq
