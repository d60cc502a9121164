#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdq/errors.hpp"
#include "fdq/parabolic_levi.hpp"

#include <set>

using namespace fdq;

namespace {

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

std::set<IntVec> coroots_at(const RootSystem& rs, const ShahidiLevels& lv, int i) {
  std::set<IntVec> out;
  for (std::size_t k : lv.levels.at(i)) out.insert(rs.coroot(k).coords);
  return out;
}

const std::vector<std::pair<char, int>>& simple_types(int max_rank) {
  static std::vector<std::pair<char, int>> all;
  all.clear();
  for (int r = 1; r <= max_rank; ++r) all.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) all.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) all.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) all.push_back({'D', r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) all.push_back({'E', r});
  if (max_rank >= 4) all.push_back({'F', 4});
  all.push_back({'G', 2});
  return all;
}

}  // namespace

TEST_CASE("G2 parabolic data") {
  const auto rs = build_root_system(cartan_of_type('G', 2));
  // remove beta: P_alpha
  const auto pa = levi_data(rs, 1);
  CHECK(pa.rho_p == rv({Rational(9, 2), Rational(3)}));
  CHECK(pa.alpha_tilde == rv({3, 2}));
  CHECK(pa.dim_n == 5);
  const auto lva = shahidi_levels(rs, pa);
  CHECK(lva.m_ls == 3);
  CHECK(coroots_at(rs, lva, 1) == std::set<IntVec>{{0, 1}, {1, 1}});
  CHECK(coroots_at(rs, lva, 2) == std::set<IntVec>{{1, 2}});
  CHECK(coroots_at(rs, lva, 3) == std::set<IntVec>{{1, 3}, {2, 3}});

  // remove alpha: P_beta
  const auto pb = levi_data(rs, 0);
  CHECK(pb.rho_p == rv({5, Rational(5, 2)}));
  CHECK(pb.alpha_tilde == rv({2, 1}));
  const auto lvb = shahidi_levels(rs, pb);
  CHECK(lvb.m_ls == 2);
  CHECK(coroots_at(rs, lvb, 1) == std::set<IntVec>{{1, 0}, {1, 3}, {1, 1}, {1, 2}});
  CHECK(coroots_at(rs, lvb, 2) == std::set<IntVec>{{2, 3}});
}

TEST_CASE("A1 Borel") {
  const auto rs = build_root_system(cartan_of_type('A', 1));
  const auto l = levi_data(rs, 0);
  CHECK(l.rho_p == rv({Rational(1, 2)}));
  CHECK(l.alpha_tilde == rv({Rational(1, 2)}));
  CHECK(l.dim_n == 1);
  const auto adj = adjoint_dimension_check(rs, l);
  CHECK(adj.pass);
  CHECK(adj.dim_g_ad == 3);
  CHECK(adj.dim_m_ad == 0);
  CHECK(relative_weyl(rs, l).wm_order == 2);
  CHECK(relative_weyl_order_bruteforce(rs, {}) == 2);
  CHECK_THROWS_AS(levi_data(rs, 1), InputError);
}

TEST_CASE("GL4 with Levi GL2 x GL2 has one level") {
  const auto d = builtin_datum("GL4");
  const auto l = levi_data(d.system, 1);
  const auto lv = shahidi_levels(d.system, l);
  CHECK(lv.m_ls == 1);
  CHECK(lv.levels.at(1).size() == 4);
  CHECK(adjoint_dimension_check(d, l).pass);
}

TEST_CASE("G2 adjoint decomposition and relative Weyl group") {
  const auto rs = build_root_system(cartan_of_type('G', 2));
  for (int a : {0, 1}) {
    const auto l = levi_data(rs, a);
    const auto adj = adjoint_dimension_check(rs, l);
    CHECK(adj.pass);
    CHECK(adj.dim_g_ad == 14);
    CHECK(adj.dim_m_ad == 3);
    CHECK(adj.dim_n == 5);
    const auto rw = relative_weyl(rs, l);
    CHECK(rw.wm_order == 2);
    CHECK(rw.self_associate);
    CHECK(relative_weyl_order_bruteforce(rs, l.theta) == 2);
  }
}

TEST_CASE("A2 maximal Levi is not self-associate") {
  const auto rs = build_root_system(cartan_of_type('A', 2));
  const auto l = levi_data(rs, 1);
  CHECK(relative_weyl(rs, l).wm_order == 1);
  CHECK(relative_weyl_order_bruteforce(rs, l.theta) == 1);
}

TEST_CASE("fundamental weight sweep up to rank 8") {
  for (auto [f, r] : simple_types(8)) {
    const auto rs = build_root_system(cartan_of_type(f, r));
    for (int a = 0; a < r; ++a) {
      const auto l = levi_data(rs, a);
      CHECK(pairing(rs, l.alpha_tilde, rs.coroot(rs.simple_index(a)).coords) == 1);
      for (int g : l.theta) {
        CHECK(pairing(rs, l.alpha_tilde, rs.coroot(rs.simple_index(g)).coords) == 0);
        CHECK(pairing(rs, l.rho_p, rs.coroot(rs.simple_index(g)).coords) == 0);
      }
      const auto lv = shahidi_levels(rs, l);
      CHECK(lv.count() == l.sigma_p.size());
      CHECK(static_cast<int>(lv.count()) == l.dim_n);
      CHECK(l.sigma_p.size() + l.levi_roots.size() == rs.num_positive());
      CHECK(lv.levels.begin()->first >= 1);
      CHECK(adjoint_dimension_check(rs, l).pass);
    }
  }
}

TEST_CASE("relative Weyl bound agrees with the longest-element test (rank <= 4)") {
  for (auto [f, r] : simple_types(4)) {
    const auto rs = build_root_system(cartan_of_type(f, r));
    for (int a = 0; a < r; ++a) {
      const auto l = levi_data(rs, a);
      const std::size_t brute = relative_weyl_order_bruteforce(rs, l.theta);
      CHECK(brute <= 2);
      CHECK(static_cast<std::size_t>(relative_weyl(rs, l).wm_order) == brute);
    }
  }
}
