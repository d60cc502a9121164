#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdq/errors.hpp"
#include "fdq/root_datum.hpp"

#include <map>
#include <random>
#include <set>

using namespace fdq;

namespace {

RootSystem g2() { return build_root_system(cartan_of_type('G', 2)); }

}  // namespace

TEST_CASE("G2 positive roots in enumeration order") {
  const auto rs = g2();
  REQUIRE(rs.num_positive() == 6);
  const std::vector<IntVec> expected = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  for (std::size_t k = 0; k < 6; ++k) CHECK(rs.positive_root(k).coords == expected[k]);
  CHECK(rs.positive_root(0).length == LengthClass::Short);
  CHECK(rs.positive_root(1).length == LengthClass::Long);
  CHECK(rs.positive_root(5).length == LengthClass::Long);
  CHECK(rs.positive_root(3).length == LengthClass::Short);
}

TEST_CASE("G2 coroots") {
  const auto rs = g2();
  const std::vector<IntVec> expected = {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
  for (std::size_t k = 0; k < 6; ++k) CHECK(rs.coroot(k).coords == expected[k]);
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(rs.pair(rs.positive_root(k).coords, rs.coroot(k).coords) == 2);
}

TEST_CASE("root counts per simple type") {
  const std::map<std::pair<char, int>, std::size_t> counts = {
      {{'A', 1}, 1}, {{'A', 4}, 10}, {{'B', 3}, 9}, {{'C', 4}, 16}, {{'D', 4}, 12},
      {{'D', 5}, 20}, {{'E', 6}, 36}, {{'E', 7}, 63}, {{'E', 8}, 120}, {{'F', 4}, 24},
      {{'G', 2}, 6}};
  for (const auto& [type, n] : counts) {
    const auto rs = build_root_system(cartan_of_type(type.first, type.second));
    CHECK_MESSAGE(rs.num_positive() == n, type.first << type.second);
    CHECK(rs.is_reduced());
  }
}

TEST_CASE("Weyl group orders match enumeration") {
  const std::vector<std::pair<char, int>> types = {{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4},
                                                   {'G', 2}, {'F', 4}, {'A', 1}};
  for (auto [f, r] : types) {
    const auto rs = build_root_system(cartan_of_type(f, r));
    CHECK(weyl_group_order(rs) == Integer(enumerate_weyl_group(rs).size()));
  }
  CHECK(weyl_group_order(build_root_system(cartan_of_type('E', 8))) == Integer(696729600));
  CHECK(weyl_group_order(build_root_system(cartan_of_type('E', 7))) == Integer(2903040));
}

TEST_CASE("longest element of G2 modulo a Levi") {
  const auto rs = g2();
  const auto w0 = longest_element(rs, {});
  CHECK(w0.length() == 6);
  for (std::size_t k = 0; k < rs.num_positive(); ++k) CHECK(w0.act(k) == k + rs.num_positive());

  for (int keep : {0, 1}) {
    const auto w = longest_element(rs, {keep});
    const int removed = 1 - keep;
    CHECK(w.act(rs.simple_index(keep)) == rs.simple_index(keep));
    CHECK(w.act(rs.simple_index(removed)) >= rs.num_positive());
    CHECK(w.length() == 5);
  }
}

TEST_CASE("reduced words reproduce the matrix") {
  std::mt19937 rng(7);
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'B', 3}, {'D', 4}, {'A', 4}, {'G', 2}}) {
    const auto rs = build_root_system(cartan_of_type(f, r));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> word;
      const int len = static_cast<int>(rng() % 12);
      for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % r));
      const auto w = WeylElement::from_word(rs, word);
      const auto v = WeylElement::from_matrix(rs, w.matrix());
      CHECK(v.matrix() == w.matrix());
      CHECK(v.length() <= word.size());
      // Length equals the number of positive roots sent negative.
      std::size_t inversions = 0;
      for (std::size_t k = 0; k < rs.num_positive(); ++k) inversions += w.act(k) >= rs.num_positive();
      CHECK(v.length() == inversions);
    }
  }
}

TEST_CASE("builtin data and embeddings") {
  const auto gl = builtin_datum("GL4");
  CHECK(gl.lattice_rank == 4);
  CHECK(gl.semisimple_rank() == 3);
  const auto sl = builtin_datum("SL3");
  CHECK(sl.lattice_rank == 2);
  const auto g = builtin_datum("G2");
  CHECK(g.embed_root({3, 2}) == IntVec{3, 2});
  CHECK_THROWS_AS(builtin_datum("Q7"), InputError);
  const auto round = root_datum_from_json(root_datum_to_json(gl));
  CHECK(round.root_embed == gl.root_embed);
  CHECK(round.coroot_embed == gl.coroot_embed);
}

TEST_CASE("non-finite Cartan matrices are rejected") {
  // affine A1
  CHECK_THROWS_AS(build_root_system(CartanMatrix::from_rows({{2, -2}, {-2, 2}})), NotFiniteTypeError);
  CHECK_THROWS_AS(CartanMatrix::from_rows({{2, -1}, {0, 2}}), InputError);
}

TEST_CASE("labels and simple-root parsing") {
  const auto rs = g2();
  CHECK(root_label(rs, {3, 2}) == "3a+2b");
  CHECK(parse_simple_root(rs, "alpha") == 0);
  CHECK(parse_simple_root(rs, "beta") == 1);
  CHECK(parse_simple_root(rs, "a2") == 1);
  CHECK_THROWS_AS(parse_simple_root(rs, "gamma"), InputError);
}
