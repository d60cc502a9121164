#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdq/errors.hpp"
#include "fdq/motive_volumes.hpp"

#include <vector>

using namespace fdq;

namespace {

// Counts n x n matrices over F_p with nonzero determinant (or determinant 1).
long long brute_count(int n, int p, bool special) {
  const int entries = n * n;
  long long total = 1;
  for (int i = 0; i < entries; ++i) total *= p;
  long long count = 0;
  std::vector<int> m(entries);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < entries; ++i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    long long det = 0;
    if (n == 2) {
      det = m[0] * m[3] - m[1] * m[2];
    } else {
      det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
            m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
    det = ((det % p) + p) % p;
    if (special ? det == 1 : det != 0) ++count;
  }
  return count;
}

QRational q() { return QRational::q_power(1); }

std::vector<std::pair<char, int>> simple_types(int max_rank) {
  std::vector<std::pair<char, int>> all;
  for (int r = 1; r <= max_rank; ++r) all.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) all.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) all.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) all.push_back({'D', r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) all.push_back({'E', r});
  all.push_back({'F', 4});
  all.push_back({'G', 2});
  return all;
}

}  // namespace

TEST_CASE("point counts agree with brute-force enumeration") {
  for (int p : {2, 3}) {
    CHECK(point_count(builtin_datum("GL2")).eval(Rational(p)) == brute_count(2, p, false));
    CHECK(point_count(builtin_datum("SL2")).eval(Rational(p)) == brute_count(2, p, true));
  }
  CHECK(point_count(builtin_datum("SL3")).eval(Rational(2)) == brute_count(3, 2, true));
  CHECK(point_count(builtin_datum("GL2")).eval(Rational(3)) == 48);
}

TEST_CASE("closed forms") {
  CHECK(point_count(gl_datum(1)) == q() - 1);
  CHECK(point_count(gl_datum(2)) == q() * (q() - 1) * (q().pow(2) - 1));
  CHECK(point_count(builtin_datum("G2")) == q().pow(6) * (q().pow(2) - 1) * (q().pow(6) - 1));
  CHECK(point_count(builtin_datum("G2")).num().degree() == 14);
}

TEST_CASE("motive degrees and identity") {
  const auto g2 = motive_degrees(builtin_datum("G2"));
  CHECK(g2.degrees_with_mult == std::map<int, int>{{2, 1}, {6, 1}});
  CHECK(g2.dim_g == 14);
  CHECK(iwahori_volume_exponent(g2) == 8);
  CHECK(iwahori_volume_exponent(motive_degrees(gl_datum(2))) == 3);
  CHECK(iwahori_volume_exponent(motive_degrees(gl_datum(1))) == 1);
  CHECK(motive_degrees(gl_datum(1)).degrees_with_mult == std::map<int, int>{{1, 1}});

  for (auto [f, r] : simple_types(8)) {
    const auto d = adjoint_datum(std::string(1, f) + std::to_string(r), build_root_system(cartan_of_type(f, r)));
    const auto md = motive_degrees(d);
    int dim = 0;
    for (auto [deg, mult] : md.degrees_with_mult) dim += (2 * deg - 1) * mult;
    CHECK(dim == md.dim_g);
    REQUIRE(md.factors.size() == 1);
    Integer prod = 1;
    for (int deg : md.factors[0].degrees) prod *= deg;
    CHECK(prod == md.factors[0].weyl_order);
  }
  for (int n = 1; n <= 10; ++n) {
    const auto md = motive_degrees(gl_datum(n));
    CHECK(md.dim_g == n * n);
    std::map<int, int> expected;
    for (int d = 1; d <= n; ++d) expected[d] = 1;
    CHECK(md.degrees_with_mult == expected);
  }
}

TEST_CASE("gamma(G/M)") {
  const auto g2 = builtin_datum("G2");
  // Levi M_beta keeps beta (index 1).
  CHECK(gamma_GM(g2, {1}) == (q().pow(6) - 1) / (q().pow(5) * (q() - 1)));
  CHECK(gamma_GM(g2, {0, 1}) == QRational(1));
  CHECK(gamma_GM(gl_datum(2), {}) == (q() + 1) / q());
  CHECK(measure_quotient_factor(g2, {1}) == gamma_GM(g2, {1}) * (q() - 1) / q());
  CHECK(measure_quotient_factor(g2, {0, 1}) == QRational(1));
  CHECK(measure_quotient_factor(gl_datum(4), {0, 2}) == gamma_GM(gl_datum(4), {0, 2}) * (q() - 1) / q());
}

TEST_CASE("gamma(G/M) tends to 1 and is transitive") {
  for (const char* name : {"A2", "B2", "G2", "C3", "GL4"}) {
    const auto d = builtin_datum(name);
    const int r = d.semisimple_rank();
    const QRational full = gamma_GM(d, {});
    CHECK(full.num().degree() == full.den().degree());
    CHECK(full.num().lead() == full.den().lead());
    for (int a = 0; a < r; ++a) {
      std::vector<int> theta;
      for (int i = 0; i < r; ++i)
        if (i != a) theta.push_back(i);
      const QRational gm = gamma_GM(d, theta);
      CHECK(gm.num().degree() == gm.den().degree());
      const auto levi = d.levi(theta);
      CHECK(full == gm * gamma_GM(levi, {}));
    }
  }
}

TEST_CASE("root subgroup index") {
  auto cm = CartanMatrix::from_rows({{2}}, {2});
  CHECK(root_subgroup_index(build_root_system(cm), 0) == QRational::q_power(2));
  auto cm3 = CartanMatrix::from_rows({{2}}, {3});
  CHECK(root_subgroup_index(build_root_system(cm3), 0) == QRational::q_power(3));
  CHECK(root_subgroup_index(build_root_system(cartan_of_type('A', 1)), 0) == QRational::q_power(1));
  CHECK_THROWS_AS(motive_degrees(adjoint_datum("rel", build_root_system(cm))), InputError);
}
