#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdq/int_matrix.hpp"

#include <random>
#include <set>

using namespace fdq;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int bound) {
  IntMatrix a(m, n);
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

// Brute force: count residues of Z^2 / L by walking a box of representatives.
long long brute_index_2d(const IntMatrix& g) {
  // L contains det*Z^2, so representatives live in [0, det)^2.
  const Integer det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  const long long d = static_cast<long long>(det < 0 ? Integer(-det) : det);
  std::set<std::pair<long long, long long>> classes;
  for (long long x = 0; x < d; ++x) {
    for (long long y = 0; y < d; ++y) {
      // canonical representative: reduce by the lattice via solving over Q
      // (x, y) ~ (x', y') iff difference in L iff adj(g) * diff == 0 mod det.
      const long long a00 = static_cast<long long>(g(1, 1)), a01 = -static_cast<long long>(g(0, 1));
      const long long a10 = -static_cast<long long>(g(1, 0)), a11 = static_cast<long long>(g(0, 0));
      const long long u = ((a00 * x + a01 * y) % d + d) % d;
      const long long v = ((a10 * x + a11 * y) % d + d) % d;
      classes.insert({u, v});
    }
  }
  return static_cast<long long>(classes.size());
}

}  // namespace

TEST_CASE("smith normal form is a unimodular diagonalization") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, m, n, 6);
    const SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.D);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(f.D(i, j) == 0);
    for (std::size_t k = 0; k + 1 < f.invariants.size(); ++k)
      CHECK(f.invariants[k + 1] % f.invariants[k] == 0);
    for (const auto& d : f.invariants) CHECK(d > 0);
  }
}

TEST_CASE("kernel basis is saturated and annihilated") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 2, 4, 4);
    const IntMatrix k = integer_kernel(a);
    const IntMatrix z = a * k;
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
    // Saturated: SNF of the basis has all invariants 1.
    if (k.cols() > 0) {
      for (const auto& d : smith_normal_form(k).invariants) CHECK(d == 1);
    }
  }
}

TEST_CASE("sublattice index agrees with a coset count") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 60) {
    const IntMatrix g = random_matrix(rng, 2, 2, 5);
    const auto idx = sublattice_index(g);
    const Integer det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (det == 0) {
      CHECK(!idx.has_value());
      continue;
    }
    REQUIRE(idx.has_value());
    CHECK(*idx == brute_index_2d(g));
    ++checked;
  }
}

TEST_CASE("integer solve") {
  const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}}, 2);
  CHECK(!solve_integer(a, {1, 0}).has_value());
  const auto x = solve_integer(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
}
