#pragma once

#include "fdq/mero_symbolic.hpp"

#include <random>

namespace fdq::testing {

inline Rational random_rational(std::mt19937& rng, int bound, int max_den) {
  const int den = 1 + static_cast<int>(rng() % max_den);
  const int num = static_cast<int>(rng() % (2 * bound * den + 1)) - bound * den;
  return Rational(num, den);
}

// Random cyclotomic product; some factors vanish at s0 on purpose.
inline MeroExpr random_expr(std::mt19937& rng, const Rational& s0) {
  MeroExpr e;
  const int n = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) {
    Rational a = random_rational(rng, 3, 2);
    if (a == 0) a = 1;
    const bool vanish = rng() % 3 == 0;
    const int sign = vanish || rng() % 2 ? 1 : -1;
    Rational b = vanish ? Rational(-a * s0) : random_rational(rng, 2, 3);
    if (!vanish && a * s0 + b == 0) b += 1;
    int exponent = static_cast<int>(rng() % 5) - 2;
    if (exponent == 0) exponent = 1;
    e = e * MeroExpr::cyclo(a, b, sign, exponent);
  }
  if (rng() % 4 == 0) e = e * MeroExpr::constant(Coefficient::log_q() * Coefficient::cyclo_minus(Rational(1, 2)), -1);
  return e;
}

// f with a forced simple pole at s0 times a factor regular and nonzero there.
inline MeroExpr random_simple_pole(std::mt19937& rng, const Rational& s0) {
  Rational a = random_rational(rng, 3, 2);
  if (a == 0) a = 2;
  MeroExpr e = MeroExpr::cyclo(a, -a * s0, 1, -1);
  MeroExpr rest = random_expr(rng, s0);
  if (laurent_leading(rest, s0).order == 0) e = e * rest;
  return e;
}

}  // namespace fdq::testing
