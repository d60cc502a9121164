#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fdq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<int>;
using RatVec = std::vector<Rational>;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws InputError on anything else.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

// Throws InternalError if r is not an integer or does not fit in int.
int to_int(const Rational& r);
long long to_long(const Integer& z);

double to_double(const Rational& r);

RatVec to_rational(const IntVec& v);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

}  // namespace fdq
