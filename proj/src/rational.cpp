#include "fdq/rational.hpp"

#include "fdq/errors.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace fdq {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

int to_int(const Rational& r) {
  if (!is_integral(r)) throw InternalError("expected an integer, got " + to_string(r));
  const Integer n = numerator_of(r);
  if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min())
    throw InternalError("integer out of range: " + n.str());
  return static_cast<int>(n);
}

long long to_long(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
    throw InternalError("integer out of range: " + z.str());
  return static_cast<long long>(z);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace fdq
