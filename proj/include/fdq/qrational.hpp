#pragma once

#include "fdq/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fdq {

// Integer polynomial in q, coefficients in ascending degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long long c);  // NOLINT: constants convert implicitly
  explicit Poly(std::vector<Integer> coeffs);
  static Poly monomial(int degree, Integer c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& lead() const { return c_.back(); }
  Integer content() const;
  Poly primitive_part() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(int e) const;

  Rational eval(const Rational& q) const;
  long double eval(long double q) const;
  bool operator==(const Poly&) const = default;
  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Pseudo-remainder of a by b: lead(b)^k a = Q b + R.
Poly pseudo_remainder(const Poly& a, const Poly& b);
// Exact quotient; throws InternalError if b does not divide a over Z.
Poly exact_divide(const Poly& a, const Poly& b);
// Primitive gcd with positive leading coefficient.
Poly poly_gcd(const Poly& a, const Poly& b);

// Reduced quotient num/den of integer polynomials in q.
class QRational {
 public:
  QRational() : num_(0), den_(1) {}
  QRational(long long c) : num_(c), den_(1) {}  // NOLINT
  QRational(Poly num, Poly den);
  // q^k for any integer k.
  static QRational q_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  QRational pow(int e) const;

  Rational eval(const Rational& q) const;
  long double eval(long double q) const;
  bool operator==(const QRational&) const = default;
  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

nlohmann::ordered_json to_json(const QRational& r);
QRational qrational_from_json(const nlohmann::json& j);

}  // namespace fdq
