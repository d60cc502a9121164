#include "fdq/qrational.hpp"

#include "fdq/errors.hpp"

#include <cmath>
#include <sstream>

namespace fdq {

Poly::Poly(long long c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, Integer c) {
  if (degree < 0) throw InternalError("negative monomial degree");
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (lead() < 0) g = -g;
  std::vector<Integer> v = c_;
  for (auto& x : v) x /= g;
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Integer> v = c_;
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InternalError("negative polynomial power");
  Poly out(1), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

Rational Poly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

long double Poly::eval(long double q) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + it->convert_to<long double>();
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Integer c = c_[d];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (c != 1 || d == 0) os << c;
    if (d > 0) os << (c != 1 ? "*q" : "q");
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InternalError("pseudo-remainder by zero");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int shift = static_cast<int>(r.size()) - 1 - db;
    const Integer lr = r.back();
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b.coeffs()[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  if (a.is_zero()) return Poly();
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) throw InternalError("inexact polynomial division");
  std::vector<Integer> q(a.degree() - db + 1, 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer& top = r[k + db];
    if (top % b.lead() != 0) throw InternalError("inexact polynomial division");
    q[k] = top / b.lead();
    for (int i = 0; i <= db; ++i) r[k + i] -= q[k] * b.coeffs()[i];
  }
  for (const auto& x : r)
    if (x != 0) throw InternalError("inexact polynomial division");
  return Poly(std::move(q));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive_part(), y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y).primitive_part();
    x = y;
    y = r;
  }
  return x.primitive_part();
}

QRational::QRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

QRational QRational::q_power(int k) {
  if (k >= 0) return QRational(Poly::monomial(k), Poly(1));
  return QRational(Poly(1), Poly::monomial(-k));
}

void QRational::normalize() {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  num_ = exact_divide(num_, g);
  den_ = exact_divide(den_, g);
  Integer c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> n = num_.coeffs(), d = den_.coeffs();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = Poly(std::move(n));
    den_ = Poly(std::move(d));
  }
}

QRational operator*(const QRational& a, const QRational& b) { return QRational(a.num_ * b.num_, a.den_ * b.den_); }

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw InputError("division by zero rational function");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

QRational operator+(const QRational& a, const QRational& b) {
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) {
  return QRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRational QRational::pow(int e) const {
  if (e >= 0) return QRational(num_.pow(e), den_.pow(e));
  if (is_zero()) throw InputError("zero to a negative power");
  return QRational(den_.pow(-e), num_.pow(-e));
}

Rational QRational::eval(const Rational& q) const {
  const Rational d = den_.eval(q);
  if (d == 0) throw InputError("pole at q = " + to_string(q));
  return num_.eval(q) / d;
}

long double QRational::eval(long double q) const { return num_.eval(q) / den_.eval(q); }

std::string QRational::str() const {
  if (den_ == Poly(1)) return num_.str();
  auto wrap = [](const Poly& p) {
    const std::string s = p.str();
    return s.find_first_of(" *") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

nlohmann::ordered_json to_json(const QRational& r) {
  auto arr = [](const Poly& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_long(c));
    return a;
  };
  nlohmann::ordered_json j;
  j["num"] = arr(r.num());
  j["den"] = arr(r.den());
  return j;
}

QRational qrational_from_json(const nlohmann::json& j) {
  try {
    auto read = [](const nlohmann::json& a) {
      std::vector<Integer> v;
      for (const auto& c : a) v.emplace_back(c.get<long long>());
      return Poly(std::move(v));
    };
    return QRational(read(j.at("num")), read(j.at("den")));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed rational function: ") + e.what());
  }
}

}  // namespace fdq
