#include "gridforge/field.hpp"

#include <cmath>

#include "gridforge/error.hpp"

namespace gridforge {

namespace {

// Sign of p + q*sqrt(2).
int sign_q2(const Rational& p, const Rational& q) {
  const int sp = p.sign();
  const int sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and 2q^2 wins.
  const Rational lhs = p * p;
  const Rational rhs = Rational(2) * q * q;
  return lhs > rhs ? sp : sq;
}

}  // namespace

FieldElem FieldElem::cos_pi_over(int m) {
  switch (m) {
    case 1:
      return FieldElem(-1);
    case 2:
      return FieldElem(0);
    case 3:
      return FieldElem(Rational(1, 2));
    case 4:
      return FieldElem(0, Rational(1, 2), 0, 0);
    case 5:
      return FieldElem(Rational(1, 4), 0, Rational(1, 4), 0);
    default:
      throw InvalidArgument("cos(pi/" + std::to_string(m) + ") is not in Q(sqrt2, sqrt5)");
  }
}

bool FieldElem::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool FieldElem::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

int FieldElem::sign() const {
  // x = X + Y*sqrt5 with X = a + b*sqrt2, Y = c + d*sqrt2.
  const int sx = sign_q2(c_[0], c_[1]);
  const int sy = sign_q2(c_[2], c_[3]);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: compare X^2 with 5 Y^2 via D = X^2 - 5Y^2 in Q(sqrt2).
  const Rational& a = c_[0];
  const Rational& b = c_[1];
  const Rational& c = c_[2];
  const Rational& d = c_[3];
  Rational p = a * a + Rational(2) * b * b - Rational(5) * c * c - Rational(10) * d * d;
  Rational q = Rational(2) * a * b - Rational(10) * c * d;
  return sign_q2(p, q) > 0 ? sx : sy;
}

long double FieldElem::to_long_double() const {
  return c_[0].to_long_double() + c_[1].to_long_double() * std::sqrt(2.0L) +
         c_[2].to_long_double() * std::sqrt(5.0L) + c_[3].to_long_double() * std::sqrt(10.0L);
}

FieldElem FieldElem::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  const auto& [a, b, c, d] = x.c_;
  const auto& [e, f, g, h] = y.c_;
  if (x.is_rational()) return {a * e, a * f, a * g, a * h};
  if (y.is_rational()) return {a * e, b * e, c * e, d * e};
  // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2, sqrt10^2 = 10.
  Rational r1 = a * e + Rational(2) * b * f + Rational(5) * c * g + Rational(10) * d * h;
  Rational r2 = a * f + b * e + Rational(5) * (c * h + d * g);
  Rational r5 = a * g + c * e + Rational(2) * (b * h + d * f);
  Rational r10 = a * h + d * e + b * g + c * f;
  return {std::move(r1), std::move(r2), std::move(r5), std::move(r10)};
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw InvalidArgument("field division by zero");
  // x = X + Y sqrt5; 1/x = (X - Y sqrt5) / (X^2 - 5Y^2), with X^2 - 5Y^2 = p + q sqrt2.
  const auto& [a, b, c, d] = c_;
  Rational p = a * a + Rational(2) * b * b - Rational(5) * c * c - Rational(10) * d * d;
  Rational q = Rational(2) * a * b - Rational(10) * c * d;
  // 1/(p + q sqrt2) = (p - q sqrt2) / (p^2 - 2q^2)
  Rational n = p * p - Rational(2) * q * q;
  FieldElem inv_norm(p / n, -q / n, 0, 0);
  FieldElem conj(a, b, -c, -d);
  return conj * inv_norm;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = *this * o.inverse(); }

std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) {
  for (int i = 0; i < 4; ++i) {
    if (auto c = x.c_[i] <=> y.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int compare_real(const FieldElem& a, const FieldElem& b) { return (a - b).sign(); }

std::string FieldElem::str() const {
  static const char* kBasis[4] = {"", "*sqrt2", "*sqrt5", "*sqrt10"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = c_[i].str();
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
    out += kBasis[i];
  }
  return out.empty() ? "0" : out;
}

std::size_t FieldElem::hash() const {
  std::size_t h = 0;
  for (const auto& r : c_) h = h * 1000003u ^ r.hash();
  return h;
}

}  // namespace gridforge
