#pragma once

#include <array>
#include <compare>
#include <string>

#include "gridforge/rational.hpp"

namespace gridforge {

// Element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of the biquadratic field Q(sqrt2, sqrt5).
//
// This field holds every cos(pi/m) needed for m in {2,3,4,5}. Equality is
// coefficient-wise (the four basis elements are linearly independent over Q).
// The ordering operators are lexicographic over (a, b, c, d), NOT the real
// order; use sign() / compare_real() for the latter.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rational a) : c_{std::move(a), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  FieldElem(std::int64_t a) : c_{Rational(a), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  FieldElem(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static FieldElem sqrt2() { return {0, 1, 0, 0}; }
  static FieldElem sqrt5() { return {0, 0, 1, 0}; }
  static FieldElem sqrt10() { return {0, 0, 0, 1}; }
  // cos(pi/m) for m in {1,2,3,4,5}; throws InvalidArgument otherwise.
  static FieldElem cos_pi_over(int m);

  const Rational& coeff(int i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Exact sign of the real number this element denotes.
  int sign() const;
  long double to_long_double() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inverse() const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  std::string str() const;
  std::size_t hash() const;

 private:
  std::array<Rational, 4> c_;
};

// Real-number comparison, exact.
int compare_real(const FieldElem& a, const FieldElem& b);

}  // namespace gridforge
