#include "gridforge/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "gridforge/error.hpp"

namespace gridforge {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(i128 v) {
  const bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n <= kMax64 && n >= -kMax64 && d <= kMax64) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from(n), mpz_from(d));
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  if (fits64(q.get_num()) && fits64(q.get_den()) && q.get_num() != std::numeric_limits<long>::min()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InvalidArgument("rational with zero denominator '" + s + "'");
  return Rational(q);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

long double Rational::to_long_double() const {
  if (big_) return static_cast<long double>(big_->get_d());
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_mpq(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) {
      assign_wide(static_cast<i128>(num_) + o.num_, den_);
    } else {
      assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("rational division by zero");
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_mpq(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(big_->get_str());
}

}  // namespace gridforge
