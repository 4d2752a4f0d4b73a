#include "sdym/rational.hpp"

#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sdym {

struct Rational::Big {
  mpq_class value;
};

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

bool fits(i128 v) { return v >= -kMax && v <= kMax; }

mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  const u128 m = uabs(v);
  mpz_class z(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  z <<= 64;
  z += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  return negative ? mpz_class(-z) : z;
}

static_assert(sizeof(unsigned long) == 8, "64-bit long required");

}  // namespace

struct RationalAccess {
  static void set_small(Rational& r, std::int64_t n, std::int64_t d) {
    if (r.big_ != nullptr) r.destroy_big();
    r.num_ = n;
    r.den_ = d;
  }

  // Canonical value from a 128-bit fraction with d > 0.
  static void set(Rational& r, i128 n, i128 d) {
    const u128 g = gcd(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
      set_small(r, static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
      return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    set_big(r, std::move(q));
  }

  // Canonical value from a GMP rational (already canonical).
  static void set_big(Rational& r, mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
      const long ln = n.get_si();
      const long ld = d.get_si();
      if (ln >= -kMax) {
        set_small(r, ln, ld);
        return;
      }
    }
    if (r.big_ == nullptr) r.big_ = new Rational::Big{std::move(q)};
    else r.big_->value = std::move(q);
    r.num_ = 0;
    r.den_ = 1;
  }

  static mpq_class to_mpq(const Rational& r) {
    if (r.big_ != nullptr) return r.big_->value;
    return mpq_class(mpz_class(static_cast<long>(r.num_)), mpz_class(static_cast<long>(r.den_)));
  }

  static const Rational::Big* big(const Rational& r) { return r.big_; }
  static std::int64_t num(const Rational& r) { return r.num_; }
  static std::int64_t den(const Rational& r) { return r.den_; }
};

using A = RationalAccess;

void Rational::copy_big(const Rational& o) { big_ = new Big{o.big_->value}; }

void Rational::destroy_big() {
  delete big_;
  big_ = nullptr;
}

Rational::Rational(std::int64_t value) {
  if (value >= -kMax) {
    num_ = value;
  } else {
    A::set(*this, value, 1);
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  A::set(*this, n, d);
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  A::set_big(r, std::move(q));
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    if (den_ == o.den_) {
      A::set(*this, static_cast<i128>(num_) + o.num_, den_);
    } else {
      A::set(*this, static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
             static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  A::set_big(*this, A::to_mpq(*this) + A::to_mpq(o));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    if (den_ == o.den_) {
      A::set(*this, static_cast<i128>(num_) - o.num_, den_);
    } else {
      A::set(*this, static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
             static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  A::set_big(*this, A::to_mpq(*this) - A::to_mpq(o));
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-cancel first; the result is then already in lowest terms.
    const std::uint64_t g1 = gcd64(uabs64(num_), static_cast<std::uint64_t>(o.den_));
    const std::uint64_t g2 = gcd64(uabs64(o.num_), static_cast<std::uint64_t>(den_));
    const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) *
                   (o.num_ / static_cast<std::int64_t>(g2));
    const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) *
                   (o.den_ / static_cast<std::int64_t>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      A::set(*this, n, d);
    }
    return *this;
  }
  A::set_big(*this, A::to_mpq(*this) * A::to_mpq(o));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (big_ == nullptr && o.big_ == nullptr) {
    const std::int64_t sign = o.num_ < 0 ? -1 : 1;
    Rational inv;
    inv.num_ = sign * o.den_;
    inv.den_ = sign * o.num_;
    return *this *= inv;
  }
  A::set_big(*this, A::to_mpq(*this) / A::to_mpq(o));
  return *this;
}

Rational Rational::operator-() const {
  if (big_ == nullptr) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational r;
  A::set_big(r, mpq_class(-big_->value));
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical form: a small value never equals a big one.
  if (a.big_ == nullptr && b.big_ == nullptr) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ != nullptr && b.big_ != nullptr) return a.big_->value == b.big_->value;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(A::to_mpq(a), A::to_mpq(b));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int Rational::sign() const {
  if (big_ != nullptr) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::numerator_string() const {
  return big_ != nullptr ? big_->value.get_num().get_str(10) : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ != nullptr ? big_->value.get_den().get_str(10) : std::to_string(den_);
}

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::to_decimal(int significant) const {
  // 256 bits is far beyond 17 decimal digits, so the rounding of the
  // printed digits is exact for every value this library produces.
  mpf_class f(0, 256);
  f = A::to_mpq(*this);
  const int n = gmp_snprintf(nullptr, 0, "%.*Fg", significant, f.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, f.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

double Rational::to_double() const { return A::to_mpq(*this).get_d(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sdym
