#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sdym {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline
/// and computed with 128-bit intermediates; anything larger moves to a GMP
/// rational and moves back as soon as it fits again. The representation is
/// canonical, so `to_string()` is a stable serialization.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_ != nullptr) copy_big(o);
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() {
    if (big_ != nullptr) destroy_big();
  }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input and
  /// std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  [[nodiscard]] bool is_zero() const { return big_ == nullptr && num_ == 0; }
  [[nodiscard]] int sign() const;
  [[nodiscard]] Rational abs() const;

  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;

  /// "p/q" in lowest terms; integers render as "p/1".
  [[nodiscard]] std::string to_string() const;

  /// Decimal rendering with `significant` significant digits (scientific
  /// notation for very large or small magnitudes).
  [[nodiscard]] std::string to_decimal(int significant = 17) const;

  [[nodiscard]] double to_double() const;

  /// True when the value is held in the inline 64-bit representation.
  [[nodiscard]] bool is_small() const { return big_ == nullptr; }

  void swap(Rational& o) noexcept {
    std::swap(num_, o.num_);
    std::swap(den_, o.den_);
    std::swap(big_, o.big_);
  }

  struct Big;

 private:
  void copy_big(const Rational& o);
  void destroy_big();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  Big* big_ = nullptr;  // owned; set only when the value does not fit inline

  friend struct RationalAccess;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sdym
