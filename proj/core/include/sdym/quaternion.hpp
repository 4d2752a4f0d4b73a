#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "sdym/rational.hpp"

namespace sdym {

/// Quaternion re + im_i i + im_j j + im_k k with exact rational components.
struct Quaternion {
  Rational re;
  Rational im_i;
  Rational im_j;
  Rational im_k;

  static Quaternion zero() { return {}; }
  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  static Quaternion real(Rational r) { return {std::move(r), 0, 0, 0}; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  Quaternion operator-() const { return {-re, -im_i, -im_j, -im_k}; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::array<Rational, 4> components() const { return {re, im_i, im_j, im_k}; }
  [[nodiscard]] std::string to_string() const;
};

Quaternion conj(const Quaternion& q);
Rational norm_sq(const Quaternion& q);
/// conj(q) / norm_sq(q). Throws DomainError for q == 0.
Quaternion inverse(const Quaternion& q);
Quaternion imaginary_part(const Quaternion& q);
bool is_su2_valued(const Quaternion& q);
/// Residual used when comparing quaternion values.
inline Rational magnitude_sq(const Quaternion& q) { return norm_sq(q); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Complex number with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
  ComplexRational operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
  [[nodiscard]] ComplexRational conj() const { return {re, -im}; }
};

/// 2x2 complex matrix, row-major: (a b; c d). Coefficient type for
/// gl(2, C)-valued cochains.
struct Matrix2C {
  std::array<ComplexRational, 4> m{};

  static Matrix2C zero() { return {}; }
  static Matrix2C one();
  static Matrix2C real(Rational r);

  [[nodiscard]] const ComplexRational& at(int row, int col) const { return m[row * 2 + col]; }
  ComplexRational& at(int row, int col) { return m[row * 2 + col]; }

  Matrix2C& operator+=(const Matrix2C& o);
  Matrix2C& operator-=(const Matrix2C& o);
  Matrix2C& operator*=(const Rational& s);
  friend Matrix2C operator+(Matrix2C a, const Matrix2C& b) { return a += b; }
  friend Matrix2C operator-(Matrix2C a, const Matrix2C& b) { return a -= b; }
  friend Matrix2C operator*(Matrix2C a, const Rational& s) { return a *= s; }
  friend Matrix2C operator*(const Rational& s, Matrix2C a) { return a *= s; }
  friend Matrix2C operator*(const Matrix2C& a, const Matrix2C& b);
  Matrix2C operator-() const;
  friend bool operator==(const Matrix2C&, const Matrix2C&) = default;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] ComplexRational trace() const;
  [[nodiscard]] ComplexRational determinant() const;
  [[nodiscard]] Matrix2C adjoint() const;
  [[nodiscard]] std::string to_string() const;
};

/// Sum of squared real and imaginary parts of all entries.
Rational magnitude_sq(const Matrix2C& m);
/// Skew-Hermitian and traceless.
bool is_su2_valued(const Matrix2C& m);

/// Matrix image of a quaternion: (x1 + x2 i, x3 + x4 i; -x3 + x4 i, x1 - x2 i).
Matrix2C embed(const Quaternion& q);
/// Inverse of embed on its image; nullopt when m is not a quaternion image.
std::optional<Quaternion> pull_back(const Matrix2C& m);

std::ostream& operator<<(std::ostream& os, const Matrix2C& m);

}  // namespace sdym
