#include "sdym/quaternion.hpp"

#include <ostream>

#include "sdym/errors.hpp"

namespace sdym {

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  re += o.re;
  im_i += o.im_i;
  im_j += o.im_j;
  im_k += o.im_k;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  re -= o.re;
  im_i -= o.im_i;
  im_j -= o.im_j;
  im_k -= o.im_k;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  re *= s;
  im_i *= s;
  im_j *= s;
  im_k *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
  return {
      a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j - a.im_k * b.im_k,
      a.re * b.im_i + a.im_i * b.re + a.im_j * b.im_k - a.im_k * b.im_j,
      a.re * b.im_j - a.im_i * b.im_k + a.im_j * b.re + a.im_k * b.im_i,
      a.re * b.im_k + a.im_i * b.im_j - a.im_j * b.im_i + a.im_k * b.re,
  };
}

bool Quaternion::is_zero() const {
  return re.is_zero() && im_i.is_zero() && im_j.is_zero() && im_k.is_zero();
}

std::string Quaternion::to_string() const {
  return "(" + re.to_string() + ", " + im_i.to_string() + ", " + im_j.to_string() + ", " +
         im_k.to_string() + ")";
}

Quaternion conj(const Quaternion& q) { return {q.re, -q.im_i, -q.im_j, -q.im_k}; }

Rational norm_sq(const Quaternion& q) {
  return q.re * q.re + q.im_i * q.im_i + q.im_j * q.im_j + q.im_k * q.im_k;
}

Quaternion inverse(const Quaternion& q) {
  const Rational n = norm_sq(q);
  if (n.is_zero()) throw DomainError("inverse: zero quaternion has no inverse");
  return conj(q) * (Rational(1) / n);
}

Quaternion imaginary_part(const Quaternion& q) { return {0, q.im_i, q.im_j, q.im_k}; }

bool is_su2_valued(const Quaternion& q) { return q.re.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Matrix2C Matrix2C::one() { return Matrix2C::real(1); }

Matrix2C Matrix2C::real(Rational r) {
  Matrix2C out;
  out.at(0, 0) = {r, 0};
  out.at(1, 1) = {std::move(r), 0};
  return out;
}

Matrix2C& Matrix2C::operator+=(const Matrix2C& o) {
  for (std::size_t n = 0; n < 4; ++n) m[n] += o.m[n];
  return *this;
}

Matrix2C& Matrix2C::operator-=(const Matrix2C& o) {
  for (std::size_t n = 0; n < 4; ++n) m[n] -= o.m[n];
  return *this;
}

Matrix2C& Matrix2C::operator*=(const Rational& s) {
  for (auto& z : m) {
    z.re *= s;
    z.im *= s;
  }
  return *this;
}

Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
  Matrix2C out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    }
  }
  return out;
}

Matrix2C Matrix2C::operator-() const {
  Matrix2C out;
  for (std::size_t n = 0; n < 4; ++n) out.m[n] = -m[n];
  return out;
}

bool Matrix2C::is_zero() const {
  for (const auto& z : m) {
    if (!z.re.is_zero() || !z.im.is_zero()) return false;
  }
  return true;
}

ComplexRational Matrix2C::trace() const { return at(0, 0) + at(1, 1); }

ComplexRational Matrix2C::determinant() const {
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

Matrix2C Matrix2C::adjoint() const {
  Matrix2C out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out.at(r, c) = at(c, r).conj();
  }
  return out;
}

std::string Matrix2C::to_string() const {
  auto z = [](const ComplexRational& c) { return c.re.to_string() + "+" + c.im.to_string() + "i"; };
  return "[[" + z(at(0, 0)) + ", " + z(at(0, 1)) + "], [" + z(at(1, 0)) + ", " + z(at(1, 1)) +
         "]]";
}

Rational magnitude_sq(const Matrix2C& m) {
  Rational s;
  for (const auto& z : m.m) s += z.re * z.re + z.im * z.im;
  return s;
}

bool is_su2_valued(const Matrix2C& m) {
  const ComplexRational tr = m.trace();
  return tr.re.is_zero() && tr.im.is_zero() && (m.adjoint() + m).is_zero();
}

Matrix2C embed(const Quaternion& q) {
  Matrix2C out;
  out.at(0, 0) = {q.re, q.im_i};
  out.at(0, 1) = {q.im_j, q.im_k};
  out.at(1, 0) = {-q.im_j, q.im_k};
  out.at(1, 1) = {q.re, -q.im_i};
  return out;
}

std::optional<Quaternion> pull_back(const Matrix2C& m) {
  Quaternion q{m.at(0, 0).re, m.at(0, 0).im, m.at(0, 1).re, m.at(0, 1).im};
  if (embed(q) != m) return std::nullopt;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Matrix2C& m) { return os << m.to_string(); }

}  // namespace sdym
