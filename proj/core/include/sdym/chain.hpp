#pragma once

#include <compare>
#include <map>
#include <string>

#include "sdym/lattice.hpp"
#include "sdym/rational.hpp"

namespace sdym {

/// Basis element s_k of C(4) (or of its double when `doubled` is set): the
/// tensor product carrying a 1-dimensional factor e at each axis in `dirs`
/// and a point x at the remaining axes.
struct Cell {
  MultiIndex index;
  DirSet dirs;
  bool doubled = false;

  [[nodiscard]] int dimension() const { return dirs.size(); }

  friend auto operator<=>(const Cell&, const Cell&) = default;

  [[nodiscard]] std::string to_string() const;
};

/// Finite rational combination of cells of a single dimension over a single
/// complex. Zero coefficients are never stored.
class Chain {
 public:
  Chain(int degree, bool doubled = false);

  static Chain of(const Cell& cell, const Rational& coefficient = Rational(1));

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] bool doubled() const { return doubled_; }
  [[nodiscard]] const std::map<Cell, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Cell& cell) const;

  /// Adds `coefficient * cell`; throws DegreeError when the cell does not
  /// belong to this chain's degree and complex.
  void add(const Cell& cell, const Rational& coefficient);

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& s);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain c) { return c *= s; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int degree_;
  bool doubled_;
  std::map<Cell, Rational> terms_;
};

/// Boundary operator: on a 1-D factor de_j = x_{tau j} - x_j and dx_j = 0,
/// extended to C(4) by the graded Leibniz rule. A 0-chain maps to the zero
/// 0-chain.
Chain boundary(const Chain& c);

bool boundary_squared_is_zero(const Chain& c);

/// Star between C(4) and its double: complements the directions at the same
/// index, with the sign of the permutation (dirs, complement).
Chain star(const Chain& c);
Cell star_cell(const Cell& cell, int& sign);

}  // namespace sdym
