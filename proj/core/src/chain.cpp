#include "sdym/chain.hpp"

#include "sdym/errors.hpp"

namespace sdym {

std::string Cell::to_string() const {
  return std::string(doubled ? "~" : "") + "s" + index.to_string() + "[" + dirs.to_string() + "]";
}

Chain::Chain(int degree, bool doubled) : degree_(degree), doubled_(doubled) {
  if (degree < 0 || degree > kDim) throw DegreeError("Chain: degree must be in 0..4");
}

Chain Chain::of(const Cell& cell, const Rational& coefficient) {
  Chain c(cell.dimension(), cell.doubled);
  c.add(cell, coefficient);
  return c;
}

Rational Chain::coefficient(const Cell& cell) const {
  auto it = terms_.find(cell);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Cell& cell, const Rational& coefficient) {
  if (cell.dimension() != degree_ || cell.doubled != doubled_) {
    throw DegreeError("Chain::add: cell " + cell.to_string() + " does not match chain degree " +
                      std::to_string(degree_));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(cell, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree_ != degree_ || o.doubled_ != doubled_) throw DegreeError("Chain: mismatched sum");
  for (const auto& [cell, c] : o.terms_) add(cell, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.degree_ != degree_ || o.doubled_ != doubled_) throw DegreeError("Chain: mismatched sum");
  for (const auto& [cell, c] : o.terms_) add(cell, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [cell, c] : terms_) c *= s;
  return *this;
}

Chain boundary(const Chain& c) {
  if (c.degree() == 0) return Chain(0, c.doubled());
  Chain out(c.degree() - 1, c.doubled());
  for (const auto& [cell, coeff] : c.terms()) {
    for (int axis : cell.dirs.axes()) {
      // Passing d across the factors before `axis` picks up (-1)^{their dimension}.
      const Rational signed_coeff = cell.dirs.count_below(axis) % 2 == 0 ? coeff : -coeff;
      const DirSet face = cell.dirs.without(axis);
      out.add({shift(cell.index, axis), face, cell.doubled}, signed_coeff);
      out.add({cell.index, face, cell.doubled}, -signed_coeff);
    }
  }
  return out;
}

bool boundary_squared_is_zero(const Chain& c) {
  if (c.degree() < 2) return true;
  return boundary(boundary(c)).is_zero();
}

Cell star_cell(const Cell& cell, int& sign) {
  const DirSet comp = cell.dirs.complement();
  sign = permutation_sign(cell.dirs, comp);
  return {cell.index, comp, !cell.doubled};
}

Chain star(const Chain& c) {
  Chain out(kDim - c.degree(), !c.doubled());
  for (const auto& [cell, coeff] : c.terms()) {
    int sign = 1;
    const Cell image = star_cell(cell, sign);
    out.add(image, sign > 0 ? coeff : -coeff);
  }
  return out;
}

}  // namespace sdym
