#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sdym/chain.hpp"
#include "sdym/lattice.hpp"
#include "sdym/quaternion.hpp"
#include "sdym/rational.hpp"

namespace sdym {

/// Coefficient ring of a cochain: quaternions or 2x2 complex matrices.
template <typename C>
concept Coefficient = requires(const C& a, const C& b, const Rational& s) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { s * a } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { C::zero() } -> std::convertible_to<C>;
  { C::one() } -> std::convertible_to<C>;
  { magnitude_sq(a) } -> std::convertible_to<Rational>;
};

/// Homogeneous degree-p cochain of K(4) (or of the double K~(4)).
///
/// Coefficients come either from a rule defined on all of Z^4, or from a
/// table over a finite box (the validity region). Evaluating outside the
/// region throws WindowError. Operations whose operands are all rule-backed
/// return rule-backed forms evaluated lazily; as soon as one operand is
/// windowed, the result is materialized over the (shrunk) region.
///
/// Forms are immutable and cheap to copy.
template <Coefficient C>
class DiscreteForm {
 public:
  using Rule = std::function<C(const MultiIndex&, DirSet)>;

  /// Rule-backed form, total on Z^4. `rule` is only called with direction
  /// sets of size `degree`.
  static DiscreteForm from_rule(int degree, Rule rule, bool doubled = false);
  /// Windowed form: tabulates `generator` over `region`.
  static DiscreteForm tabulate(int degree, const Box& region, const Rule& generator,
                               bool doubled = false);
  static DiscreteForm zero(int degree, bool doubled = false);

  [[nodiscard]] int degree() const { return impl_->degree; }
  [[nodiscard]] bool doubled() const { return impl_->doubled; }
  [[nodiscard]] bool windowed() const { return impl_->region.has_value(); }
  /// nullopt for rule-backed forms (valid on all of Z^4).
  [[nodiscard]] const std::optional<Box>& region() const { return impl_->region; }
  [[nodiscard]] bool defined_at(const MultiIndex& k) const;

  /// Coefficient of the basis cochain at (k, dirs).
  [[nodiscard]] C at(const MultiIndex& k, DirSet dirs) const;

  /// Table over `region` (intersected with the current region, if any).
  [[nodiscard]] DiscreteForm materialize(const Box& region) const;

  /// Same coefficients, attached to the other complex.
  [[nodiscard]] DiscreteForm toggled() const;

  /// Builds a result form: rule-backed when `region` is empty, otherwise
  /// tabulated over it.
  static DiscreteForm make(int degree, bool doubled, const std::optional<Box>& region, Rule rule);

 private:
  struct Impl {
    int degree = 0;
    bool doubled = false;
    std::optional<Box> region;
    Rule rule;
  };
  explicit DiscreteForm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

using QForm = DiscreteForm<Quaternion>;
using MForm = DiscreteForm<Matrix2C>;

// -- region bookkeeping --------------------------------------------------

/// Intersection of two optional regions (nullopt = all of Z^4).
std::optional<Box> intersect(const std::optional<Box>& a, const std::optional<Box>& b);
std::optional<Box> shrink_upper(const std::optional<Box>& r, DirSet axes = DirSet::full());

// -- linear structure ----------------------------------------------------

template <Coefficient C>
DiscreteForm<C> operator+(const DiscreteForm<C>& a, const DiscreteForm<C>& b);
template <Coefficient C>
DiscreteForm<C> operator-(const DiscreteForm<C>& a, const DiscreteForm<C>& b);
template <Coefficient C>
DiscreteForm<C> operator-(const DiscreteForm<C>& a);
/// a * phi, coefficientwise left multiplication.
template <Coefficient C>
DiscreteForm<C> operator*(const C& a, const DiscreteForm<C>& phi);
/// phi * a, coefficientwise right multiplication.
template <Coefficient C>
DiscreteForm<C> operator*(const DiscreteForm<C>& phi, const C& a);
template <Coefficient C>
DiscreteForm<C> operator*(const Rational& s, const DiscreteForm<C>& phi);

// -- cochain operations --------------------------------------------------

/// Pairing <c, phi>: sum over the cells of c of coefficient * phi(cell).
/// Throws DegreeError / ComplexError on mismatched degree or complex, and
/// WindowError if c touches a cell outside phi's region.
template <Coefficient C>
C pair(const Chain& c, const DiscreteForm<C>& phi);

/// Coboundary d^c, dual to the boundary under the pairing. Degree 4 input
/// throws DegreeError. A windowed result loses the top layer along every
/// axis.
template <Coefficient C>
DiscreteForm<C> coboundary(const DiscreteForm<C>& phi);

/// Cup product. Coefficients multiply in the order written. Throws
/// DegreeError when deg(phi) + deg(psi) > 4.
template <Coefficient C>
DiscreteForm<C> cup(const DiscreteForm<C>& phi, const DiscreteForm<C>& psi);

/// Combinatorial Hodge star K(4) <-> K~(4) defined by <c~, *phi> = <*c~, phi>.
template <Coefficient C>
DiscreteForm<C> star(const DiscreteForm<C>& phi);

/// The identification iota~: same coefficients on the other complex.
template <Coefficient C>
DiscreteForm<C> iota(const DiscreteForm<C>& phi);

/// Pointwise inverse of a 0-form. Rule-backed input gives a lazily evaluated
/// result that throws SingularCoefficientError where f vanishes.
QForm inverse(const QForm& f);
/// Pointwise inverse on `region`, checked eagerly: throws
/// SingularCoefficientError naming the first zero coefficient (row-major).
QForm inverse(const QForm& f, const Box& region);

QForm imaginary_part(const QForm& phi);
QForm conj(const QForm& phi);
MForm embed(const QForm& phi);

// -- standard forms -------------------------------------------------------

/// Constant-1 0-form, the unit of the cup product.
template <Coefficient C>
DiscreteForm<C> unit_form(bool doubled = false);

/// Same coefficient on every basis element of the given degree.
template <Coefficient C>
DiscreteForm<C> constant_form(int degree, const C& value, bool doubled = false);

/// a * s at a single cell, zero elsewhere.
template <Coefficient C>
DiscreteForm<C> basis_form(const Cell& cell, const C& a);

/// sum_k s^k_dirs: coefficient 1 on every cell with these directions.
template <Coefficient C>
DiscreteForm<C> basis_sum(DirSet dirs, bool doubled = false);

/// e = sum_k (e_1 + e_2 i + e_3 j + e_4 k); with `conjugate` the form e-bar.
QForm unit_frame(bool conjugate = false);

// -- comparison -----------------------------------------------------------

template <Coefficient C>
struct FormComparison {
  std::size_t points = 0;
  std::size_t components = 0;
  std::size_t mismatches = 0;
  /// max over components of magnitude_sq(lhs - rhs).
  Rational worst;
  std::optional<Cell> first_mismatch;

  [[nodiscard]] bool equal() const { return mismatches == 0; }
};

/// Compares every component of two forms of equal degree over `region`.
template <Coefficient C>
FormComparison<C> compare(const DiscreteForm<C>& a, const DiscreteForm<C>& b, const Box& region);

/// Compares a form against zero over `region`.
template <Coefficient C>
FormComparison<C> compare_zero(const DiscreteForm<C>& a, const Box& region);

}  // namespace sdym
