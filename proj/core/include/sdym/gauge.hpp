#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "sdym/form.hpp"

namespace sdym {

/// Which unit 1-form a quaternionic potential is built on: e or e-bar.
enum class Frame { E, EBar };

/// Discrete SU(2) connection A = sum_k sum_i A_k^i e_i^k.
///
/// When built from a generating 0-form f, A = Im(f cup e) (or Im(f cup e-bar))
/// and the unprojected 1-form f cup e stays available: several identities
/// (flatness of the pure gauge, the gauge behaviour at infinity) are
/// statements about the unprojected form.
struct Connection {
  QForm potential;
  std::optional<QForm> generator;
  Frame frame = Frame::E;

  /// Throws DegreeError unless `a` has degree 1.
  static Connection from_potential(QForm a);
  static Connection from_generator(QForm f, Frame frame = Frame::E);

  /// f cup frame. Throws std::logic_error without a generator.
  [[nodiscard]] QForm unprojected() const;
};

/// F = d^c A + A cup A, i.e.
/// F_k^{ij} = D_i A_k^j - D_j A_k^i + A_k^i A_{tau_i k}^j - A_k^j A_{tau_j k}^i.
QForm curvature(const QForm& potential);
inline QForm curvature(const Connection& a) { return curvature(a.potential); }

/// su(2)-valued curvature of a connection with a generator:
/// Im{d^c f cup e + (f cup e) cup (f cup e)} (e-bar for Frame::EBar).
QForm quaternionic_curvature(const Connection& a);

/// d_A Omega = d^c Omega + A cup Omega + (-1)^{p+1} Omega cup A.
QForm covariant_differential(const QForm& potential, const QForm& omega);

/// Left-hand sides of the discrete Yang-Mills equations for F = curvature(A):
/// d_A F (the Bianchi expression) and d_A (star iota F).
struct YangMillsResiduals {
  QForm bianchi;
  QForm dual;
};
YangMillsResiduals ym_residuals(const QForm& potential);

/// Gauge 0-form with unit-norm coefficients.
class GaugeTransform {
 public:
  /// Validates |g_k| = 1 on `region` (DomainError otherwise).
  static GaugeTransform checked(QForm g, const Box& region);
  /// Constant gauge; throws DomainError unless |g| = 1.
  static GaugeTransform constant(const Quaternion& g);

  [[nodiscard]] const QForm& form() const { return g_; }
  /// g^{-1} = conj(g) pointwise.
  [[nodiscard]] QForm inverse() const { return conj(g_); }

 private:
  explicit GaugeTransform(QForm g) : g_(std::move(g)) {}
  QForm g_;
};

/// A -> g^{-1} cup A cup g + g^{-1} cup d^c g for a unit gauge. No imaginary
/// part is taken.
QForm gauge_transform(const QForm& potential, const GaugeTransform& g);

/// General quaternionic gauge 0-form, evaluated on `region`. Throws
/// SingularGaugeError naming the first point of `region` (or of its upper
/// neighbours) where g vanishes. The imaginary part of the transformed form
/// is taken unless g has unit norm everywhere it is read.
QForm gauge_transform(const QForm& potential, const QForm& g, const Box& region);

/// Real quaternion part of every F_k^{ij} on `region`, keyed by cell.
using Su2Residuals = std::map<Cell, Rational>;
Su2Residuals su2_residuals(const QForm& curvature, const Box& region);

/// The six real-part conditions for F built from A = Im(f cup e), written in
/// the components of f, in pair order 12, 13, 14, 23, 24, 34.
std::array<Rational, 6> su2_conditions(const QForm& generator, const MultiIndex& k);

enum class Duality { SelfDual, AntiSelfDual, Flat, Neither };
const char* to_string(Duality d);

/// F - iota(*F) and F + iota(*F).
QForm self_dual_residual(const QForm& f);
QForm anti_self_dual_residual(const QForm& f);

struct DualityEntry {
  MultiIndex k;
  /// F12 - F34, F13 + F24, F14 - F23.
  std::array<Quaternion, 3> self_dual;
  /// F12 + F34, F13 - F24, F14 + F23.
  std::array<Quaternion, 3> anti_self_dual;
  /// Real parts of F12, F13, F14, F23, F24, F34.
  std::array<Rational, 6> su2;
};

struct DualityReport {
  Box region;
  std::vector<DualityEntry> entries;
  Duality classification = Duality::Neither;
  Rational worst_self_dual;
  Rational worst_anti_self_dual;
  Rational worst_su2;

  [[nodiscard]] bool self_dual() const {
    return classification == Duality::SelfDual || classification == Duality::Flat;
  }
  [[nodiscard]] bool anti_self_dual() const {
    return classification == Duality::AntiSelfDual || classification == Duality::Flat;
  }
};

/// Componentwise duality check of a 2-form over `region`. Worst residuals
/// are max norm_sq (max |.| for the su(2) column).
DualityReport duality_classify(const QForm& curvature, const Box& region);

/// Points of `region` paired with the six curvature components, pair order
/// 12, 13, 14, 23, 24, 34.
using CurvatureComponents = std::array<Quaternion, 6>;
CurvatureComponents components_at(const QForm& curvature, const MultiIndex& k);

}  // namespace sdym
