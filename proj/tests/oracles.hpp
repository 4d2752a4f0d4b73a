#pragma once

// Independent reference computations used only by the test suites. Nothing
// here calls the cochain operations it is used to check.

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sdym/sdym.hpp"

namespace sdym::oracle {

/// Hamilton product through the matrix representation.
inline Quaternion multiply_via_matrices(const Quaternion& a, const Quaternion& b) {
  return *pull_back(embed(a) * embed(b));
}

/// Sign of a permutation of 1..4 by cycle decomposition.
inline int permutation_parity(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int transpositions = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c] - 1)) {
      seen[c] = true;
      ++len;
    }
    transpositions += static_cast<int>(len) - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

/// One factor x^j (dim 0) or e^j (dim 1) of a basis element of K.
struct Factor {
  int dim;
  std::int64_t j;
};

/// 1-D rules: x^j x^j = x^j, e^j x^{tau j} = e^j, x^j e^j = e^j, else zero.
inline std::optional<Factor> cup_1d(Factor a, Factor b) {
  if (a.dim == 0 && b.dim == 0 && a.j == b.j) return Factor{0, a.j};
  if (a.dim == 1 && b.dim == 0 && b.j == a.j + 1) return Factor{1, a.j};
  if (a.dim == 0 && b.dim == 1 && b.j == a.j) return Factor{1, a.j};
  return std::nullopt;
}

/// Cup product of two basis cochains by the literal recursion over the
/// tensor factors: (s_p (x) s^j) cup (s_q (x) s^mu) = Q(j, q) (s_p cup s_q) (x) (s^j cup s^mu),
/// Q = -1 iff dim s^j and dim s_q are both odd. Returns (sign, product
/// cell) or nullopt for a zero product.
inline std::optional<std::pair<int, Cell>> cup_basis_recursive(const Cell& left, const Cell& right) {
  int sign = 1;
  int right_block_dim = 0;  // dimension of the first r factors of `right`
  Cell out{{}, DirSet{}, left.doubled};
  for (int r = 1; r <= kDim; ++r) {
    const Factor a{left.dirs.contains(r) ? 1 : 0, left.index[r]};
    const Factor b{right.dirs.contains(r) ? 1 : 0, right.index[r]};
    if (a.dim == 1 && right_block_dim % 2 == 1) sign = -sign;
    const auto prod = cup_1d(a, b);
    if (!prod) return std::nullopt;
    out.index[r] = prod->j;
    if (prod->dim == 1) out.dirs = out.dirs.with(r);
    right_block_dim += b.dim;
  }
  return std::make_pair(sign, out);
}

/// F_k^{ij} = D_i A_k^j - D_j A_k^i + A_k^i A_{tau_i k}^j - A_k^j A_{tau_j k}^i.
inline Quaternion curvature_component(const QForm& a, const MultiIndex& k, int i, int j) {
  const auto A = [&](const MultiIndex& m, int axis) { return a.at(m, DirSet{axis}); };
  const MultiIndex ki = shift(k, i);
  const MultiIndex kj = shift(k, j);
  return (A(ki, j) - A(k, j)) - (A(kj, i) - A(k, i)) + A(k, i) * A(ki, j) - A(k, j) * A(kj, i);
}

/// Coboundary through its defining adjunction: (d^c phi)(s) = <d s, phi>.
template <typename C>
C coboundary_by_adjunction(const DiscreteForm<C>& phi, const MultiIndex& k, DirSet dirs) {
  return pair(boundary(Chain::of(Cell{k, dirs, phi.doubled()})), phi);
}

inline const std::vector<DirSet>& pairs() { return subsets_of_size(2); }

}  // namespace sdym::oracle
