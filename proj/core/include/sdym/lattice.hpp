#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdym {

/// Number of lattice axes.
inline constexpr int kDim = 4;

/// Lattice point k = (k1, k2, k3, k4). Axes are numbered 1..4 in the public
/// API, matching the direction labels of basis elements.
struct MultiIndex {
  std::array<std::int64_t, kDim> k{};

  constexpr MultiIndex() = default;
  constexpr MultiIndex(std::int64_t k1, std::int64_t k2, std::int64_t k3, std::int64_t k4)
      : k{k1, k2, k3, k4} {}

  /// `axis` in 1..4.
  [[nodiscard]] constexpr std::int64_t operator[](int axis) const { return k[axis - 1]; }
  constexpr std::int64_t& operator[](int axis) { return k[axis - 1]; }

  [[nodiscard]] bool is_diagonal() const { return k[0] == k[1] && k[1] == k[2] && k[2] == k[3]; }
  [[nodiscard]] std::int64_t max_abs() const;

  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  [[nodiscard]] std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

enum class Shift : int { Up = 1, Down = -1 };

/// tau_axis (Up) or sigma_axis (Down). Throws std::out_of_range for an axis
/// outside 1..4.
MultiIndex shift(MultiIndex k, int axis, Shift direction = Shift::Up);

/// Shift by +1 along every axis contained in `bits` (bit a-1 <-> axis a).
MultiIndex shift_all(MultiIndex k, unsigned bits);

/// Sorted subset of the directions {1, 2, 3, 4}.
class DirSet {
 public:
  constexpr DirSet() = default;
  constexpr explicit DirSet(unsigned bits) : bits_(bits & 0xFu) {}
  /// Builds from a list of axes; throws std::invalid_argument on an axis
  /// outside 1..4 or a repeated axis.
  DirSet(std::initializer_list<int> axes);

  static constexpr DirSet full() { return DirSet(0xFu); }

  [[nodiscard]] constexpr unsigned bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(int axis) const { return (bits_ >> (axis - 1)) & 1u; }
  [[nodiscard]] int size() const;
  [[nodiscard]] constexpr DirSet complement() const { return DirSet(~bits_ & 0xFu); }
  [[nodiscard]] constexpr DirSet with(int axis) const { return DirSet(bits_ | (1u << (axis - 1))); }
  [[nodiscard]] constexpr DirSet without(int axis) const {
    return DirSet(bits_ & ~(1u << (axis - 1)));
  }
  [[nodiscard]] constexpr bool disjoint(DirSet o) const { return (bits_ & o.bits_) == 0; }
  /// Axes in ascending order.
  [[nodiscard]] std::vector<int> axes() const;
  /// Number of elements strictly below `axis`.
  [[nodiscard]] int count_below(int axis) const;

  friend constexpr auto operator<=>(DirSet, DirSet) = default;

  /// Direction digits, e.g. "13"; the empty set renders as "".
  [[nodiscard]] std::string to_string() const;

 private:
  unsigned bits_ = 0;
};

/// All subsets of the given size in lexicographic order of their axis lists
/// (e.g. size 2: 12, 13, 14, 23, 24, 34).
const std::vector<DirSet>& subsets_of_size(int size);

/// Sign of the permutation obtained by listing `first` ascending followed by
/// `second` ascending. Requires disjoint sets covering {1..4} together.
int permutation_sign(DirSet first, DirSet second);

/// Sign (+1/-1) of the cup product of basis elements with directions
/// `left` and `right`: (-1)^{#{(a, b) : a in left, b in right, b < a}}.
int shuffle_sign(DirSet left, DirSet right);

/// Inclusive box [lo, hi] in Z^4. Empty when lo[a] > hi[a] on some axis.
struct Box {
  MultiIndex lo;
  MultiIndex hi;

  static Box cube(std::int64_t lo, std::int64_t hi) { return {{lo, lo, lo, lo}, {hi, hi, hi, hi}}; }

  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool contains(const MultiIndex& k) const;
  [[nodiscard]] std::int64_t extent(int axis) const { return empty() ? 0 : hi[axis] - lo[axis] + 1; }
  [[nodiscard]] std::size_t size() const;
  /// Row-major position of k (axis 1 slowest). Requires contains(k).
  [[nodiscard]] std::size_t offset(const MultiIndex& k) const;
  /// All points in row-major order.
  [[nodiscard]] std::vector<MultiIndex> points() const;

  /// Drops the top layer along each axis in `axes`.
  [[nodiscard]] Box shrink_upper(DirSet axes = DirSet::full(), std::int64_t layers = 1) const;
  [[nodiscard]] Box grow_upper(DirSet axes = DirSet::full(), std::int64_t layers = 1) const;
  [[nodiscard]] Box intersect(const Box& o) const;

  friend bool operator==(const Box&, const Box&) = default;

  [[nodiscard]] std::string to_string() const;
};

/// Points with max_a |k_a| == radius.
std::vector<MultiIndex> shell(std::int64_t radius);

}  // namespace sdym
