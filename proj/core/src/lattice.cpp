#include "sdym/lattice.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace sdym {

std::int64_t MultiIndex::max_abs() const {
  std::int64_t m = 0;
  for (auto v : k) m = std::max(m, v < 0 ? -v : v);
  return m;
}

std::string MultiIndex::to_string() const {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
         "," + std::to_string(k[3]) + ")";
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) { return os << k.to_string(); }

MultiIndex shift(MultiIndex k, int axis, Shift direction) {
  if (axis < 1 || axis > kDim) throw std::out_of_range("shift: axis must be in 1..4");
  k[axis] += static_cast<int>(direction);
  return k;
}

MultiIndex shift_all(MultiIndex k, unsigned bits) {
  for (int a = 1; a <= kDim; ++a) {
    if ((bits >> (a - 1)) & 1u) k[a] += 1;
  }
  return k;
}

DirSet::DirSet(std::initializer_list<int> axes) {
  for (int a : axes) {
    if (a < 1 || a > kDim) throw std::invalid_argument("DirSet: axis must be in 1..4");
    if (contains(a)) throw std::invalid_argument("DirSet: repeated axis");
    bits_ |= 1u << (a - 1);
  }
}

int DirSet::size() const { return std::popcount(bits_); }

std::vector<int> DirSet::axes() const {
  std::vector<int> out;
  for (int a = 1; a <= kDim; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

int DirSet::count_below(int axis) const {
  return std::popcount(bits_ & ((1u << (axis - 1)) - 1u));
}

std::string DirSet::to_string() const {
  std::string s;
  for (int a : axes()) s += static_cast<char>('0' + a);
  return s;
}

const std::vector<DirSet>& subsets_of_size(int size) {
  static const auto table = [] {
    std::array<std::vector<DirSet>, kDim + 1> t;
    std::vector<DirSet> all;
    for (unsigned b = 0; b < 16; ++b) all.emplace_back(b);
    std::sort(all.begin(), all.end(), [](DirSet x, DirSet y) { return x.axes() < y.axes(); });
    for (DirSet d : all) t[static_cast<std::size_t>(d.size())].push_back(d);
    return t;
  }();
  if (size < 0 || size > kDim) throw std::out_of_range("subsets_of_size: size must be in 0..4");
  return table[static_cast<std::size_t>(size)];
}

int permutation_sign(DirSet first, DirSet second) {
  if (!first.disjoint(second) || (first.bits() | second.bits()) != 0xFu) {
    throw std::invalid_argument("permutation_sign: sets must partition {1,2,3,4}");
  }
  std::vector<int> perm = first.axes();
  for (int a : second.axes()) perm.push_back(a);
  int inversions = 0;
  for (std::size_t x = 0; x < perm.size(); ++x) {
    for (std::size_t y = x + 1; y < perm.size(); ++y) {
      if (perm[x] > perm[y]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int shuffle_sign(DirSet left, DirSet right) {
  int count = 0;
  for (int a : left.axes()) count += right.count_below(a);
  return count % 2 == 0 ? 1 : -1;
}

bool Box::empty() const {
  for (int a = 1; a <= kDim; ++a) {
    if (lo[a] > hi[a]) return true;
  }
  return false;
}

bool Box::contains(const MultiIndex& k) const {
  for (int a = 1; a <= kDim; ++a) {
    if (k[a] < lo[a] || k[a] > hi[a]) return false;
  }
  return true;
}

std::size_t Box::size() const {
  std::size_t n = 1;
  for (int a = 1; a <= kDim; ++a) n *= static_cast<std::size_t>(extent(a));
  return n;
}

std::size_t Box::offset(const MultiIndex& k) const {
  std::size_t off = 0;
  for (int a = 1; a <= kDim; ++a) {
    off = off * static_cast<std::size_t>(extent(a)) + static_cast<std::size_t>(k[a] - lo[a]);
  }
  return off;
}

std::vector<MultiIndex> Box::points() const {
  std::vector<MultiIndex> out;
  if (empty()) return out;
  out.reserve(size());
  MultiIndex k = lo;
  while (true) {
    out.push_back(k);
    int a = kDim;
    while (a >= 1) {
      if (k[a] < hi[a]) {
        ++k[a];
        break;
      }
      k[a] = lo[a];
      --a;
    }
    if (a < 1) break;
  }
  return out;
}

Box Box::shrink_upper(DirSet axes, std::int64_t layers) const {
  Box b = *this;
  for (int a : axes.axes()) b.hi[a] -= layers;
  return b;
}

Box Box::grow_upper(DirSet axes, std::int64_t layers) const { return shrink_upper(axes, -layers); }

Box Box::intersect(const Box& o) const {
  Box b;
  for (int a = 1; a <= kDim; ++a) {
    b.lo[a] = std::max(lo[a], o.lo[a]);
    b.hi[a] = std::min(hi[a], o.hi[a]);
  }
  return b;
}

std::string Box::to_string() const { return "[" + lo.to_string() + ".." + hi.to_string() + "]"; }

std::vector<MultiIndex> shell(std::int64_t radius) {
  std::vector<MultiIndex> out;
  for (const auto& k : Box::cube(-radius, radius).points()) {
    if (k.max_abs() == radius) out.push_back(k);
  }
  return out;
}

}  // namespace sdym
