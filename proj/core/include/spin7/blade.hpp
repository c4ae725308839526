#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace spin7 {

// Basis blades of the exterior algebra over an 8-dimensional space are encoded
// as bitmasks: bit i-1 set means the basis covector e^i appears in the blade.
// The blade associated with a mask always lists its covectors in increasing
// index order, so every sign below is the parity of an explicit permutation.
using Blade = unsigned;

inline constexpr int kDim = 8;
inline constexpr int kBladeCount = 256;
inline constexpr Blade kVolumeBlade = 0xFFu;

constexpr int blade_rank(Blade a) { return std::popcount(a); }

constexpr Blade blade_bit(int index1) { return Blade{1} << (index1 - 1); }

// Mask of all indices strictly below the 1-based index.
constexpr Blade below_mask(int index1) { return blade_bit(index1) - 1u; }

// Number of indices of `a` strictly below the 1-based index.
constexpr int position_in(Blade a, int index1) {
  return std::popcount(a & below_mask(index1));
}

// Parity counter for merging two increasing index lists a, b into one sorted
// list: counts the pairs (j in a, i in b) with i < j.
constexpr int merge_inversions(Blade a, Blade b) {
  int n = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1) n += std::popcount(t & b);
  return n;
}

constexpr double parity_sign(int count) { return (count & 1) ? -1.0 : 1.0; }

// Sign of e_a ^ e_b = sign * e_{a|b}; zero overlap is the caller's concern.
constexpr double wedge_sign(Blade a, Blade b) {
  return parity_sign(merge_inversions(a, b));
}

// Sign of the orthonormal Clifford product e_a <> e_b = sign * e_{a^b}.
// Shared covectors contract with coefficient +1 (Euclidean signature), so the
// sign is again the merge parity of the juxtaposed index lists.
constexpr double clifford_sign(Blade a, Blade b) {
  return parity_sign(merge_inversions(a, b));
}

// Sign of removing the sorted subset s from a by iterated interior products,
// contracting the largest index first: (-1)^{sum of positions of s in a}.
constexpr double contraction_sign(Blade a, Blade s) {
  int n = 0;
  for (Blade t = s; t != 0; t &= t - 1) {
    const int index1 = std::countr_zero(t) + 1;
    n += position_in(a, index1);
  }
  return parity_sign(n);
}

constexpr Blade blade_from_indices(std::initializer_list<int> indices1) {
  Blade m = 0;
  for (int i : indices1) {
    if (i < 1 || i > kDim) throw std::invalid_argument("blade index out of range");
    const Blade bit = blade_bit(i);
    if (m & bit) throw std::invalid_argument("repeated blade index");
    m |= bit;
  }
  return m;
}

// Indices of a blade in increasing order, 1-based.
inline std::vector<int> blade_indices(Blade a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(blade_rank(a)));
  for (Blade t = a; t != 0; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

// All sub-blades of `mask` with exactly `k` covectors, in increasing mask
// order.  Shared immutable table, built on first use.
const std::vector<Blade>& sub_blades(Blade mask, int k);

// All blades of rank k over the full 8 indices, in increasing mask order,
// together with the inverse lookup mask -> position.  Used to coordinatize
// fixed-rank components, e.g. the 70 four-form blades.
const std::vector<Blade>& blades_of_rank(int k);
int blade_rank_index(Blade a);

}  // namespace spin7
