#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qstab/quiver.hpp"

namespace qstab {

// The indecomposable representation [lo..hi]: one-dimensional on the
// vertices lo..hi with identity maps along the arrows inside, zero
// elsewhere.  Every indecomposable of a type A quiver is of this form.
struct interval_module {
  int lo = 1, hi = 1;

  int length() const { return hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }

  friend bool operator==(const interval_module&, const interval_module&) = default;
};

inline interval_module make_interval(const type_a_quiver& q, int lo, int hi) {
  if (lo < 1 || hi > q.n || lo > hi)
    throw std::invalid_argument("interval_module: endpoints out of range");
  return interval_module{lo, hi};
}

// 0/1 indicator of {lo..hi} as a length-n dimension vector.
inline std::vector<int> dimension_vector(const interval_module& v, int n) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int z = v.lo; z <= v.hi; ++z) d[static_cast<std::size_t>(z - 1)] = 1;
  return d;
}

// All n(n+1)/2 interval modules, lo ascending then hi ascending.
inline std::vector<interval_module> all_indecomposables(const type_a_quiver& q) {
  std::vector<interval_module> out;
  out.reserve(static_cast<std::size_t>(q.n) * (q.n + 1) / 2);
  for (int lo = 1; lo <= q.n; ++lo)
    for (int hi = lo; hi <= q.n; ++hi) out.push_back(interval_module{lo, hi});
  return out;
}

// Subset sweeps over an interval's support are capped at this length.
inline constexpr int max_enumeration_length = 24;

namespace detail {

inline void check_enumeration_guard(const interval_module& v) {
  if (v.length() > max_enumeration_length)
    throw std::length_error("subrepresentations: interval longer than enumeration bound");
}

// Subrepresentations of a thin module are exactly the head-closed support
// subsets: whenever the tail of an arrow inside [lo..hi] lies in the subset,
// so does its head.  Bit j of the mask stands for vertex lo + j.
inline bool head_closed(const type_a_quiver& q, const interval_module& v, std::uint32_t mask) {
  for (int p = v.lo; p < v.hi; ++p) {
    const int j = p - v.lo;
    const bool tail_in = points_right(q, p) ? ((mask >> j) & 1) : ((mask >> (j + 1)) & 1);
    const bool head_in = points_right(q, p) ? ((mask >> (j + 1)) & 1) : ((mask >> j) & 1);
    if (tail_in && !head_in) return false;
  }
  return true;
}

}  // namespace detail

// A subrepresentation of an interval module, stored as its support together
// with the maximal consecutive runs of that support.
struct subrep_set {
  std::vector<int> support;           // ascending vertices
  std::vector<interval_module> runs;  // maximal consecutive runs of support
};

// Every head-closed subset of supp V, including the empty set and the full
// support, in ascending bitmask order (bit j of the mask is vertex lo + j).
inline std::vector<subrep_set> subrepresentations(const type_a_quiver& q, const interval_module& v) {
  if (v.lo < 1 || v.hi > q.n) throw std::invalid_argument("subrepresentations: interval out of range");
  detail::check_enumeration_guard(v);
  const int len = v.length();
  std::vector<subrep_set> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
    if (!detail::head_closed(q, v, mask)) continue;
    subrep_set s;
    for (int j = 0; j < len; ++j) {
      if (!((mask >> j) & 1)) continue;
      const int z = v.lo + j;
      if (!s.runs.empty() && s.runs.back().hi == z - 1)
        s.runs.back().hi = z;
      else
        s.runs.push_back(interval_module{z, z});
      s.support.push_back(z);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// The nonzero indecomposable subrepresentations of V = [lo..hi]: the
// sub-intervals [a..b] with (a = lo or the arrow a-1 -- a points right) and
// (b = hi or the arrow b -- b+1 points left), lo ascending then hi ascending.
// V itself is included.
inline std::vector<interval_module> indecomposable_subreps(const type_a_quiver& q, const interval_module& v) {
  if (v.lo < 1 || v.hi > q.n) throw std::invalid_argument("indecomposable_subreps: interval out of range");
  std::vector<interval_module> out;
  for (int a = v.lo; a <= v.hi; ++a) {
    if (a != v.lo && !points_right(q, a - 1)) continue;
    for (int b = a; b <= v.hi; ++b)
      if (b == v.hi || !points_right(q, b)) out.push_back(interval_module{a, b});
  }
  return out;
}

// The indecomposables supported at the last vertex: the intervals [i..n].
// Each of their supports coincides with one of the Xtilde or Ytilde chains.
inline std::vector<interval_module> indecomposables_containing_last(const type_a_quiver& q) {
  std::vector<interval_module> out;
  out.reserve(static_cast<std::size_t>(q.n));
  for (int i = 1; i <= q.n; ++i) out.push_back(interval_module{i, q.n});
  return out;
}

}  // namespace qstab
