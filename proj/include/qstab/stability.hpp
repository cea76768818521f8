#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstab/interval.hpp"
#include "qstab/quiver.hpp"
#include "qstab/rational.hpp"

namespace qstab {

using rational_vector = std::vector<rational>;

// A linear stability condition Z = (w, r) with r strictly positive, written
// in the basis of simple modules.  The slope of a nonzero dimension vector d
// is (w.d)/(r.d).
struct central_charge {
  rational_vector w, r;

  central_charge(rational_vector weights, rational_vector radii)
      : w(std::move(weights)), r(std::move(radii)) {
    if (w.size() != r.size() || w.empty())
      throw std::invalid_argument("central_charge: w and r must have equal positive length");
    for (const rational& e : r)
      if (e.sign() <= 0) throw std::invalid_argument("central_charge: r must be entrywise positive");
  }

  int n() const { return static_cast<int>(w.size()); }
};

inline rational slope(const central_charge& z, const std::vector<int>& dim) {
  if (dim.size() != z.w.size()) throw std::invalid_argument("slope: dimension vector length mismatch");
  rational wd = 0, rd = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < dim.size(); ++i) {
    if (dim[i] < 0) throw std::domain_error("slope: negative dimension entry");
    if (dim[i] == 0) continue;
    nonzero = true;
    wd += z.w[i] * rational(dim[i]);
    rd += z.r[i] * rational(dim[i]);
  }
  if (!nonzero) throw std::domain_error("slope: zero dimension vector");
  return wd / rd;
}

// Slope of the thin module supported on the given vertex set.
inline rational slope_of_support(const central_charge& z, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::domain_error("slope: empty support");
  rational wd = 0, rd = 0;
  for (const int v : vertices) {
    if (v < 1 || v > z.n()) throw std::invalid_argument("slope: vertex out of range");
    wd += z.w[static_cast<std::size_t>(v - 1)];
    rd += z.r[static_cast<std::size_t>(v - 1)];
  }
  return wd / rd;
}

inline rational slope(const central_charge& z, const interval_module& v) {
  if (v.lo < 1 || v.hi > z.n()) throw std::invalid_argument("slope: interval out of range");
  rational wd = 0, rd = 0;
  for (int u = v.lo; u <= v.hi; ++u) {
    wd += z.w[static_cast<std::size_t>(u - 1)];
    rd += z.r[static_cast<std::size_t>(u - 1)];
  }
  return wd / rd;
}

// King-style weight attached to Z and V: theta = r(V) w - w(V) r, so that
// theta(V) = 0 and V is Z-stable exactly when it is theta-stable.
inline rational_vector theta_weight(const central_charge& z, const interval_module& v) {
  if (v.lo < 1 || v.hi > z.n()) throw std::invalid_argument("theta_weight: interval out of range");
  rational wv = 0, rv = 0;
  for (int u = v.lo; u <= v.hi; ++u) {
    wv += z.w[static_cast<std::size_t>(u - 1)];
    rv += z.r[static_cast<std::size_t>(u - 1)];
  }
  rational_vector theta(z.w.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = rv * z.w[i] - wv * z.r[i];
  return theta;
}

enum class subrep_mode { all_subreps, indecomposable_subreps };

namespace detail {

// w and r rescaled by positive constants onto a common integer grid.  Slope
// comparisons are invariant under both rescalings, so stability verdicts can
// run on plain integers.  ok is false when the inputs are too large for the
// grid; callers then fall back to rational arithmetic.
struct scaled_charge {
  std::vector<__int128> w, r;
  bool ok = false;
};

inline scaled_charge scale_charge(const central_charge& z) {
  constexpr __int128 cap = __int128{1} << 55;
  scaled_charge s;
  const auto common_denominator = [&](const rational_vector& vec, __int128& out) {
    __int128 l = 1;
    for (const rational& e : vec) {
      __int128 d = e.den();
      __int128 g = l, b = d;
      while (b != 0) {
        const __int128 t = g % b;
        g = b;
        b = t;
      }
      l = l / g * d;
      if (l > cap) return false;
    }
    out = l;
    return true;
  };
  __int128 lw = 1, lr = 1;
  if (!common_denominator(z.w, lw) || !common_denominator(z.r, lr)) return s;
  s.w.reserve(z.w.size());
  s.r.reserve(z.r.size());
  for (std::size_t i = 0; i < z.w.size(); ++i) {
    const __int128 sw = __int128(z.w[i].num()) * (lw / z.w[i].den());
    const __int128 sr = __int128(z.r[i].num()) * (lr / z.r[i].den());
    if (sw > cap || sw < -cap || sr > cap) return s;
    s.w.push_back(sw);
    s.r.push_back(sr);
  }
  s.ok = true;
  return s;
}

// Sign of mu(a) - mu(b) for accumulated (w.d, r.d) pairs; both r-parts > 0.
inline int cmp_accumulated(__int128 wa, __int128 ra, __int128 wb, __int128 rb) {
  const __int128 lhs = wa * rb;
  const __int128 rhs = wb * ra;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

inline bool is_stable_scaled(const scaled_charge& s, const type_a_quiver& q,
                             const interval_module& v, subrep_mode mode) {
  const int len = v.length();
  __int128 wv = 0, rv = 0;
  for (int u = v.lo; u <= v.hi; ++u) {
    wv += s.w[static_cast<std::size_t>(u - 1)];
    rv += s.r[static_cast<std::size_t>(u - 1)];
  }
  if (mode == subrep_mode::all_subreps) {
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << len); ++mask) {
      if (!head_closed(q, v, mask)) continue;
      __int128 ww = 0, rw = 0;
      for (int j = 0; j < len; ++j)
        if ((mask >> j) & 1) {
          ww += s.w[static_cast<std::size_t>(v.lo + j - 1)];
          rw += s.r[static_cast<std::size_t>(v.lo + j - 1)];
        }
      if (cmp_accumulated(ww, rw, wv, rv) >= 0) return false;
    }
    return true;
  }
  for (const interval_module& w : indecomposable_subreps(q, v)) {
    if (w == v) continue;
    __int128 ww = 0, rw = 0;
    for (int u = w.lo; u <= w.hi; ++u) {
      ww += s.w[static_cast<std::size_t>(u - 1)];
      rw += s.r[static_cast<std::size_t>(u - 1)];
    }
    if (cmp_accumulated(ww, rw, wv, rv) >= 0) return false;
  }
  return true;
}

inline bool is_stable_rational(const central_charge& z, const type_a_quiver& q,
                               const interval_module& v, subrep_mode mode) {
  const rational mu_v = slope(z, v);
  if (mode == subrep_mode::all_subreps) {
    const int len = v.length();
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << len); ++mask) {
      if (!head_closed(q, v, mask)) continue;
      rational ww = 0, rw = 0;
      for (int j = 0; j < len; ++j)
        if ((mask >> j) & 1) {
          ww += z.w[static_cast<std::size_t>(v.lo + j - 1)];
          rw += z.r[static_cast<std::size_t>(v.lo + j - 1)];
        }
      if (!(ww / rw < mu_v)) return false;
    }
    return true;
  }
  for (const interval_module& w : indecomposable_subreps(q, v)) {
    if (w == v) continue;
    if (!(slope(z, w) < mu_v)) return false;
  }
  return true;
}

}  // namespace detail

// Z-stability of an interval module: every proper nonzero subrepresentation
// has strictly smaller slope.  The two modes check the same condition over
// all subrepresentations or only the indecomposable ones; the verdicts agree.
inline bool is_stable(const central_charge& z, const type_a_quiver& q, const interval_module& v,
                      subrep_mode mode = subrep_mode::all_subreps) {
  if (z.n() != q.n) throw std::invalid_argument("is_stable: charge length mismatch");
  if (v.lo < 1 || v.hi > q.n) throw std::invalid_argument("is_stable: interval out of range");
  if (mode == subrep_mode::all_subreps) detail::check_enumeration_guard(v);
  const detail::scaled_charge s = detail::scale_charge(z);
  if (s.ok) return detail::is_stable_scaled(s, q, v, mode);
  return detail::is_stable_rational(z, q, v, mode);
}

// theta-stability in King's sense: theta(V) = 0 and theta(W) < 0 for every
// proper nonzero subrepresentation W.
inline bool is_theta_stable(const rational_vector& theta, const type_a_quiver& q,
                            const interval_module& v) {
  if (static_cast<int>(theta.size()) != q.n)
    throw std::invalid_argument("is_theta_stable: weight length mismatch");
  if (v.lo < 1 || v.hi > q.n) throw std::invalid_argument("is_theta_stable: interval out of range");
  detail::check_enumeration_guard(v);
  const int len = v.length();
  rational on_v = 0;
  for (int u = v.lo; u <= v.hi; ++u) on_v += theta[static_cast<std::size_t>(u - 1)];
  if (!on_v.is_zero()) return false;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << len); ++mask) {
    if (!detail::head_closed(q, v, mask)) continue;
    rational on_w = 0;
    for (int j = 0; j < len; ++j)
      if ((mask >> j) & 1) on_w += theta[static_cast<std::size_t>(v.lo + j - 1)];
    if (on_w.sign() >= 0) return false;
  }
  return true;
}

// One slope inequality between two thin modules, read as
// mu([lhs]) > mu([rhs]) strictly.
struct inequality_record {
  std::vector<int> lhs, rhs;  // ascending vertex sets

  friend bool operator==(const inequality_record&, const inequality_record&) = default;
};

// The n-1 defining inequalities of total stability: down the X levels
// (mu([X_k]) > mu([X_{k+1}])) and then up the Y levels, restated so every
// record reads lhs > rhs (mu([Y_{l+1}]) > mu([Y_l])).
struct inequality_system {
  int n = 1;
  std::vector<inequality_record> items;
};

inline inequality_system total_stability_inequalities(const type_a_quiver& q) {
  const level_decomposition ld = level_sets(q);
  inequality_system sys;
  sys.n = q.n;
  for (std::size_t k = 0; k + 1 < ld.x_levels.size(); ++k)
    sys.items.push_back(inequality_record{ld.x_levels[k], ld.x_levels[k + 1]});
  for (std::size_t l = 0; l + 1 < ld.y_levels.size(); ++l)
    sys.items.push_back(inequality_record{ld.y_levels[l + 1], ld.y_levels[l]});
  return sys;
}

inline bool record_holds(const central_charge& z, const inequality_record& rec) {
  return slope_of_support(z, rec.lhs) > slope_of_support(z, rec.rhs);
}

// 1-based index of the first violated record, or nullopt when Z is totally
// stable.
inline std::optional<int> first_violation(const type_a_quiver& q, const central_charge& z) {
  if (z.n() != q.n) throw std::invalid_argument("first_violation: charge length mismatch");
  const inequality_system sys = total_stability_inequalities(q);
  for (std::size_t i = 0; i < sys.items.size(); ++i)
    if (!record_holds(z, sys.items[i])) return static_cast<int>(i) + 1;
  return std::nullopt;
}

// Total stability via the n-1 level-set inequalities.
inline bool is_totally_stable_fast(const type_a_quiver& q, const central_charge& z) {
  return !first_violation(q, z).has_value();
}

// Total stability from the definition: every indecomposable is Z-stable,
// with stability checked over all subrepresentations.
inline bool is_totally_stable_oracle(const type_a_quiver& q, const central_charge& z) {
  for (const interval_module& v : all_indecomposables(q))
    if (!is_stable(z, q, v, subrep_mode::all_subreps)) return false;
  return true;
}

// The equivalent nested-chain form: slopes strictly decreasing down the
// Xtilde chain and strictly increasing up the Ytilde chain.
inline bool check_chains(const type_a_quiver& q, const central_charge& z) {
  if (z.n() != q.n) throw std::invalid_argument("check_chains: charge length mismatch");
  const level_decomposition ld = level_sets(q);
  for (std::size_t i = 0; i + 1 < ld.x_chains.size(); ++i)
    if (!(slope_of_support(z, ld.x_chains[i]) > slope_of_support(z, ld.x_chains[i + 1])))
      return false;
  for (std::size_t i = 0; i + 1 < ld.y_chains.size(); ++i)
    if (!(slope_of_support(z, ld.y_chains[i]) < slope_of_support(z, ld.y_chains[i + 1])))
      return false;
  return true;
}

}  // namespace qstab
