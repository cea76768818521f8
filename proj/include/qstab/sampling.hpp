#pragma once

#include <cstdint>
#include <string>

#include "qstab/interval.hpp"
#include "qstab/quiver.hpp"
#include "qstab/stability.hpp"

namespace qstab {

// splitmix64: tiny deterministic generator, identical on every platform.
// Seeded sweeps and property suites must reproduce bit-for-bit, so the
// standard library distributions (implementation-defined) are avoided.
struct split_mix64 {
  std::uint64_t state;

  explicit split_mix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [lo, hi]; the modulo bias is irrelevant at the tiny
  // ranges used here.
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Deterministic sampler for charges and quivers.  Weight entries are
// integers in [-10, 10] over denominators in [1, 10]; positive entries have
// numerators in [1, 10].  Small denominators keep the exact arithmetic fast.
struct charge_sampler {
  split_mix64 rng;

  explicit charge_sampler(std::uint64_t seed) : rng(seed) {}

  rational weight_entry() {
    const long long num = rng.in_range(-10, 10);
    const long long den = rng.in_range(1, 10);
    return rational(num, den);
  }

  rational positive_entry() {
    const long long num = rng.in_range(1, 10);
    const long long den = rng.in_range(1, 10);
    return rational(num, den);
  }

  rational_vector weight_vector(int n) {
    rational_vector v(static_cast<std::size_t>(n));
    for (rational& e : v) e = weight_entry();
    return v;
  }

  rational_vector positive_vector(int n) {
    rational_vector v(static_cast<std::size_t>(n));
    for (rational& e : v) e = positive_entry();
    return v;
  }

  central_charge charge(int n) { return central_charge(weight_vector(n), positive_vector(n)); }

  type_a_quiver quiver(int n) {
    std::string word(static_cast<std::size_t>(n - 1), 'L');
    for (char& c : word) c = (rng.next() & 1) ? 'R' : 'L';
    return type_a_quiver{n, std::move(word)};
  }

  interval_module interval(int n) {
    const int lo = static_cast<int>(rng.in_range(1, n));
    const int hi = static_cast<int>(rng.in_range(lo, n));
    return interval_module{lo, hi};
  }
};

}  // namespace qstab
