#pragma once

// Guarded rounding of transcendental quantities: a long double estimate is
// used unless it lies within 2^-20 of a rounding boundary, in which case the
// value is recomputed with 100 decimal digits.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>
#include <stdexcept>

#include "sidon/sparse.hpp"

namespace sidon::detail {

using HP = boost::multiprecision::cpp_bin_float_100;

inline constexpr long double kGuard = 1.0L / (1 << 20);

inline const HP& hp_pi() {
  static const HP pi = boost::multiprecision::acos(HP(-1));
  return pi;
}

struct Guarded {
  std::int64_t value = 0;
  bool recomputed = false;
  bool tie = false;  // nearest rounding hit a half-integer; resolved downward
};

/// Floor or nearest of a real value. exact() must return the same value in HP.
template <class Exact>
Guarded round_guarded(long double approx, Rounding mode, Exact exact) {
  Guarded g;
  const long double shifted = mode == Rounding::floor ? approx : approx - 0.5L;
  const long double dist = std::fabs(shifted - std::nearbyint(shifted));
  if (dist > kGuard) {
    g.value = static_cast<std::int64_t>(mode == Rounding::floor ? std::floor(approx) : std::floor(approx + 0.5L));
    return g;
  }
  g.recomputed = true;
  const HP x = exact();
  const HP s = mode == Rounding::floor ? x : x - HP(0.5);
  const HP r = boost::multiprecision::round(s);
  if (boost::multiprecision::abs(s - r) < HP("1e-80")) {
    if (mode == Rounding::floor) throw std::runtime_error("value indistinguishable from an integer at working precision");
    g.tie = true;
    g.value = static_cast<std::int64_t>(r);  // floor(x + 1/2) - 1 would round up; ties go to the lower point
    return g;
  }
  g.value = static_cast<std::int64_t>(boost::multiprecision::floor(mode == Rounding::floor ? x : x + HP(0.5)));
  return g;
}

}  // namespace sidon::detail

namespace sidon::detail {

/// For each listed prime p that has an element pi of Z[sqrt(D)] with norm +-p,
/// log|pi / conj(pi)| together with pi's coordinates; plus log of the fundamental unit.
struct SplitLogs {
  HP regulator;
  std::map<std::uint64_t, HP> log_ratio;
  std::map<std::uint64_t, std::pair<std::string, std::string>> generator;
};
SplitLogs split_logs(std::uint64_t d, const std::vector<std::uint64_t>& primes);

}  // namespace sidon::detail
