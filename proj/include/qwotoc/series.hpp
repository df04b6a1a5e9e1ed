#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qwotoc/otoc.hpp"

namespace qwotoc {

/// Largest N the dense oracle accepts in a series (O((2N)^3) per step).
inline constexpr std::size_t kOracleMaxSites = 64;

/// Method labels valid for a placement, sorted.
///   all:  oracle, block, marginal
///   cc:   bessel, integral, rksum
///   ww:   eigsum, integral, quadratic
///   cw:   derivsum, integral, quadratic
std::vector<std::string> methods_for(Placement placement);

bool is_exact_method(std::string_view method);

/// Samples for t = 0..t_max. Block methods build each momentum sector once and
/// evaluate every step from its eigen-decomposition; the oracle walks one
/// dense power ladder. `threads` splits the time axis (0 = hardware
/// concurrency); every sample is reduced over k in ascending order, so the
/// output does not depend on the thread count.
OtocSeries compute_series(const WalkParams& p, Placement placement, std::string_view method, long t_max,
                          unsigned threads = 1);

}  // namespace qwotoc
