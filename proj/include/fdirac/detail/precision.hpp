#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace fdirac::detail {

// Extended-precision scalar for the large-a determinant/solve path.
//
// The discretized truncated Fourier operators have top eigenvalue gaps
// ~e^{-2s}, s = 2*pi*a^2. Double arithmetic stops resolving those gaps (and
// with them log-determinants, (1-F)^{-1} solves, and every finite difference
// built on top) around s ~ 16, and loses the accuracy the determinant
// invariants require well before that. 50 digits covers gaps down to
// e^{-100} (s ~ 50, a ~ 2.8) with margin.
using mp_float = boost::multiprecision::cpp_bin_float_50;

// Solves and determinants switch to mp_float above this s = 2*pi*a^2.
inline constexpr double k_mp_threshold_s = 7.0;

inline double oscillation_parameter(double a) { return 2.0 * M_PI * a * a; }

inline bool needs_extended_precision(double a) {
    return oscillation_parameter(a) > k_mp_threshold_s;
}

inline double to_double(double x) { return x; }
inline double to_double(const mp_float& x) { return static_cast<double>(x); }

}  // namespace fdirac::detail
