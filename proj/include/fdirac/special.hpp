#pragma once

#include <complex>

namespace fdirac {

/// Point s = 1/2 + i*gamma on the critical line.
struct CriticalPoint {
    double gamma = 0;
    std::complex<double> s() const { return {0.5, gamma}; }
};

/// Principal branch of log Gamma(z); analytic on C minus the cut (-inf, 0].
/// Stirling series after a recurrence shift, reflection for Re z < 1/2.
/// Throws std::invalid_argument at the poles (non-positive integers).
std::complex<double> log_gamma(std::complex<double> z);

/// chi_+(1/2 + i*gamma) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2):
/// the multiplicative representation of the cosine transform on the critical
/// line. Unit modulus for real gamma.
std::complex<double> chi_plus(double gamma);

/// chi_-(1/2 + i*gamma) = pi^(s-1/2) Gamma((2-s)/2) / Gamma((1+s)/2):
/// sine-transform counterpart (odd Gamma factor pi^(-(s+1)/2) Gamma((s+1)/2)).
std::complex<double> chi_minus(double gamma);

/// Density of the spectral measure at gamma:
/// 1 / (2 pi |pi^(-s/2) Gamma(s/2)|^2), s = 1/2 + i*gamma. Positive and even.
double spectral_density(double gamma);

/// Continuous phase of chi_+/chi_- (imaginary part of the log of the Gamma
/// ratio), useful for asymptotic phase-growth checks where arg() would wrap.
double chi_phase(double gamma, bool plus);

}  // namespace fdirac
