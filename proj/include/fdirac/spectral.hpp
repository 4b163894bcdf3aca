#pragma once

#include <complex>
#include <vector>

#include "fdirac/operators.hpp"
#include "fdirac/quadrature.hpp"

namespace fdirac {

/// Which Schrodinger branch: A carries mu^2 - mu' (the plus-determinant
/// potential), B carries mu^2 + mu' (its Darboux partner).
enum class Branch { A, B };

const char* to_string(Branch b);

/// mu, mu' and the two partner potentials sampled on a uniform u-grid,
/// u = log a. mu' comes from 4th-order differences of the mu samples; the
/// potentials satisfy v_plus + v_minus = 2 mu^2 and v_minus - v_plus = 2 mu'
/// exactly by construction. Evaluation anywhere uses 6-point local Lagrange
/// interpolation (the samples are analytic in u).
struct PotentialProfile {
    KernelKind kind = KernelKind::cosine;
    double u_min = 0, u_max = 0, du = 0;
    std::vector<double> u;
    std::vector<double> mu;
    std::vector<double> mu_prime;
    std::vector<double> v_plus;   // branch A
    std::vector<double> v_minus;  // branch B
    double cross_residual = 0;    // worst |mu^2 -+ mu' + 2 (log det(1 +- F))''| / max(1, mu^2) sampled

    double mu_at(double uu) const;
    double v_at(double uu, Branch b) const;
    int index_below(double uu) const;
};

/// Build the profile; needs >= 9 points. Throws std::invalid_argument if the
/// window exceeds the supported parameter range (e^{u_max} <= 2.6) or the
/// grid is degenerate. `cross_check` samples the determinant-route potentials
/// at a handful of points and records the worst normalized mismatch.
PotentialProfile potential_profile(KernelKind kind, double u_min, double u_max, double du,
                                   bool cross_check = true);

/// Normalized residuals of the three second-derivative identities at one u:
///   r_d:     | mu^2 + (log det(1-D))'' |          / max(1, mu^2)
///   r_plus:  | (mu^2 - mu') + 2 (log det(1+F))'' | / max(1, |mu^2 - mu'|)
///   r_minus: | (mu^2 + mu') + 2 (log det(1-F))'' | / max(1, |mu^2 + mu'|)
/// The u-second-derivatives use per-point Richardson stencils (h ~ 1e-2), not
/// the display grid; mu and mu' come from the solver route.
struct Theorem1Residuals {
    double u = 0;
    double r_d = 0, r_plus = 0, r_minus = 0;
};
std::vector<Theorem1Residuals> theorem1_residuals(KernelKind kind,
                                                  const std::vector<double>& u_grid);

/// Backward-integrated solution of
///   alpha' = -mu alpha - gamma beta,  beta' = +gamma alpha + mu beta,
/// bounded at +infinity: alpha(u_max) = 1, beta(u_max) = -gamma/(2 mu(u_max)).
/// Samples run from u_stop up to the starting point.
struct DiracState {
    double gamma = 0;
    KernelKind kind = KernelKind::cosine;
    std::vector<double> u, alpha, beta;
};
DiracState dirac_integrate(double gamma, KernelKind kind, const PotentialProfile& profile,
                           double u_stop);

/// Bounded (up to scale) real solution of -psi'' + V psi = gamma^2 psi for the
/// branch potential, integrated backward from the WKB closure
/// psi(u_max) = 1, psi'(u_max) = -sqrt(V - gamma^2), sampled down to u_stop.
struct WaveSolution {
    double gamma = 0;
    Branch branch = Branch::A;
    std::vector<double> u, psi, psi_prime;
};
WaveSolution schrodinger_bounded(double gamma, Branch branch, const PotentialProfile& profile,
                                 double u_stop);

/// Reflection coefficient extracted at the free end: the bounded solution is
/// fitted as psi ~ A e^{-i gamma u} + B e^{+i gamma u} over several points of
/// [u_fit, u_fit+1] and S = B/A (convention fixed against chi_+ at gamma=0.5).
struct ScatterRecord {
    double gamma = 0;
    KernelKind kind = KernelKind::cosine;
    Branch branch = Branch::A;
    std::complex<double> s;          // computed reflection coefficient
    std::complex<double> reference;  // chi reference for this kind/branch
    double phase_error = 0;          // |arg(S conj(ref))|
    double modulus_error = 0;        // | |S| - 1 |
};
ScatterRecord scattering_matrix(double gamma, KernelKind kind, Branch branch,
                                const PotentialProfile& profile);

/// Verification data for the closed-form Jost solution
/// J(u) = e^{-i gamma u} - e^{u/2} I(e^u, s) on a u-window:
///   ode_residual:   worst normalized Schrodinger residual of J (branch A)
///   approach(u):    |J(u) - e^{-i gamma u}| at the requested probe points
///   approach_rate:  fitted C in |J - e^{-i gamma u}| ~ C e^u near the bottom
///   s_cross:        S from the pair {J, conj J} (Wronskian matching)
///   s_cross_error:  |s_cross - S_fit| against scattering_matrix
struct JostReport {
    double gamma = 0;
    double ode_residual = 0;
    std::vector<std::pair<double, double>> approach;  // (u, |J - e^{-i gamma u}|)
    double approach_rate = 0;
    std::complex<double> s_cross;
    double s_cross_error = 0;
};
JostReport jost_verify(double gamma, const PotentialProfile& profile,
                       const std::vector<double>& approach_probes);

/// Least-squares fit of log det(1-D) against {s^2, s, log s, 1} on the given
/// s-samples (s = 2 pi a^2). standard_errors are sqrt of the diagonal of
/// (X^T X)^{-1} sigma^2. Throws std::invalid_argument if the design is
/// ill-conditioned (window too narrow) or fewer than 12 samples are given.
struct AsymptoticFit {
    double c2 = 0, c1 = 0, c_log = 0, c0 = 0;
    double se2 = 0, se1 = 0, se_log = 0, se0 = 0;
    double residual_norm = 0;
};
AsymptoticFit asymptotic_fit(KernelKind kind, const std::vector<double>& s_samples);

/// Zeros in gamma of alpha(u_fixed; gamma) on (0, gamma_max], located by
/// sign-change bracketing on the scan grid plus bisection to 1e-6.
/// step_warning flags adjacent zeros closer than 3 scan steps.
struct ZeroScan {
    std::vector<double> zeros;
    bool step_warning = false;
};
ZeroScan structure_zeros(double u_fixed, double gamma_max, KernelKind kind,
                         const PotentialProfile& profile, double scan_step);

/// Smallest grid u with mu >= mu_floor(gamma) and WKB penetration
/// int sqrt(mu^2 - gamma^2) >= 9 past the turning point; throws if the
/// profile window is too small.
double scattering_start(const PotentialProfile& profile, double gamma);

}  // namespace fdirac
