#pragma once

#include <complex>
#include <vector>

#include "fdirac/operators.hpp"
#include "fdirac/quadrature.hpp"

namespace fdirac {

/// Sign in the integral equation (I +- F) g = rhs.
enum class OperatorSign { plus, minus };

/// Nystrom solution of g(t) +- int_0^1 K_a(t,s) g(s) ds = rhs(t), where
/// rhs(t) = 2 cos(2 pi a^2 t) (cosine kind) or 2 sin(2 pi a^2 t) (sine kind).
/// The physical solution is phi_a(x) = g(x / a). `grid` is the rule actually
/// used for the solve; on the extended-precision path it may be finer than
/// the requested one (the near-unit eigenvalue cancellations demand it).
struct PhiSolution {
    double a = 0;
    KernelKind kind = KernelKind::cosine;
    OperatorSign sign = OperatorSign::plus;
    QuadratureGrid grid;
    std::vector<double> values;
    double endpoint = 0;  // g(1) = phi_a(a), by Nystrom interpolation
};

PhiSolution solve_phi(double a, KernelKind kind, OperatorSign sign, const QuadratureGrid& grid);

/// Nystrom interpolation of the solution at any t >= 0; for t > 1 this is the
/// entire extension g(t) = rhs(t) -+ (K g)(t).
double phi_eval(const PhiSolution& sol, double t);

/// Analytic t-derivative of the Nystrom interpolation (kernel and rhs entire).
double phi_eval_derivative(const PhiSolution& sol, double t);

/// mu(a) = a (phi_a^+(a) + phi_a^-(a)) (cosine kind; psi analogue for sine).
/// Below s = 2 pi a^2 = 12 this is the endpoint sum; above, the equivalent
/// determinant form a d/da log[det(1+F)/det(1-F)] evaluated at extended
/// precision (the endpoint route needs quadrature orders that grow like
/// e^{2s}-resolving there, the determinant route does not).
struct MuValue {
    double a = 0;
    double u = 0;
    double mu = 0;
};
MuValue mu_value(double a, KernelKind kind, const QuadratureGrid& grid);

/// Residuals of the determinant-derivative identities at one parameter point.
/// All residuals are absolute values; tolerances are the caller's business.
struct IdentityResiduals {
    double a = 0;
    KernelKind kind = KernelKind::cosine;
    double phidet_plus = 0;   // | phi^+(a) - d/da log det(1+F) |
    double phidet_minus = 0;  // | phi^-(a) + d/da log det(1-F) |
    double dlogd = 0;         // | d/da log det(1-D) + 2a int_0^1 g+ g- dt |
    double mu_logratio = 0;   // | mu - a d/da log(det(1+F)/det(1-F)) |
    double mu_square = 0;     // | mu^2 - a d/da (2a^2 int_0^1 g+ g- dt) |
};
IdentityResiduals identity_residuals(double a, KernelKind kind, const QuadratureGrid& grid);

/// Residuals of the coupled first-order system for the cosine pair:
/// a d/da phi+ = delta_x phi- - (1/2 + mu) phi+   (and + <-> -, mu -> -mu),
/// delta_x = x d/dx + 1/2, evaluated on interior nodes. The a-derivative is a
/// centered difference across nearby solves; delta_x is analytic term by term.
struct PhisysResiduals {
    double a = 0;
    double plus_equation = 0;   // max-norm residual, first equation
    double minus_equation = 0;  // second equation
    double mu_consequence = 0;  // | d/da(a int_0^a phi+ phi- dx) - a phi+phi-(a) - a/2 (phi+^2 + phi-^2)(a) |
};
PhisysResiduals phisys_residual(double a, const QuadratureGrid& grid);

/// I(a, s) = int_0^a phi_a^+(x) x^{-s} dx, s = 1/2 + i gamma. The endpoint
/// singularity is removed by t = tau^2; the remaining tau^{-2 i gamma}
/// oscillation is integrated on geometric Gauss-Legendre panels.
std::complex<double> jost_integral(double a, double gamma, const QuadratureGrid& grid);

/// Same integral evaluated from an existing cosine-kind plus-sign solution.
std::complex<double> jost_integral(const PhiSolution& sol, double gamma);

}  // namespace fdirac
