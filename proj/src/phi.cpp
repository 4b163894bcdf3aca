#include "fdirac/phi.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "fdirac/detail/core.hpp"
#include "fdirac/detail/precision.hpp"
#include "fdirac/numdiff.hpp"

namespace fdirac {
namespace {

using detail::mp_float;

// The solve-route endpoint rides on a cancellation of size ~e^{-2s} between
// the near-unit eigendirection and the rest; the quadrature must resolve it,
// which costs nodes. Verified stable: n=96 to s~12 (minus sign) and s~17
// (plus sign), n=128/160 beyond.
int mp_solve_nodes(double a, KernelKind, OperatorSign sign, int requested) {
    const double s = detail::oscillation_parameter(a);
    int n = std::max(requested, 96);
    const double plus_slack = (sign == OperatorSign::plus) ? 4.0 : 0.0;
    if (s > 12.0 + plus_slack) n = std::max(n, 128);
    if (s > 16.0 + plus_slack) n = std::max(n, 160);
    if (s > 20.0 + plus_slack) n = std::max(n, 224);
    return n;
}

int sign_of(OperatorSign s) { return s == OperatorSign::plus ? +1 : -1; }

double mu_det_route(double a, KernelKind kind);

}  // namespace

PhiSolution solve_phi(double a, KernelKind kind, OperatorSign sign, const QuadratureGrid& grid) {
    if (!(a > 0)) throw std::invalid_argument("solve_phi: a must be positive");
    PhiSolution sol;
    sol.a = a;
    sol.kind = kind;
    sol.sign = sign;
    if (!detail::needs_extended_precision(a)) {
        sol.grid = grid;
        detail::BasicGrid<double> g{grid.nodes, grid.weights};
        auto pv = detail::solve_phi_basic(a, kind, sign_of(sign), g);
        sol.values = std::move(pv.values);
        sol.endpoint = pv.endpoint;
        return sol;
    }
    const int n = mp_solve_nodes(a, kind, sign, grid.n);
    const auto g = detail::gauss_legendre_basic<mp_float>(n);
    auto pv = detail::solve_phi_basic(mp_float(a), kind, sign_of(sign), g);
    sol.grid = gauss_legendre(n);
    sol.values.resize(n);
    for (int i = 0; i < n; ++i) sol.values[i] = detail::to_double(pv.values[i]);
    sol.endpoint = detail::to_double(pv.endpoint);
    return sol;
}

double phi_eval(const PhiSolution& sol, double t) {
    if (!(t >= 0)) throw std::invalid_argument("phi_eval: t must be non-negative");
    const int n = sol.grid.n;
    double acc = 0;
    for (int j = 0; j < n; ++j)
        acc += sol.grid.weights[j] *
               detail::kernel_value(sol.a, sol.kind, t, sol.grid.nodes[j]) * sol.values[j];
    const double s = 2.0 * M_PI * sol.a * sol.a;
    const double rhs = sol.kind == KernelKind::cosine ? 2.0 * std::cos(s * t) : 2.0 * std::sin(s * t);
    return rhs - sign_of(sol.sign) * acc;
}

double phi_eval_derivative(const PhiSolution& sol, double t) {
    const int n = sol.grid.n;
    const double a = sol.a;
    const double s = 2.0 * M_PI * a * a;
    double acc = 0;
    for (int j = 0; j < n; ++j) {
        const double xj = sol.grid.nodes[j];
        const double dk = sol.kind == KernelKind::cosine
                              ? -2.0 * a * s * xj * std::sin(s * t * xj)
                              : 2.0 * a * s * xj * std::cos(s * t * xj);
        acc += sol.grid.weights[j] * dk * sol.values[j];
    }
    const double drhs =
        sol.kind == KernelKind::cosine ? -2.0 * s * std::sin(s * t) : 2.0 * s * std::cos(s * t);
    return drhs - sign_of(sol.sign) * acc;
}

namespace {

// a d/da log[det(1+F)/det(1-F)] at extended precision; plain 4th-order
// stencil (the 5th a-derivative of the log ratio is O(1), so truncation is
// ~1e-13 at h=1e-3 and Richardson is unnecessary).
double mu_det_route(double a, KernelKind kind) {
    const double s = detail::oscillation_parameter(a);
    const int n = s <= 26.0 ? 96 : 128;
    const auto g = detail::gauss_legendre_basic<mp_float>(n);
    const mp_float h = mp_float(1) / 1000 * mp_float(std::max(1.0, a));
    auto log_ratio = [&](const mp_float& aa) {
        const auto p =
            detail::lu_log_det(detail::lu_factor(detail::nystrom_system(aa, kind, g, +1))).first;
        const auto m =
            detail::lu_log_det(detail::lu_factor(detail::nystrom_system(aa, kind, g, -1))).first;
        return p - m;
    };
    const mp_float aa(a);
    const mp_float d = (-log_ratio(aa + 2 * h) + 8 * log_ratio(aa + h) - 8 * log_ratio(aa - h) +
                        log_ratio(aa - 2 * h)) /
                       (12 * h);
    return detail::to_double(aa * d);
}

constexpr double k_mu_route_switch_s = 12.0;

}  // namespace

MuValue mu_value(double a, KernelKind kind, const QuadratureGrid& grid) {
    if (!(a > 0)) throw std::invalid_argument("mu_value: a must be positive");
    MuValue m;
    m.a = a;
    m.u = std::log(a);
    if (detail::oscillation_parameter(a) <= k_mu_route_switch_s) {
        const auto gp = solve_phi(a, kind, OperatorSign::plus, grid);
        const auto gm = solve_phi(a, kind, OperatorSign::minus, grid);
        m.mu = a * (gp.endpoint + gm.endpoint);
    } else {
        m.mu = mu_det_route(a, kind);
    }
    return m;
}

namespace {

// Richardson-combined 4th-order derivative from samples at x + k*(h/2),
// k in {-4,-2,-1,+1,+2,+4} (one shared stencil for several observables).
double richardson_d1(const std::array<double, 6>& f, double h) {
    // order: k = -4, -2, -1, +1, +2, +4
    const double d_h = (-f[5] + 8 * f[4] - 8 * f[1] + f[0]) / (12 * h);
    const double d_h2 = (-f[4] + 8 * f[3] - 8 * f[2] + f[1]) / (6 * h);
    return (16 * d_h2 - d_h) / 15;
}

constexpr std::array<int, 6> k_stencil_offsets = {-4, -2, -1, 1, 2, 4};

}  // namespace

IdentityResiduals identity_residuals(double a, KernelKind kind, const QuadratureGrid& grid) {
    if (!(a > 0)) throw std::invalid_argument("identity_residuals: a must be positive");
    const auto gp = solve_phi(a, kind, OperatorSign::plus, grid);
    const auto gm = solve_phi(a, kind, OperatorSign::minus, grid);
    const double h = 1e-3 * std::max(1.0, a);

    std::array<double, 6> f_plus{}, f_minus{}, f_d{}, f_prod{};
    for (size_t i = 0; i < k_stencil_offsets.size(); ++i) {
        const double aa = a + k_stencil_offsets[i] * (h / 2);
        const auto rec = fredholm_dets(aa, kind, grid);
        f_plus[i] = rec.log_det_plus;
        f_minus[i] = rec.log_det_minus;
        f_d[i] = rec.log_det_d;
        const auto p = solve_phi(aa, kind, OperatorSign::plus, grid);
        const auto q = solve_phi(aa, kind, OperatorSign::minus, grid);
        double acc = 0;
        for (int j = 0; j < p.grid.n; ++j) acc += p.grid.weights[j] * p.values[j] * q.values[j];
        f_prod[i] = 2.0 * aa * aa * acc;  // a * int_{-a}^{a} phi+ phi- dx
    }
    const double d_plus = richardson_d1(f_plus, h);
    const double d_minus = richardson_d1(f_minus, h);
    const double d_d = richardson_d1(f_d, h);
    const double d_prod = richardson_d1(f_prod, h);

    // int_0^1 g+ g- dt on the solve grid (both solves share one rule)
    double overlap = 0;
    for (int j = 0; j < gp.grid.n; ++j)
        overlap += gp.grid.weights[j] * gp.values[j] * gm.values[j];

    const double mu = a * (gp.endpoint + gm.endpoint);
    IdentityResiduals r;
    r.a = a;
    r.kind = kind;
    r.phidet_plus = std::abs(gp.endpoint - d_plus);
    r.phidet_minus = std::abs(gm.endpoint + d_minus);
    r.dlogd = std::abs(d_d + 2.0 * a * overlap);
    r.mu_logratio = std::abs(mu - a * (d_plus - d_minus));
    r.mu_square = std::abs(mu * mu - a * d_prod);
    return r;
}

PhisysResiduals phisys_residual(double a, const QuadratureGrid& grid) {
    if (!(a > 0)) throw std::invalid_argument("phisys_residual: a must be positive");
    const KernelKind kind = KernelKind::cosine;
    const double h = 1e-3 * std::max(1.0, a);

    // solutions at the stencil points, interpolated onto the interior nodes
    // of the base grid (fixed t, varying a)
    const int n = grid.n;
    const int lo = n / 8, hi = n - n / 8;  // interior nodes
    std::vector<double> t(grid.nodes.begin() + lo, grid.nodes.begin() + hi);
    const int m = static_cast<int>(t.size());

    auto sampled = [&](double aa, OperatorSign sign) {
        const auto sol = solve_phi(aa, kind, sign, grid);
        std::vector<double> v(m);
        for (int i = 0; i < m; ++i) v[i] = phi_eval(sol, t[i]);
        return v;
    };

    const auto gp = solve_phi(a, kind, OperatorSign::plus, grid);
    const auto gm = solve_phi(a, kind, OperatorSign::minus, grid);
    const double mu = a * (gp.endpoint + gm.endpoint);

    auto fd_vec = [&](OperatorSign sign) {
        const auto f2 = sampled(a + 2 * h, sign), f1 = sampled(a + h, sign);
        const auto b1 = sampled(a - h, sign), b2 = sampled(a - 2 * h, sign);
        std::vector<double> d(m);
        for (int i = 0; i < m; ++i) d[i] = (-f2[i] + 8 * f1[i] - 8 * b1[i] + b2[i]) / (12 * h);
        return d;
    };
    const auto dgp = fd_vec(OperatorSign::plus);
    const auto dgm = fd_vec(OperatorSign::minus);

    PhisysResiduals out;
    out.a = a;
    for (int i = 0; i < m; ++i) {
        const double vp = phi_eval(gp, t[i]), vm = phi_eval(gm, t[i]);
        const double dp = phi_eval_derivative(gp, t[i]), dm = phi_eval_derivative(gm, t[i]);
        const double r1 = a * dgp[i] - t[i] * dp - (t[i] * dm + 0.5 * vm) + (0.5 + mu) * vp;
        const double r2 = a * dgm[i] - t[i] * dm - (t[i] * dp + 0.5 * vp) + (0.5 - mu) * vm;
        out.plus_equation = std::max(out.plus_equation, std::abs(r1));
        out.minus_equation = std::max(out.minus_equation, std::abs(r2));
    }

    auto area = [&](double aa) {
        const auto p = solve_phi(aa, kind, OperatorSign::plus, grid);
        const auto q = solve_phi(aa, kind, OperatorSign::minus, grid);
        double acc = 0;
        for (int j = 0; j < p.grid.n; ++j) acc += p.grid.weights[j] * p.values[j] * q.values[j];
        return aa * aa * acc;  // a int_0^a phi+ phi- dx
    };
    const double d_area = fd_derivative(area, a, h).value;
    out.mu_consequence = std::abs(d_area - a * gp.endpoint * gm.endpoint -
                                  0.5 * a * (gp.endpoint * gp.endpoint + gm.endpoint * gm.endpoint));
    return out;
}

std::complex<double> jost_integral(const PhiSolution& sol, double gamma) {
    if (sol.kind != KernelKind::cosine || sol.sign != OperatorSign::plus)
        throw std::invalid_argument("jost_integral: needs the cosine-kind plus-sign solution");
    // int_0^1 g(t) t^{-s} dt with t = tau^2: integrand 2 tau^{-2 i gamma} g(tau^2),
    // bounded but oscillating in log tau; dyadic panels keep the per-panel
    // phase change at 2 gamma log 2, subdivided so each piece stays below ~3.
    static const QuadratureGrid panel_rule = gauss_legendre(16);
    const int subdiv = std::max(1, static_cast<int>(std::ceil(2.0 * std::abs(gamma) * M_LN2 / 3.0)));
    std::complex<double> total = 0.0;
    double hi = 1.0;
    for (int k = 0; k < 60 && hi > 1e-17; ++k) {
        const double lo = hi / 2;
        const double step = (hi - lo) / subdiv;
        for (int p = 0; p < subdiv; ++p) {
            const double p_lo = lo + p * step;
            for (int q = 0; q < panel_rule.n; ++q) {
                const double tau = p_lo + step * panel_rule.nodes[q];
                const std::complex<double> osc =
                    std::exp(std::complex<double>(0.0, -2.0 * gamma * std::log(tau)));
                total += step * panel_rule.weights[q] * 2.0 * osc * phi_eval(sol, tau * tau);
            }
        }
        hi = lo;
    }
    const std::complex<double> one_minus_s(0.5, -gamma);
    return std::exp(one_minus_s * std::log(sol.a)) * total;
}

std::complex<double> jost_integral(double a, double gamma, const QuadratureGrid& grid) {
    return jost_integral(solve_phi(a, KernelKind::cosine, OperatorSign::plus, grid), gamma);
}

}  // namespace fdirac
