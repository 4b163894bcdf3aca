#pragma once

#include <cmath>
#include <vector>

#include "fdirac/detail/linalg.hpp"
#include "fdirac/detail/precision.hpp"
#include "fdirac/operators.hpp"
#include "fdirac/quadrature.hpp"

namespace fdirac::detail {

template <class S>
S kernel_value(const S& a, KernelKind kind, const S& x, const S& y) {
    using std::cos;
    using std::sin;
    const S arg = 2 * acos(S(-1)) * a * a * x * y;
    return kind == KernelKind::cosine ? 2 * a * cos(arg) : 2 * a * sin(arg);
}

// sqrt(w) K sqrt(w); symmetric by construction (upper triangle mirrored).
template <class S>
SquareMatrix<S> kernel_sym(const S& a, KernelKind kind, const BasicGrid<S>& g) {
    using std::sqrt;
    const int n = g.size();
    std::vector<S> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = sqrt(g.weights[i]);
    SquareMatrix<S> M(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const S v = sw[i] * kernel_value(a, kind, g.nodes[i], g.nodes[j]) * sw[j];
            M(i, j) = v;
            M(j, i) = v;
        }
    return M;
}

// I + sign * K(x_i, x_j) w_j  (the plain Nystrom action, not symmetrized).
template <class S>
SquareMatrix<S> nystrom_system(const S& a, KernelKind kind, const BasicGrid<S>& g, int sign) {
    const int n = g.size();
    SquareMatrix<S> A(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            A(i, j) = S(sign) * kernel_value(a, kind, g.nodes[i], g.nodes[j]) * g.weights[j];
        A(i, i) += S(1);
    }
    return A;
}

template <class S>
std::vector<S> rhs_vector(const S& a, KernelKind kind, const BasicGrid<S>& g) {
    using std::cos;
    using std::sin;
    const S s = 2 * acos(S(-1)) * a * a;
    const int n = g.size();
    std::vector<S> r(n);
    for (int i = 0; i < n; ++i)
        r[i] = kind == KernelKind::cosine ? 2 * cos(s * g.nodes[i]) : 2 * sin(s * g.nodes[i]);
    return r;
}

template <class S>
struct DetLogs {
    S log_plus, log_minus, log_d;
};

// Three independent LU factorizations: I+M, I-M, and I-M*M. Meaningful only
// when the arithmetic resolves the top eigenvalue gap, i.e. on the
// extended-precision path.
template <class S>
DetLogs<S> dets_by_lu(const S& a, KernelKind kind, const BasicGrid<S>& g) {
    const int n = g.size();
    const SquareMatrix<S> M = kernel_sym(a, kind, g);
    SquareMatrix<S> P(n), Q(n), R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S mm(0);
            for (int k = 0; k < n; ++k) mm += M(i, k) * M(k, j);
            const S id = (i == j) ? S(1) : S(0);
            P(i, j) = id + M(i, j);
            Q(i, j) = id - M(i, j);
            R(i, j) = id - mm;
        }
    DetLogs<S> d;
    d.log_plus = lu_log_det(lu_factor(std::move(P))).first;
    d.log_minus = lu_log_det(lu_factor(std::move(Q))).first;
    d.log_d = lu_log_det(lu_factor(std::move(R))).first;
    return d;
}

template <class S>
struct PhiVectors {
    std::vector<S> values;  // g at the nodes (solution of (I +- F)g = rhs)
    S endpoint;             // Nystrom interpolation at t = 1
};

// Solve g(t) + sign * int_0^1 K_a(t,s) g(s) ds = rhs(t) by collocation at the
// quadrature nodes; the endpoint comes from the interpolation formula, which
// is exact for the solution class (rhs and kernel entire).
template <class S>
PhiVectors<S> solve_phi_basic(const S& a, KernelKind kind, int sign, const BasicGrid<S>& g) {
    auto f = lu_factor(nystrom_system(a, kind, g, sign));
    PhiVectors<S> out{lu_solve(f, rhs_vector(a, kind, g)), S(0)};
    const int n = g.size();
    S acc(0);
    for (int j = 0; j < n; ++j)
        acc += g.weights[j] * kernel_value(a, kind, S(1), g.nodes[j]) * out.values[j];
    using std::cos;
    using std::sin;
    const S s = 2 * acos(S(-1)) * a * a;
    const S rhs1 = kind == KernelKind::cosine ? S(2) * cos(s) : S(2) * sin(s);
    out.endpoint = rhs1 - S(sign) * acc;
    return out;
}

template <class S>
S mu_basic(const S& a, KernelKind kind, const BasicGrid<S>& g) {
    const S ep = solve_phi_basic(a, kind, +1, g).endpoint;
    const S em = solve_phi_basic(a, kind, -1, g).endpoint;
    return a * (ep + em);
}

}  // namespace fdirac::detail
