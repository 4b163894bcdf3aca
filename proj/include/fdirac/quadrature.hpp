#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fdirac {

/// Gauss-Legendre rule on [0,1]: strictly increasing nodes in (0,1),
/// positive weights summing to 1, exact for polynomials of degree <= 2n-1.
struct QuadratureGrid {
    int n = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [0,1]. Throws std::invalid_argument for n < 2.
QuadratureGrid gauss_legendre(int n);

namespace detail {

template <class S>
struct BasicGrid {
    std::vector<S> nodes;
    std::vector<S> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

// Newton iteration on the Legendre recurrence, affine-mapped from [-1,1] to
// [0,1]. Templated so the rule can be rebuilt at extended precision: feeding
// double-precision nodes into a higher-precision pipeline re-introduces
// O(eps_double) eigenvalue noise, which matters once determinant gaps shrink
// below it.
template <class S>
BasicGrid<S> gauss_legendre_basic(int n) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
    using std::abs;
    using std::acos;
    using std::cos;
    BasicGrid<S> g;
    g.nodes.assign(n, S(0));
    g.weights.assign(n, S(0));
    const S one(1), two(2), half = S(1) / 2;
    const S pi = acos(S(-1));
    const S tol = std::numeric_limits<S>::epsilon() * 16;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        S z = cos(pi * (S(i) + S(3) / 4) / (S(n) + half));
        S pp(0);
        for (int it = 0; it < 200; ++it) {
            S p1 = one, p2(0);
            for (int j = 1; j <= n; ++j) {
                const S p3 = p2;
                p2 = p1;
                p1 = ((two * j - one) * z * p2 - (S(j) - one) * p3) / S(j);
            }
            pp = S(n) * (z * p1 - p2) / (z * z - one);
            const S dz = p1 / pp;
            z -= dz;
            if (abs(dz) <= tol) break;
        }
        g.nodes[i] = (one - z) / two;
        g.nodes[n - 1 - i] = (one + z) / two;
        const S w = one / ((one - z * z) * pp * pp);  // includes the 1/2 interval scale
        g.weights[i] = w;
        g.weights[n - 1 - i] = w;
    }
    return g;
}

}  // namespace detail
}  // namespace fdirac
