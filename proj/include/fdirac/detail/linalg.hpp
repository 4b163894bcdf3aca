#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fdirac::detail {

// Minimal dense kernel set shared by the double and extended-precision paths.
// Row-major storage; partial-pivot LU. n stays small (<= 256), so nothing
// fancier is warranted.

template <class S>
struct SquareMatrix {
    int n = 0;
    std::vector<S> a;

    SquareMatrix() = default;
    explicit SquareMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, S(0)) {}

    S& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

template <class S>
struct LuFactors {
    SquareMatrix<S> lu;
    std::vector<int> piv;
    int sign = 1;
};

template <class S>
LuFactors<S> lu_factor(SquareMatrix<S> A) {
    using std::abs;
    const int n = A.n;
    LuFactors<S> f{std::move(A), std::vector<int>(n), 1};
    auto& M = f.lu;
    for (int k = 0; k < n; ++k) {
        int p = k;
        S best = abs(M(k, k));
        for (int r = k + 1; r < n; ++r) {
            const S v = abs(M(r, k));
            if (v > best) { best = v; p = r; }
        }
        f.piv[k] = p;
        if (p != k) {
            for (int c = 0; c < n; ++c) std::swap(M(k, c), M(p, c));
            f.sign = -f.sign;
        }
        if (M(k, k) == S(0)) throw std::runtime_error("lu_factor: singular matrix");
        const S inv_piv = S(1) / M(k, k);
        for (int r = k + 1; r < n; ++r) {
            const S m = M(r, k) * inv_piv;
            M(r, k) = m;
            if (m != S(0)) {
                for (int c = k + 1; c < n; ++c) M(r, c) -= m * M(k, c);
            }
        }
    }
    return f;
}

// log|det| and sign from the factorization.
template <class S>
std::pair<S, int> lu_log_det(const LuFactors<S>& f) {
    using std::abs;
    using std::log;
    S ld(0);
    int sign = f.sign;
    for (int k = 0; k < f.lu.n; ++k) {
        const S d = f.lu(k, k);
        ld += log(abs(d));
        if (d < S(0)) sign = -sign;
    }
    return {ld, sign};
}

template <class S>
std::vector<S> lu_solve(const LuFactors<S>& f, std::vector<S> b) {
    const int n = f.lu.n;
    for (int k = 0; k < n; ++k) {
        std::swap(b[k], b[f.piv[k]]);
        for (int r = k + 1; r < n; ++r) b[r] -= f.lu(r, k) * b[k];
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int c = k + 1; c < n; ++c) b[k] -= f.lu(k, c) * b[c];
        b[k] /= f.lu(k, k);
    }
    return b;
}

// Cholesky success <=> symmetric A is positive definite.
template <class S>
bool cholesky_positive(SquareMatrix<S> A) {
    using std::sqrt;
    const int n = A.n;
    for (int k = 0; k < n; ++k) {
        S d = A(k, k);
        for (int j = 0; j < k; ++j) d -= A(k, j) * A(k, j);
        if (d <= S(0)) return false;
        const S r = sqrt(d);
        A(k, k) = r;
        for (int i = k + 1; i < n; ++i) {
            S v = A(i, k);
            for (int j = 0; j < k; ++j) v -= A(i, j) * A(k, j);
            A(i, k) = v / r;
        }
    }
    return true;
}

}  // namespace fdirac::detail
