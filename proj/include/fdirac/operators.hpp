#pragma once

#include <string>
#include <vector>

#include "fdirac/quadrature.hpp"

namespace fdirac {

/// Which truncated Fourier transform the operator discretizes.
enum class KernelKind { cosine, sine };

const char* to_string(KernelKind kind);

/// Symmetrized Nystrom discretization of F_a on L^2(0,1):
/// M_ij = sqrt(w_i) K_a(x_i,x_j) sqrt(w_j) with
/// K_a(x,y) = 2a cos(2 pi a^2 x y) (cosine) or 2a sin(2 pi a^2 x y) (sine).
struct DiscretizedOperator {
    double a = 0;
    KernelKind kind = KernelKind::cosine;
    QuadratureGrid grid;
    std::vector<double> matrix;  // row-major n x n, symmetric by construction

    double entry(int i, int j) const { return matrix[static_cast<size_t>(i) * grid.n + j]; }
};

/// Fredholm determinants of the truncated operator at one parameter value.
struct DeterminantRecord {
    double a = 0;
    double u = 0;  // log a
    double det_plus = 1;   // det(1+F)
    double det_minus = 1;  // det(1-F)
    double det_d = 1;      // det(1-D), D = F^2
    double log_det_plus = 0;
    double log_det_minus = 0;
    double log_det_d = 0;
};

/// Build the symmetrized kernel matrix. Throws std::invalid_argument for a <= 0.
DiscretizedOperator kernel_matrix(double a, KernelKind kind, const QuadratureGrid& grid);

/// Determinants det(1+F), det(1-F), det(1-D) at parameter a on the given
/// discretization order. Below s = 2 pi a^2 ~ 7 this uses a symmetric
/// eigendecomposition in double; above, the rule and kernel are rebuilt at
/// 50-digit precision and the three determinants come from independent LU
/// factorizations (the double route cannot resolve the near-unit eigenvalue
/// gaps there).
DeterminantRecord fredholm_dets(double a, KernelKind kind, const QuadratureGrid& grid);

/// One record per a. aList must be non-empty and strictly increasing; the
/// gap-probability monotonicity of det(1-D) is checked across the sweep.
std::vector<DeterminantRecord> det_sweep(const std::vector<double>& a_list, KernelKind kind,
                                         int n);

/// Dyson potential W(s) = -2 d^2/ds^2 log det(1-D) - 1 on a uniform s-grid
/// (s = 2 pi a^2). The even kernel (cosine) gives the plus potential, the odd
/// kernel (sine) the minus one. Returns interior points only (the centered
/// 4th-order stencil needs two neighbors on each side); requires >= 5 points.
std::vector<std::pair<double, double>> dyson_potential(const std::vector<double>& s_grid,
                                                       KernelKind kind);

/// Quadrature order used throughout for a given parameter: 64 up to a = 1.5,
/// 128 up to a = 2.1, 160 beyond.
int default_nodes(double a);

}  // namespace fdirac
