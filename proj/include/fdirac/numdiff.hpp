#pragma once

#include <cmath>

namespace fdirac {

struct FdResult {
    double value = 0;
    double error_estimate = 0;
};

/// Centered 4th-order first derivative with one Richardson level (effective
/// order 6). The error estimate is the difference between the Richardson
/// value and the finer plain stencil.
template <class F>
FdResult fd_derivative(F&& f, double x, double h) {
    auto stencil = [&](double hh) {
        return (-f(x + 2 * hh) + 8 * f(x + hh) - 8 * f(x - hh) + f(x - 2 * hh)) / (12 * hh);
    };
    const double d1 = stencil(h);
    const double d2 = stencil(h / 2);
    const double r = (16 * d2 - d1) / 15;
    return {r, std::abs(r - d2)};
}

/// Centered 4th-order second derivative with one Richardson level.
template <class F>
FdResult fd_second_derivative(F&& f, double x, double h) {
    const double f0 = f(x);
    auto stencil = [&](double hh) {
        return (-f(x + 2 * hh) + 16 * f(x + hh) - 30 * f0 + 16 * f(x - hh) - f(x - 2 * hh)) /
               (12 * hh * hh);
    };
    const double d1 = stencil(h);
    const double d2 = stencil(h / 2);
    const double r = (16 * d2 - d1) / 15;
    return {r, std::abs(r - d2)};
}

}  // namespace fdirac
