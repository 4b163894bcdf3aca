#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace fdirac {

/// Adaptive Dormand-Prince 5(4) one-step integrator. Steps may be negative
/// (backward integration). `f(u, y, dy)` fills the derivative.
///
/// integrate_to() advances the state exactly to u_target (the last step is
/// clipped); sampling callers chain calls over their output grid.
template <int N>
class Dopri5 {
  public:
    using State = std::array<double, N>;

    struct Options {
        double rtol = 1e-11;
        double atol = 1e-13;
        double max_step = 0.05;
        int max_steps = 2000000;
    };

    template <class F>
    static void integrate_to(F&& f, double& u, State& y, double u_target, const Options& opt) {
        const double dir = u_target >= u ? 1.0 : -1.0;
        if (u == u_target) return;
        double h = dir * std::min(opt.max_step, std::abs(u_target - u));
        State k1;
        f(u, y, k1);
        int steps = 0;
        while (dir * (u_target - u) > 0) {
            if (++steps > opt.max_steps) throw std::runtime_error("ode: step limit exceeded");
            if (dir * (u + h - u_target) > 0) h = u_target - u;
            State k2, k3, k4, k5, k6, k7, yt, y5;
            stage(f, u, y, k1, h, k2, k3, k4, k5, k6, k7, y5);
            // embedded 4th-order error estimate
            double err = 0;
            for (int i = 0; i < N; ++i) {
                const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                      e6 * k6[i] + e7 * k7[i]);
                const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                err = std::max(err, std::abs(e) / sc);
            }
            if (err <= 1.0) {
                u += h;
                y = y5;
                k1 = k7;  // FSAL
            } else {
                f(u, y, k1);
            }
            const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::min(5.0, std::max(0.2, fac));
            if (std::abs(h) > opt.max_step) h = dir * opt.max_step;
            if (std::abs(h) < 1e-14) throw std::runtime_error("ode: step underflow");
        }
    }

  private:
    // Dormand-Prince RK5(4)7M coefficients
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    template <class F>
    static void stage(F&& f, double u, const State& y, const State& k1, double h, State& k2,
                      State& k3, State& k4, State& k5, State& k6, State& k7, State& y5) {
        State yt;
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(u + h / 5, yt, k2);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(u + 3 * h / 10, yt, k3);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(u + 4 * h / 5, yt, k4);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(u + 8 * h / 9, yt, k5);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(u + h, yt, k6);
        for (int i = 0; i < N; ++i)
            y5[i] = y[i] +
                    h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(u + h, y5, k7);
    }
};

}  // namespace fdirac
