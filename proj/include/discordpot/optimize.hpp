#pragma once

#include <array>
#include <functional>

namespace discordpot::optimize {

struct Result2d {
    std::array<double, 2> x{};
    double value = 0.0;
    int evaluations = 0;
};

// Derivative-free Nelder-Mead minimization in two variables.  Terminates
// when the simplex diameter drops below diameter_tol or after max_iter
// reflections.  No restarts; callers seed from a coarse grid.
Result2d nelder_mead_2d(const std::function<double(double, double)>& f,
                        std::array<double, 2> start,
                        double scale,
                        double diameter_tol = 1e-10,
                        int max_iter = 500);

struct Result1d {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section minimization of a unimodal function on [lo, hi] to the
// requested interval width.
Result1d golden_section(const std::function<double(double)>& f,
                        double lo, double hi, double x_tol = 1e-10);

}  // namespace discordpot::optimize
