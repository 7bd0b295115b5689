#include "discordpot/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discordpot::optimize {

namespace {

struct Vertex {
    std::array<double, 2> x;
    double value;
};

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

Result2d nelder_mead_2d(const std::function<double(double, double)>& f,
                        std::array<double, 2> start,
                        double scale,
                        double diameter_tol,
                        int max_iter) {
    if (!(scale > 0.0) || !(diameter_tol > 0.0) || max_iter < 1) {
        throw std::invalid_argument("nelder_mead_2d: invalid tuning parameters");
    }
    int evals = 0;
    auto eval = [&](std::array<double, 2> x) {
        ++evals;
        return f(x[0], x[1]);
    };

    std::array<Vertex, 3> simplex{
        Vertex{start, eval(start)},
        Vertex{{start[0] + scale, start[1]}, 0.0},
        Vertex{{start[0], start[1] + scale}, 0.0}};
    simplex[1].value = eval(simplex[1].x);
    simplex[2].value = eval(simplex[2].x);

    for (int iter = 0; iter < max_iter; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
        const double diameter = std::max({dist(simplex[0].x, simplex[1].x),
                                          dist(simplex[0].x, simplex[2].x),
                                          dist(simplex[1].x, simplex[2].x)});
        if (diameter < diameter_tol) {
            break;
        }

        const std::array<double, 2> centroid{
            0.5 * (simplex[0].x[0] + simplex[1].x[0]),
            0.5 * (simplex[0].x[1] + simplex[1].x[1])};
        auto along = [&](double t) {
            return std::array<double, 2>{
                centroid[0] + t * (simplex[2].x[0] - centroid[0]),
                centroid[1] + t * (simplex[2].x[1] - centroid[1])};
        };

        const std::array<double, 2> xr = along(-1.0);
        const double fr = eval(xr);
        if (fr < simplex[0].value) {
            const std::array<double, 2> xe = along(-2.0);
            const double fe = eval(xe);
            simplex[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
            continue;
        }
        if (fr < simplex[1].value) {
            simplex[2] = Vertex{xr, fr};
            continue;
        }
        if (fr < simplex[2].value) {
            const std::array<double, 2> xc = along(-0.5);  // outside contraction
            const double fc = eval(xc);
            if (fc <= fr) {
                simplex[2] = Vertex{xc, fc};
                continue;
            }
        } else {
            const std::array<double, 2> xc = along(0.5);  // inside contraction
            const double fc = eval(xc);
            if (fc < simplex[2].value) {
                simplex[2] = Vertex{xc, fc};
                continue;
            }
        }
        for (int i = 1; i < 3; ++i) {  // shrink toward the best vertex
            simplex[i].x[0] = 0.5 * (simplex[i].x[0] + simplex[0].x[0]);
            simplex[i].x[1] = 0.5 * (simplex[i].x[1] + simplex[0].x[1]);
            simplex[i].value = eval(simplex[i].x);
        }
    }

    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    return Result2d{simplex[0].x, simplex[0].value, evals};
}

Result1d golden_section(const std::function<double(double)>& f,
                        double lo, double hi, double x_tol) {
    if (!(lo < hi) || !(x_tol > 0.0)) {
        throw std::invalid_argument("golden_section: invalid interval");
    }
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > x_tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (lo + hi);
    return Result1d{xm, f(xm)};
}

}  // namespace discordpot::optimize
