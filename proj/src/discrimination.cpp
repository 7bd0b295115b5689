#include "discordpot/discrimination.hpp"

#include <cmath>
#include <stdexcept>

namespace discordpot::discrimination {

namespace {

void check_d0(double d0) {
    if (!std::isfinite(d0) || d0 < 0.0) {
        throw std::invalid_argument("separation d0 must be finite and non-negative");
    }
}

}  // namespace

double helstrom_error(double prior_a, double d0) {
    if (!std::isfinite(prior_a) || prior_a <= 0.0 || prior_a >= 1.0) {
        throw std::invalid_argument("prior must lie in (0, 1)");
    }
    check_d0(d0);
    const double discriminant =
        std::max(0.0, 1.0 - 4.0 * prior_a * (1.0 - prior_a) * std::exp(-d0 * d0));
    return 0.5 * (1.0 - std::sqrt(discriminant));
}

double homodyne_error(double prior_a, double d0) {
    if (prior_a != 0.5) {
        throw std::invalid_argument(
            "homodyne threshold bound is only available at equal priors");
    }
    check_d0(d0);
    // (1 - erf(d0/sqrt(2)))/2, written with erfc to avoid cancellation at
    // large separation.
    return 0.5 * std::erfc(d0 / std::sqrt(2.0));
}

double advantage(double d0) {
    return homodyne_error(0.5, d0) - helstrom_error(0.5, d0);
}

}  // namespace discordpot::discrimination
