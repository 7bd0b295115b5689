#pragma once

namespace discordpot::discrimination {

// Minimum-error (Helstrom) probability for distinguishing |alpha0> vs
// |beta0> with priors (a, 1-a), separation d0 = |alpha0 - beta0|:
//   P = (1 - sqrt(1 - 4 a (1-a) exp(-d0^2))) / 2.
// The equal-prior case a = 1/2 is the primary contract; other priors are
// supported as a flagged extension of the same closed form.
double helstrom_error(double prior_a, double d0);

// Error probability of the optimal homodyne (quadrature threshold)
// strategy at equal priors: P = erfc(d0 / sqrt(2)) / 2.  Priors other
// than 1/2 are rejected (std::invalid_argument): the threshold optimum
// has no closed form there and is out of scope.
double homodyne_error(double prior_a, double d0);

// advantage(d0) = homodyne_error(1/2, d0) - helstrom_error(1/2, d0) >= 0.
double advantage(double d0);

}  // namespace discordpot::discrimination
