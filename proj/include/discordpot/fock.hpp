#pragma once

#include <Eigen/Dense>

#include "discordpot/splitter.hpp"
#include "discordpot/states.hpp"

namespace discordpot::fock {

// Truncated Fock-space representation on |0>..|n_max>.
// truncation_error is the discarded trace (1 - trace of entries).
struct FockMatrix {
    int n_max = 0;
    Eigen::MatrixXcd entries;
    double truncation_error = 0.0;
};

struct TwoModeFockMatrix {
    int n_max_a = 0;
    int n_max_b = 0;
    Eigen::MatrixXcd entries;  // dimension (n_max_a+1)*(n_max_b+1), mode B fastest
    double truncation_error = 0.0;
};

// Smallest n_max such that every component's Poisson(|alpha_j|^2)
// photon-number tail beyond n_max is < tail_bound; never below 16.
// Tail sums run in log space so this works out to |alpha| = 20 and
// bounds far below double-precision resolution of 1 - cumsum.
int auto_truncation(const states::CoherentMixture& mixture, double tail_bound);

// Truncation used for the coherence monotones.  Their off-diagonal sums
// converge much slower than the trace (the l1 error scales like the square
// root of the discarded trace), so the trace tail is driven to roughly
// tail_bound^2 before adding a 25% margin; this keeps the doubling
// convergence test comfortably inside 10x tail_bound.
int monotone_truncation(const states::CoherentMixture& mixture, double tail_bound);

// rho_{k,n} = sum_t p_t e^{-|alpha_t|^2} alpha_t^k conj(alpha_t)^n / sqrt(k! n!),
// assembled in log space.
FockMatrix to_fock(const states::CoherentMixture& mixture, int n_max);

TwoModeFockMatrix to_fock_two_mode(const splitter::TwoModeMixture& state,
                                   int n_max_a, int n_max_b);

FockMatrix partial_trace(const TwoModeFockMatrix& state, splitter::Mode keep);

// Von Neumann entropy of the truncated matrix (negative eigenvalues from
// truncation noise clamped at -1e-10 tolerance).
double entropy(const FockMatrix& m);

// Independent entropy oracle: picks its own truncation from tail_bound and
// diagonalizes the full truncated matrix.  No subspace machinery involved.
double entropy_oracle(const states::CoherentMixture& mixture, double tail_bound);

double entropy_oracle_two_mode(const splitter::TwoModeMixture& state, double tail_bound);

// l1 coherence monotone: sum of off-diagonal magnitudes in the Fock basis.
double c_l1(const FockMatrix& m);
double c_l1(const states::CoherentMixture& mixture, int n_max);

// Relative entropy of coherence S(rho_diag) - S(rho).  The diagonal entropy
// is a direct series over Poisson weights up to n_max; S(rho) is computed
// exactly in the span basis, so the only truncation is in the first term.
double c_re(const states::CoherentMixture& mixture, int n_max);

// Auxiliary series for the large-amplitude asymptotics of the diagonal
// entropy:
//   h0(A) = e^{-A^2} sum_{k>=1} (A^{2k}/k!) ln k,
//   h1(A) = e^{-A^2} sum_{k>=0} (A^{2k}/k!) ln(k+1).
// n_max acts as a floor; each series is extended until its remaining tail
// is provably below 1e-12.
double h0(double A, int n_max);
double h1(double A, int n_max);

struct SlopeFit {
    double slope = 0.0;
    double relative_residual = 0.0;  // ||residual|| / ||values||
};

// Least-squares slope of C_l1 vs |alpha| over |alpha| in [6, 12], either for
// the pure state |alpha> or for the balanced mixture of |alpha>, |-alpha>.
SlopeFit c_l1_slope_fit(bool balanced_mixture);

// Fitted pure-state slope c (approximately 5).
double estimate_c();

// Large-d0 asymptotes for the balanced beta = -alpha family at separation
// d0 (so |alpha| = d0/2): c_l1 ~ (c/2)(d0/2) with c from estimate_c(), and
// c_re ~ ln(d0/2) + 1/2 + ln(2 pi)/2 - ln 2.
double c_l1_asymptote(double d0);
double c_re_asymptote(double d0);

}  // namespace discordpot::fock
