#include "discordpot/fock.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "discordpot/errors.hpp"
#include "discordpot/subspace.hpp"

namespace discordpot::fock {

namespace {

constexpr int kMinTruncation = 16;
constexpr int kMaxTruncation = 200000;  // tail-scan guard for absurd |alpha|
constexpr int kMaxSingleModeDim = 2049;
constexpr int kMaxTwoModeDim = 1024;

double log_pmf(double lam, int k) {
    return -lam + k * std::log(lam) - std::lgamma(static_cast<double>(k) + 1.0);
}

double log_add_exp(double a, double b) {
    if (std::isinf(a) && a < 0.0) {
        return b;
    }
    if (std::isinf(b) && b < 0.0) {
        return a;
    }
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// ln P(K > n) for K ~ Poisson(lam).  Everything stays in log space — both
// the anchor p_{n+1} and the running sum can be far outside double range
// (the cumulative-sum route stalls at 1 ulp and cannot resolve such tails).
double log_tail_above(double lam, int n) {
    if (lam <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    const double log_lam = std::log(lam);
    double log_term = 0.0;  // relative to p_{n+1}
    double log_tot = -std::numeric_limits<double>::infinity();
    long k = n + 1;
    while (true) {
        log_tot = log_add_exp(log_tot, log_term);
        ++k;
        log_term += log_lam - std::log(static_cast<double>(k));
        if (k > n + 2 && log_term < log_tot + std::log(1e-20)) {
            return log_pmf(lam, n + 1) + log_tot;
        }
    }
}

void check_tail_bound(double tail_bound) {
    if (!std::isfinite(tail_bound) || tail_bound <= 0.0 || tail_bound >= 1.0) {
        throw std::invalid_argument("tail_bound must lie in (0, 1)");
    }
}

// Coherent-state Fock coefficients e^{-|alpha|^2/2} alpha^k / sqrt(k!),
// magnitudes assembled in log space.
Eigen::VectorXcd coherent_vector(states::ComplexAmplitude alpha, int n_max) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_max + 1);
    const double mag = std::abs(alpha);
    if (mag == 0.0) {
        v(0) = 1.0;
        return v;
    }
    const double phase = std::arg(alpha);
    const double log_mag = std::log(mag);
    for (int k = 0; k <= n_max; ++k) {
        const double lm = -0.5 * mag * mag + k * log_mag
                          - 0.5 * std::lgamma(static_cast<double>(k) + 1.0);
        v(k) = std::exp(lm) * std::polar(1.0, phase * k);
    }
    return v;
}

double entropy_of(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigenvalue decomposition failed");
    }
    double s = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()(i);
        if (lam < -1e-10) {
            throw numerical_error("truncated matrix is not positive semidefinite");
        }
        if (lam > 0.0) {
            s -= lam * std::log(lam);
        }
    }
    return s;
}

// Shared series core for h0/h1: e^{-A^2} sum_k (A^{2k}/k!) ln(k + offset),
// k starting at first_k.  n_max is a floor; the series continues until the
// remaining tail is provably below 1e-12 (once k >= 2*lam the term ratio is
// at most 1/2, so the remainder is bounded by term_k * (ln(k+2) + 2)).
double log_series(double A, int n_max, int first_k, int offset) {
    if (!std::isfinite(A) || A <= 0.0) {
        throw std::invalid_argument("amplitude must be positive");
    }
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const double lam = A * A;
    double sum = 0.0;
    for (int k = first_k; k <= kMaxTruncation; ++k) {
        const double p = std::exp(log_pmf(lam, k));
        sum += p * std::log(static_cast<double>(k + offset));
        if (k >= n_max && k >= 2.0 * lam &&
            p * (std::log(static_cast<double>(k) + 2.0) + 2.0) < 1e-13) {
            return sum;
        }
    }
    throw numerical_error("series truncation did not converge");
}

double c_l1_pure(double mag, int n_max) {
    // Rearrangement of the pure-state double sum: (sum_k f_k)^2 - sum_k f_k^2
    // with f_k = e^{-A^2/2} A^k / sqrt(k!); avoids the n_max^2 loop and the
    // cancellation of tiny off-diagonal magnitudes at large A.
    if (mag == 0.0) {
        return 0.0;
    }
    const double log_mag = std::log(mag);
    double total = 0.0;
    double square = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        const double f = std::exp(-0.5 * mag * mag + k * log_mag
                                  - 0.5 * std::lgamma(static_cast<double>(k) + 1.0));
        total += f;
        square += f * f;
    }
    return total * total - square;
}

}  // namespace

int auto_truncation(const states::CoherentMixture& mixture, double tail_bound) {
    check_tail_bound(tail_bound);
    const double log_bound = std::log(tail_bound);
    int n = kMinTruncation;
    for (const auto& e : mixture.elements()) {
        const double lam = std::norm(e.amplitude);
        while (log_tail_above(lam, n) >= log_bound) {
            if (++n > kMaxTruncation) {
                throw numerical_error("truncation search did not converge");
            }
        }
    }
    return n;
}

int monotone_truncation(const states::CoherentMixture& mixture, double tail_bound) {
    check_tail_bound(tail_bound);
    const double bound = std::max(tail_bound * tail_bound * 1e-4, 1e-30);
    return static_cast<int>(std::ceil(1.25 * auto_truncation(mixture, bound)));
}

FockMatrix to_fock(const states::CoherentMixture& mixture, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    if (n_max + 1 > kMaxSingleModeDim) {
        throw numerical_error("dimension overflow: single-mode truncation too large");
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (const auto& e : mixture.elements()) {
        const Eigen::VectorXcd v = coherent_vector(e.amplitude, n_max);
        rho += e.weight * (v * v.adjoint());
    }
    const double missing = 1.0 - rho.trace().real();
    return FockMatrix{n_max, std::move(rho), missing};
}

TwoModeFockMatrix to_fock_two_mode(const splitter::TwoModeMixture& state,
                                   int n_max_a, int n_max_b) {
    if (n_max_a < 1 || n_max_b < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const long dim = static_cast<long>(n_max_a + 1) * (n_max_b + 1);
    if (dim > kMaxTwoModeDim) {
        throw numerical_error("dimension overflow: two-mode truncation too large");
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd joint(dim);
    for (const auto& e : state.elements()) {
        const Eigen::VectorXcd va = coherent_vector(e.amplitude_a, n_max_a);
        const Eigen::VectorXcd vb = coherent_vector(e.amplitude_b, n_max_b);
        for (int i = 0; i <= n_max_a; ++i) {
            joint.segment(static_cast<long>(i) * (n_max_b + 1), n_max_b + 1) =
                va(i) * vb;
        }
        rho += e.weight * (joint * joint.adjoint());
    }
    const double missing = 1.0 - rho.trace().real();
    return TwoModeFockMatrix{n_max_a, n_max_b, std::move(rho), missing};
}

FockMatrix partial_trace(const TwoModeFockMatrix& state, splitter::Mode keep) {
    const int da = state.n_max_a + 1;
    const int db = state.n_max_b + 1;
    const bool keep_a = keep == splitter::Mode::A;
    const int dk = keep_a ? da : db;
    const int dt = keep_a ? db : da;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
    for (int i = 0; i < dk; ++i) {
        for (int j = 0; j < dk; ++j) {
            std::complex<double> sum = 0.0;
            for (int t = 0; t < dt; ++t) {
                const long row = keep_a ? static_cast<long>(i) * db + t
                                        : static_cast<long>(t) * db + i;
                const long col = keep_a ? static_cast<long>(j) * db + t
                                        : static_cast<long>(t) * db + j;
                sum += state.entries(row, col);
            }
            rho(i, j) = sum;
        }
    }
    const double missing = 1.0 - rho.trace().real();
    return FockMatrix{dk - 1, std::move(rho), missing};
}

double entropy(const FockMatrix& m) {
    return entropy_of(m.entries);
}

double entropy_oracle(const states::CoherentMixture& mixture, double tail_bound) {
    check_tail_bound(tail_bound);
    // Truncate well past the requested bound so a Fannes-type entropy error
    // from the discarded tail cannot eat the agreement budget.
    const int n = auto_truncation(mixture, tail_bound * 1e-2);
    return entropy(to_fock(mixture, n));
}

double entropy_oracle_two_mode(const splitter::TwoModeMixture& state,
                               double tail_bound) {
    check_tail_bound(tail_bound);
    const int na = auto_truncation(reduce(state, splitter::Mode::A), tail_bound * 1e-2);
    const int nb = auto_truncation(reduce(state, splitter::Mode::B), tail_bound * 1e-2);
    return entropy_of(to_fock_two_mode(state, na, nb).entries);
}

double c_l1(const FockMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.entries.rows(); ++i) {
        for (int j = 0; j < m.entries.cols(); ++j) {
            if (i != j) {
                sum += std::abs(m.entries(i, j));
            }
        }
    }
    return sum;
}

double c_l1(const states::CoherentMixture& mixture, int n_max) {
    if (mixture.size() == 1) {
        if (n_max < 1) {
            throw std::invalid_argument("n_max must be at least 1");
        }
        return c_l1_pure(std::abs(mixture.elements()[0].amplitude), n_max);
    }
    return c_l1(to_fock(mixture, n_max));
}

double c_re(const states::CoherentMixture& mixture, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    double diag_entropy = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        double q = 0.0;
        for (const auto& e : mixture.elements()) {
            const double lam = std::norm(e.amplitude);
            q += e.weight * (lam > 0.0 ? std::exp(log_pmf(lam, k))
                                       : (k == 0 ? 1.0 : 0.0));
        }
        if (q > 0.0) {
            diag_entropy -= q * std::log(q);
        }
    }
    // S(rho) is exact in the span basis, so truncation only touches the
    // diagonal term.
    const auto basis = subspace::gram_schmidt(mixture.amplitudes());
    const double state_entropy =
        subspace::entropy(subspace::project_mixture(mixture, basis));
    return std::max(0.0, diag_entropy - state_entropy);
}

double h0(double A, int n_max) {
    return log_series(A, n_max, 1, 0);
}

double h1(double A, int n_max) {
    return log_series(A, n_max, 0, 1);
}

SlopeFit c_l1_slope_fit(bool balanced_mixture) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = 0; i <= 12; ++i) {
        const double A = 6.0 + 0.5 * i;
        const states::CoherentMixture mixture =
            balanced_mixture
                ? states::make_binary_mixture(0.5, A, -A)
                : states::CoherentMixture({{1.0, A}});
        const int n = monotone_truncation(mixture, 1e-12);
        xs.push_back(A);
        ys.push_back(c_l1(mixture, n));
    }
    const int n = static_cast<int>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_x += xs[i] / n;
        mean_y += ys[i] / n;
    }
    double sxx = 0.0;
    double sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double res2 = 0.0;
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ys[i] - (slope * xs[i] + intercept);
        res2 += r * r;
        norm2 += ys[i] * ys[i];
    }
    return SlopeFit{slope, std::sqrt(res2 / norm2)};
}

double estimate_c() {
    static const double c = c_l1_slope_fit(false).slope;
    return c;
}

double c_l1_asymptote(double d0) {
    if (!std::isfinite(d0) || d0 < 0.0) {
        throw std::invalid_argument("separation d0 must be finite and non-negative");
    }
    return 0.5 * estimate_c() * (0.5 * d0);
}

double c_re_asymptote(double d0) {
    if (!std::isfinite(d0) || d0 <= 0.0) {
        throw std::invalid_argument("separation d0 must be positive");
    }
    return std::log(0.5 * d0) + 0.5 + 0.5 * std::log(2.0 * std::numbers::pi)
           - std::numbers::ln2;
}

}  // namespace discordpot::fock
