#include "discordpot/discord.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "discordpot/errors.hpp"
#include "discordpot/optimize.hpp"

namespace discordpot::discord {

namespace {

constexpr double kOutcomeFloor = 1e-14;
constexpr double kDiscordClamp = 1e-10;
constexpr int kMaxElements = 30;
constexpr int kMaxJointDim = 1024;
constexpr int kGridSize = 64;

using subspace::OrthoBasis;

std::vector<ComplexAmplitude> mode_amplitudes(const splitter::TwoModeMixture& state,
                                              splitter::Mode mode) {
    std::vector<ComplexAmplitude> out;
    out.reserve(state.size());
    for (const auto& e : state.elements()) {
        out.push_back(mode == splitter::Mode::A ? e.amplitude_a : e.amplitude_b);
    }
    return out;
}

double mode_entropy(const splitter::TwoModeMixture& state, splitter::Mode mode) {
    const states::CoherentMixture reduced = splitter::reduce(state, mode);
    const OrthoBasis basis = subspace::gram_schmidt(reduced.amplitudes());
    return subspace::entropy(subspace::project_mixture(reduced, basis));
}

double general_conditional_term(const Eigen::MatrixXcd& wb,
                                const Eigen::VectorXd& q, double pj) {
    const Eigen::MatrixXcd sigma =
        wb * (q / pj).asDiagonal() * wb.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sigma,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigenvalue decomposition failed");
    }
    double s = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()(i);
        if (lam > 0.0) {
            s -= lam * std::log(lam);
        }
    }
    return s;
}

}  // namespace

MeasurementAngles normalize_angles(MeasurementAngles angles) {
    if (!std::isfinite(angles.theta) || !std::isfinite(angles.phi)) {
        throw std::invalid_argument("measurement angles must be finite");
    }
    const double pi = std::numbers::pi;
    double theta = std::fmod(angles.theta, pi);
    double phi = angles.phi;
    if (theta < 0.0) {
        theta += pi;  // w(theta + pi) = -w(theta): same projector
    }
    if (theta > 0.5 * pi) {
        // w(pi - theta, phi) is w(theta, phi + pi) up to a global sign.
        theta = pi - theta;
        phi += pi;
    }
    phi = std::fmod(phi, 2.0 * pi);
    if (phi < 0.0) {
        phi += 2.0 * pi;
    }
    if (phi >= 2.0 * pi) {
        phi = 0.0;  // fmod rounding at the boundary
    }
    return MeasurementAngles{theta, phi};
}

subspace::HermitianMatrix two_mode_density(const splitter::TwoModeMixture& state) {
    const int n = static_cast<int>(state.size());
    if (n > kMaxElements) {
        throw std::invalid_argument("two_mode_density supports at most 30 elements");
    }
    auto basis_a = std::make_shared<const OrthoBasis>(
        subspace::gram_schmidt(mode_amplitudes(state, splitter::Mode::A)));
    auto basis_b = std::make_shared<const OrthoBasis>(
        subspace::gram_schmidt(mode_amplitudes(state, splitter::Mode::B)));
    const Eigen::MatrixXcd& wa = basis_a->span_overlaps();
    const Eigen::MatrixXcd& wb = basis_b->span_overlaps();
    const int da = basis_a->effective_dim();
    const int db = basis_b->effective_dim();
    if (static_cast<long>(da) * db > kMaxJointDim) {
        throw numerical_error("dimension overflow: joint span too large");
    }

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da * db, da * db);
    Eigen::VectorXcd joint(da * db);
    for (int t = 0; t < n; ++t) {
        for (int i = 0; i < da; ++i) {
            joint.segment(static_cast<long>(i) * db, db) = wa(i, t) * wb.col(t);
        }
        rho += state.elements()[t].weight * (joint * joint.adjoint());
    }
    return subspace::HermitianMatrix(std::move(rho), std::move(basis_a),
                                     std::move(basis_b));
}

ConditionalEntropyEvaluator::ConditionalEntropyEvaluator(
    const splitter::TwoModeMixture& state) {
    const int n = static_cast<int>(state.size());
    const OrthoBasis basis_a =
        subspace::gram_schmidt(mode_amplitudes(state, splitter::Mode::A));
    const OrthoBasis basis_b =
        subspace::gram_schmidt(mode_amplitudes(state, splitter::Mode::B));
    dim_a_ = basis_a.effective_dim();
    dim_b_ = basis_b.effective_dim();
    if (dim_a_ > 2) {
        throw std::invalid_argument(
            "measured mode must span at most 2 dimensions (binary mixtures)");
    }
    weights_.resize(n);
    for (int t = 0; t < n; ++t) {
        weights_(t) = state.elements()[t].weight;
    }
    wa_ = basis_a.span_overlaps();
    wb_ = basis_b.span_overlaps();
    if (dim_a_ == 1) {
        entropy_b_ = mode_entropy(state, splitter::Mode::B);
    }
}

double ConditionalEntropyEvaluator::operator()(MeasurementAngles angles) const {
    if (dim_a_ == 1) {
        return entropy_b_;  // only the trivial measurement exists
    }
    const int n = static_cast<int>(weights_.size());
    const double c = std::cos(angles.theta);
    const double s = std::sin(angles.theta);
    const std::complex<double> e = std::polar(1.0, angles.phi);

    double total = 0.0;
    for (int outcome = 0; outcome < 2; ++outcome) {
        // Projection directions (cos, e^{i phi} sin) and its orthocomplement.
        const std::complex<double> w0 = outcome == 0
                                            ? std::complex<double>(c, 0.0)
                                            : -std::conj(e) * s;
        const std::complex<double> w1 = outcome == 0 ? e * s
                                                     : std::complex<double>(c, 0.0);
        Eigen::VectorXd q(n);
        double pj = 0.0;
        for (int t = 0; t < n; ++t) {
            const std::complex<double> amp =
                std::conj(w0) * wa_(0, t) + std::conj(w1) * wa_(1, t);
            q(t) = weights_(t) * std::norm(amp);
            pj += q(t);
        }
        if (pj < kOutcomeFloor) {
            continue;
        }
        if (dim_b_ == 1) {
            continue;  // conditional state is pure
        }
        if (dim_b_ == 2) {
            double d1 = 0.0;
            double d2 = 0.0;
            std::complex<double> od = 0.0;
            for (int t = 0; t < n; ++t) {
                const double w = q(t) / pj;
                d1 += w * std::norm(wb_(0, t));
                d2 += w * std::norm(wb_(1, t));
                od += w * wb_(0, t) * std::conj(wb_(1, t));
            }
            Eigen::Matrix2cd sigma;
            sigma << d1, od, std::conj(od), d2;
            total += pj * subspace::entropy_2x2(sigma);
        } else {
            total += pj * general_conditional_term(wb_, q, pj);
        }
    }
    return total;
}

double conditional_entropy(const splitter::TwoModeMixture& state,
                           MeasurementAngles angles) {
    return ConditionalEntropyEvaluator(state)(angles);
}

MinimizationResult minimize_conditional_entropy(
    const ConditionalEntropyEvaluator& eval) {
    if (eval.dim_a() == 1) {
        return MinimizationResult{MeasurementAngles{0.0, 0.0},
                                  eval(MeasurementAngles{0.0, 0.0})};
    }
    const double pi = std::numbers::pi;
    MinimizationResult best{MeasurementAngles{0.0, 0.0},
                            eval(MeasurementAngles{0.0, 0.0})};
    for (int i = 0; i < kGridSize; ++i) {
        const double theta = 0.5 * pi * i / (kGridSize - 1);
        for (int j = 0; j < kGridSize; ++j) {
            const double phi = 2.0 * pi * j / kGridSize;
            const double value = eval(MeasurementAngles{theta, phi});
            if (value < best.value) {
                best = MinimizationResult{MeasurementAngles{theta, phi}, value};
            }
        }
    }
    const auto refined = optimize::nelder_mead_2d(
        [&eval](double theta, double phi) {
            return eval(MeasurementAngles{theta, phi});
        },
        {best.angles.theta, best.angles.phi}, 0.05);
    if (refined.value < best.value) {
        best = MinimizationResult{MeasurementAngles{refined.x[0], refined.x[1]},
                                  refined.value};
    }
    best.angles = normalize_angles(best.angles);
    return best;
}

MinimizationResult minimize_conditional_entropy(const splitter::TwoModeMixture& state) {
    return minimize_conditional_entropy(ConditionalEntropyEvaluator(state));
}

DiscordReport discord(const splitter::TwoModeMixture& state) {
    const ConditionalEntropyEvaluator eval(state);

    DiscordReport report;
    report.entropy_a = mode_entropy(state, splitter::Mode::A);
    report.entropy_b = mode_entropy(state, splitter::Mode::B);
    report.total_entropy = subspace::entropy(two_mode_density(state));
    report.mutual_information =
        report.entropy_a + report.entropy_b - report.total_entropy;

    const MinimizationResult minimum = minimize_conditional_entropy(eval);
    report.min_conditional_entropy = minimum.value;
    report.optimal_angles = minimum.angles;

    report.discord =
        report.entropy_a - report.total_entropy + report.min_conditional_entropy;
    if (report.discord < 0.0) {
        if (report.discord < -kDiscordClamp) {
            throw numerical_error("discord evaluated below the clamping tolerance");
        }
        report.discord = 0.0;
        report.clamped = true;
    }
    report.classical_information = report.mutual_information - report.discord;
    return report;
}

double discord_potential(const states::CoherentMixture& input) {
    if (input.size() != 2) {
        throw std::invalid_argument("discord potential requires a binary mixture");
    }
    return discord(splitter::split(input)).discord;
}

}  // namespace discordpot::discord
