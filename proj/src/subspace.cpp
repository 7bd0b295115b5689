#include "discordpot/subspace.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "discordpot/errors.hpp"

namespace discordpot::subspace {

namespace {

constexpr double kDropThreshold = 1e-10;   // Gram-Schmidt residual cutoff
constexpr double kTraceTol = 1e-10;
constexpr double kEigenvalueTol = 1e-10;
constexpr double kHermiticityTol = 1e-12;

double plogp(double p) {
    return p > 0.0 ? p * std::log(p) : 0.0;
}

}  // namespace

OrthoBasis::OrthoBasis(std::vector<ComplexAmplitude> source,
                       Eigen::MatrixXcd coeffs,
                       Eigen::MatrixXcd span_overlaps)
    : source_(std::move(source)),
      coeffs_(std::move(coeffs)),
      span_overlaps_(std::move(span_overlaps)) {}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries,
                                 std::shared_ptr<const OrthoBasis> basis_a,
                                 std::shared_ptr<const OrthoBasis> basis_b)
    : entries_(std::move(entries)),
      basis_a_(std::move(basis_a)),
      basis_b_(std::move(basis_b)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermiticityTol * scale) {
        throw numerical_error("matrix is not Hermitian within tolerance");
    }
}

OrthoBasis gram_schmidt(const std::vector<ComplexAmplitude>& amplitudes) {
    if (amplitudes.empty()) {
        throw std::invalid_argument("gram_schmidt needs at least one amplitude");
    }
    const int n = static_cast<int>(amplitudes.size());
    Eigen::MatrixXcd gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gram(i, j) = states::overlap(amplitudes[i], amplitudes[j]);
        }
    }

    std::vector<Eigen::VectorXcd> rows;
    for (int m = 0; m < n; ++m) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
        v(m) = 1.0;
        // Modified Gram-Schmidt plus one re-orthogonalization pass: a single
        // pass loses orthogonality when the span elements are nearly parallel.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Eigen::VectorXcd& u : rows) {
                // dot() conjugates its left argument, so this is <u|v> under the
                // coherent-state Gram metric.
                const std::complex<double> proj = u.dot(gram * v);
                v -= proj * u;
            }
        }
        const double norm2 = std::max(0.0, v.dot(gram * v).real());
        const double norm = std::sqrt(norm2);
        if (norm < kDropThreshold) {
            continue;  // numerically inside the span already built
        }
        rows.push_back(v / norm);
    }

    Eigen::MatrixXcd coeffs(static_cast<int>(rows.size()), n);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        coeffs.row(r) = rows[r].transpose();
    }
    Eigen::MatrixXcd span_overlaps = coeffs.conjugate() * gram;
    return OrthoBasis(amplitudes, std::move(coeffs), std::move(span_overlaps));
}

HermitianMatrix project_mixture(const states::CoherentMixture& mixture,
                                const OrthoBasis& basis) {
    const auto& source = basis.source_amplitudes();
    const Eigen::MatrixXcd& w = basis.span_overlaps();
    const int dim = basis.effective_dim();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& e : mixture.elements()) {
        int idx = -1;
        for (int i = 0; i < static_cast<int>(source.size()); ++i) {
            if (std::abs(source[i] - e.amplitude) <= 1e-12) {
                idx = i;
                break;
            }
        }
        if (idx < 0) {
            throw std::invalid_argument("basis was not built from the mixture's amplitudes");
        }
        rho += e.weight * (w.col(idx) * w.col(idx).adjoint());
    }
    return HermitianMatrix(std::move(rho),
                           std::make_shared<OrthoBasis>(basis));
}

Eigen::VectorXd eigenvalues(const HermitianMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m.entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigenvalue decomposition failed");
    }
    return solver.eigenvalues();
}

double entropy(const HermitianMatrix& m) {
    const double trace = m.entries().trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        throw numerical_error("entropy input is not trace-1 within tolerance");
    }
    const Eigen::VectorXd lambda = eigenvalues(m);
    double s = 0.0;
    for (int i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < -kEigenvalueTol) {
            throw numerical_error("entropy input is not positive semidefinite");
        }
        s -= plogp(lambda(i));
    }
    return s;
}

double entropy_2x2(const Eigen::Matrix2cd& m) {
    const double d1 = m(0, 0).real();
    const double d2 = m(1, 1).real();
    const double tr = d1 + d2;
    const double r = std::sqrt(std::max(
        0.25 * (d1 - d2) * (d1 - d2) + std::norm(m(0, 1)), 0.0));
    const double hi = 0.5 * tr + r;
    const double lo = 0.5 * tr - r;
    return -plogp(hi) - plogp(lo);
}

}  // namespace discordpot::subspace
