#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "discordpot/states.hpp"

namespace discordpot::subspace {

using states::ComplexAmplitude;

// Orthonormal basis {|u_j>} of span{|alpha_i>}, stored in coefficient space:
// |u_j> = sum_{i} coeffs(j,i) |alpha_i>, with coeffs(j,i) = 0 for i beyond
// the source vector that seeded row j (lower-triangular up to drops).
// All inner products are evaluated analytically through overlap(), so the
// basis is exact independent of any Fock truncation.
class OrthoBasis {
  public:
    OrthoBasis(std::vector<ComplexAmplitude> source,
               Eigen::MatrixXcd coeffs,
               Eigen::MatrixXcd span_overlaps);

    const std::vector<ComplexAmplitude>& source_amplitudes() const { return source_; }
    const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
    int effective_dim() const { return static_cast<int>(coeffs_.rows()); }

    // span_overlaps()(j, m) = <u_j|alpha_m> for every source amplitude m.
    // This is the workhorse for projecting mixtures and measurements.
    const Eigen::MatrixXcd& span_overlaps() const { return span_overlaps_; }

  private:
    std::vector<ComplexAmplitude> source_;
    Eigen::MatrixXcd coeffs_;
    Eigen::MatrixXcd span_overlaps_;
};

// Finite Hermitian matrix together with the basis its entries are expressed
// in (one OrthoBasis, or a tensor product of two for two-mode states).
class HermitianMatrix {
  public:
    HermitianMatrix(Eigen::MatrixXcd entries,
                    std::shared_ptr<const OrthoBasis> basis_a,
                    std::shared_ptr<const OrthoBasis> basis_b = nullptr);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    const std::shared_ptr<const OrthoBasis>& basis_a() const { return basis_a_; }
    const std::shared_ptr<const OrthoBasis>& basis_b() const { return basis_b_; }

  private:
    Eigen::MatrixXcd entries_;
    std::shared_ptr<const OrthoBasis> basis_a_;
    std::shared_ptr<const OrthoBasis> basis_b_;
};

// Modified Gram-Schmidt in coefficient space with one re-orthogonalization
// pass (a single classical pass loses orthogonality for nearly parallel
// coherent states at small separations).  Vectors whose residual norm falls
// below eps_gs = 1e-10 are dropped and effective_dim shrinks.
OrthoBasis gram_schmidt(const std::vector<ComplexAmplitude>& amplitudes);

// rho_{jk} = <u_j|rho|u_k> = sum_t p_t <u_j|alpha_t><alpha_t|u_k>.
// Positive semidefinite by construction; trace 1 within 1e-10.
// The basis must have been built from the mixture's amplitudes (or a
// superset); otherwise std::invalid_argument.
HermitianMatrix project_mixture(const states::CoherentMixture& mixture,
                                const OrthoBasis& basis);

// Ascending eigenvalues of a Hermitian matrix (no state validation).
Eigen::VectorXd eigenvalues(const HermitianMatrix& m);

// Von Neumann entropy -sum lambda ln lambda in nats.  The input must
// represent a state: trace 1 within 1e-10 and eigenvalues >= -1e-10
// (small negatives are clamped to 0), else discordpot::numerical_error.
double entropy(const HermitianMatrix& m);

// Entropy of a 2x2 Hermitian matrix assumed to be a normalized state,
// via Eigen's direct self-adjoint solver.  Hot path for the conditional
// states inside the measurement minimization; skips invariant checks.
double entropy_2x2(const Eigen::Matrix2cd& m);

}  // namespace discordpot::subspace
