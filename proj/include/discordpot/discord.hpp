#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "discordpot/splitter.hpp"
#include "discordpot/states.hpp"
#include "discordpot/subspace.hpp"

namespace discordpot::discord {

using states::ComplexAmplitude;

// Projective measurement on the 2-dimensional mode-A subspace: the rank-1
// projectors onto cos(theta)|u1> + e^{i phi} sin(theta)|u2> and its
// orthocomplement.  theta in [0, pi/2], phi in [0, 2 pi).
struct MeasurementAngles {
    double theta = 0.0;
    double phi = 0.0;
};

// Folds arbitrary angles into the canonical ranges using the projector
// identities (theta -> pi - theta, phi -> phi + pi) and 2 pi periodicity.
MeasurementAngles normalize_angles(MeasurementAngles angles);

struct DiscordReport {
    double total_entropy = 0.0;            // S(AB), nats
    double entropy_a = 0.0;                // S(A)
    double entropy_b = 0.0;                // S(B)
    double mutual_information = 0.0;       // S(A) + S(B) - S(AB)
    double min_conditional_entropy = 0.0;  // min over measurement angles
    MeasurementAngles optimal_angles;
    double discord = 0.0;                  // S(A) - S(AB) + min cond. entropy
    double classical_information = 0.0;    // mutual_information - discord
    bool clamped = false;  // true if a value in [-1e-10, 0) was clamped to 0
};

// Joint density matrix on the tensor product of the per-arm span bases
// (dimension effective_dim_A x effective_dim_B, row-major in mode B).
subspace::HermitianMatrix two_mode_density(const splitter::TwoModeMixture& state);

// Precomputes everything angle-independent so a single conditional-entropy
// evaluation is cheap; used by the minimizer and exposed for grid scans.
// Requires mode-A span dimension 1 or 2; with dimension 1 the only
// measurement is trivial and the conditional entropy is S(B) for any angles.
class ConditionalEntropyEvaluator {
  public:
    explicit ConditionalEntropyEvaluator(const splitter::TwoModeMixture& state);

    double operator()(MeasurementAngles angles) const;
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }

  private:
    int dim_a_ = 0;
    int dim_b_ = 0;
    double entropy_b_ = 0.0;       // the trivial-measurement value when dim_a_ == 1
    Eigen::VectorXd weights_;      // p_t
    Eigen::MatrixXcd wa_;          // <u_j|a_t>, dim_a_ x N
    Eigen::MatrixXcd wb_;          // <v_j|b_t>, dim_b_ x N
};

// S(B | {Pi_j}) = sum_j p_j S(rho_B | outcome j) for the projectors at the
// given angles.  Outcomes with p_j < 1e-14 contribute zero.
double conditional_entropy(const splitter::TwoModeMixture& state,
                           MeasurementAngles angles);

struct MinimizationResult {
    MeasurementAngles angles;
    double value = 0.0;
};

// 64x64 coarse grid over (theta, phi) followed by Nelder-Mead refinement
// (terminates when the simplex diameter drops below 1e-10).
MinimizationResult minimize_conditional_entropy(const splitter::TwoModeMixture& state);
MinimizationResult minimize_conditional_entropy(const ConditionalEntropyEvaluator& eval);

// Full report for a two-mode mixture whose mode-A span has dimension <= 2.
DiscordReport discord(const splitter::TwoModeMixture& state);

// Discord of the balanced-splitter output for a binary input mixture.
double discord_potential(const states::CoherentMixture& input);

}  // namespace discordpot::discord
