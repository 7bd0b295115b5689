#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace discordpot::states {

// A coherent-state label: dimensionless complex amplitude (hbar = 1).
using ComplexAmplitude = std::complex<double>;

// Coherent-state inner product <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a)*b).
// Always |result| <= 1, and overlap(a, a) == 1.
std::complex<double> overlap(ComplexAmplitude a, ComplexAmplitude b);

// Separation d = |a - b|.  Satisfies d^2 = -ln|<a|b>|^2.
double separation(ComplexAmplitude a, ComplexAmplitude b);

// Proper mixture rho = sum_j p_j |alpha_j><alpha_j| with p_j > 0 and
// sum p_j = 1 (within 1e-12).  Amplitudes closer than 1e-14 are merged by
// summing their weights, so downstream orthogonalization never sees a
// numerically degenerate span.  Immutable after construction.
class CoherentMixture {
  public:
    struct Element {
        double weight;
        ComplexAmplitude amplitude;
    };

    explicit CoherentMixture(std::vector<Element> elements);

    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::vector<ComplexAmplitude> amplitudes() const;

  private:
    std::vector<Element> elements_;
};

// Two-component mixture a|alpha0><alpha0| + (1-a)|beta0><beta0|.
// Rejects a outside the open interval (0,1) and coinciding amplitudes
// (a single coherent state is not a mixture).
CoherentMixture make_binary_mixture(double a, ComplexAmplitude alpha0,
                                    ComplexAmplitude beta0);

}  // namespace discordpot::states
