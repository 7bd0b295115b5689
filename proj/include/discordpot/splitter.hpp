#pragma once

#include <vector>

#include "discordpot/states.hpp"

namespace discordpot::splitter {

using states::ComplexAmplitude;

// Mixture of two-mode coherent products sum_t p_t |a_t><a_t| (x) |b_t><b_t|;
// separable by construction.
class TwoModeMixture {
  public:
    struct Element {
        double weight;
        ComplexAmplitude amplitude_a;
        ComplexAmplitude amplitude_b;
    };

    explicit TwoModeMixture(std::vector<Element> elements);

    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

  private:
    std::vector<Element> elements_;
};

enum class Mode { A, B };

// Balanced splitter acting on (input, vacuum):
//   |alpha> (x) |0>  ->  |alpha/sqrt(2)> (x) |i alpha/sqrt(2)>.
// The reflected arm carries the phase factor i; this convention is fixed
// because it is observable through reduce() amplitudes and golden files.
TwoModeMixture split(const states::CoherentMixture& input);

// Marginal mixture of one arm: keeps that mode's amplitudes with the same
// weights (coinciding amplitudes merged by the CoherentMixture ctor).
states::CoherentMixture reduce(const TwoModeMixture& state, Mode mode);

}  // namespace discordpot::splitter
