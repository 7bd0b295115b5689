#include "discordpot/splitter.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace discordpot::splitter {

namespace {

constexpr double kMergeThreshold = 1e-14;
constexpr double kWeightSumTol = 1e-12;

bool finite(ComplexAmplitude z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

TwoModeMixture::TwoModeMixture(std::vector<Element> elements) {
    if (elements.empty()) {
        throw std::invalid_argument("two-mode mixture needs at least one element");
    }
    double total = 0.0;
    for (const Element& e : elements) {
        if (!std::isfinite(e.weight) || e.weight <= 0.0) {
            throw std::invalid_argument("mixture weights must be positive and finite");
        }
        if (!finite(e.amplitude_a) || !finite(e.amplitude_b)) {
            throw std::invalid_argument("mixture amplitudes must be finite");
        }
        total += e.weight;
        bool merged = false;
        for (Element& kept : elements_) {
            if (std::abs(kept.amplitude_a - e.amplitude_a) < kMergeThreshold &&
                std::abs(kept.amplitude_b - e.amplitude_b) < kMergeThreshold) {
                kept.weight += e.weight;
                merged = true;
                break;
            }
        }
        if (!merged) {
            elements_.push_back(e);
        }
    }
    if (std::abs(total - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
}

TwoModeMixture split(const states::CoherentMixture& input) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> reflect(0.0, inv_sqrt2);
    std::vector<TwoModeMixture::Element> out;
    out.reserve(input.size());
    for (const auto& e : input.elements()) {
        out.push_back({e.weight, e.amplitude * inv_sqrt2, e.amplitude * reflect});
    }
    return TwoModeMixture(std::move(out));
}

states::CoherentMixture reduce(const TwoModeMixture& state, Mode mode) {
    std::vector<states::CoherentMixture::Element> out;
    out.reserve(state.size());
    for (const auto& e : state.elements()) {
        out.push_back({e.weight, mode == Mode::A ? e.amplitude_a : e.amplitude_b});
    }
    return states::CoherentMixture(std::move(out));
}

}  // namespace discordpot::splitter
