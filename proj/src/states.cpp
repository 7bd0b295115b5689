#include "discordpot/states.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace discordpot::states {

namespace {

constexpr double kMergeThreshold = 1e-14;
constexpr double kWeightSumTol = 1e-12;

bool finite(ComplexAmplitude z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

std::complex<double> overlap(ComplexAmplitude a, ComplexAmplitude b) {
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

double separation(ComplexAmplitude a, ComplexAmplitude b) {
    return std::abs(a - b);
}

CoherentMixture::CoherentMixture(std::vector<Element> elements) {
    if (elements.empty()) {
        throw std::invalid_argument("mixture needs at least one element");
    }
    double total = 0.0;
    for (const Element& e : elements) {
        if (!std::isfinite(e.weight) || e.weight <= 0.0) {
            throw std::invalid_argument("mixture weights must be positive and finite");
        }
        if (!finite(e.amplitude)) {
            throw std::invalid_argument("mixture amplitudes must be finite");
        }
        total += e.weight;
        bool merged = false;
        for (Element& kept : elements_) {
            if (std::abs(kept.amplitude - e.amplitude) < kMergeThreshold) {
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

std::vector<ComplexAmplitude> CoherentMixture::amplitudes() const {
    std::vector<ComplexAmplitude> out;
    out.reserve(elements_.size());
    for (const Element& e : elements_) {
        out.push_back(e.amplitude);
    }
    return out;
}

CoherentMixture make_binary_mixture(double a, ComplexAmplitude alpha0,
                                    ComplexAmplitude beta0) {
    if (!std::isfinite(a) || a <= 0.0 || a >= 1.0) {
        throw std::invalid_argument("mixing probability must lie in (0, 1)");
    }
    if (!finite(alpha0) || !finite(beta0)) {
        throw std::invalid_argument("amplitudes must be finite");
    }
    if (std::abs(alpha0 - beta0) < kMergeThreshold) {
        throw std::invalid_argument(
            "coinciding amplitudes do not form a binary mixture");
    }
    return CoherentMixture({{a, alpha0}, {1.0 - a, beta0}});
}

}  // namespace discordpot::states
