#pragma once

#include <stdexcept>
#include <string>

namespace discordpot {

// Thrown when a computation cannot be completed to contract accuracy:
// dimension overflow, optimizer non-convergence, or a matrix that was
// supposed to represent a state violating its invariants beyond tolerance.
// The CLI maps this to exit code 3; std::invalid_argument (bad user input
// or domain violation) maps to exit code 2.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace discordpot
