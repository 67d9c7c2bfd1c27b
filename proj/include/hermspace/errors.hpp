#pragma once

#include <stdexcept>
#include <string>

namespace hermspace {

/// Precondition violation (bad index, out-of-range parameter, unsupported shape).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Floating-point failure: non-finite sample, Newton breakdown, failed tail certificate.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive refinement ran out of doublings. Carries the last two estimates.
class NonConvergenceError : public NumericalError {
public:
    NonConvergenceError(const std::string& what, double previous, double latest)
        : NumericalError(what + " (last estimates " + std::to_string(previous) + ", " +
                         std::to_string(latest) + ")"),
          previous_(previous),
          latest_(latest) {}

    double previous() const noexcept { return previous_; }
    double latest() const noexcept { return latest_; }

private:
    double previous_;
    double latest_;
};

}  // namespace hermspace
