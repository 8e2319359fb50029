#ifndef QCOURNOT_ERRORS_HPP
#define QCOURNOT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qcournot {

/// Model parameters or entanglement out of their admissible range.
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The zero polynomial has no well-defined roots or Sturm chain.
struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("zero polynomial") {}
};

/// Polynomial degree above what the routine (or the library) supports.
struct DegreeTooHigh : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Asymmetry diagnostics require q1 != q2.
struct SymmetricInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad sweep range (lo/hi/steps).
struct InvalidRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad oracle grid specification.
struct InvalidGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Threshold search needs the 3 -> 5 -> 1 equilibrium-count pattern; other
/// parameter regimes are reported, not analyzed. Carries the count sequence
/// observed on the coarse scan.
struct PatternNotFound : std::runtime_error {
    std::vector<int> observed_counts;

    PatternNotFound(std::string msg, std::vector<int> counts)
        : std::runtime_error(std::move(msg)), observed_counts(std::move(counts)) {}
};

} // namespace qcournot

#endif
