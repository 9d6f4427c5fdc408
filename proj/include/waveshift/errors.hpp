#pragma once

#include <stdexcept>
#include <string>

namespace waveshift {

/// Bad inputs: parameter domain violations, grid mismatches, malformed files.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Failures of the computation itself (blow-up, nonpositive p, no resonance, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Regular-solution magnitude exceeded its cap during outward integration.
class BlowupError : public NumericalError {
public:
    BlowupError(double radius, double cap, double last_value)
        : NumericalError("solution blow-up: |phi| exceeded " + std::to_string(cap) +
                         " at r = " + std::to_string(radius)),
          radius_reached(radius),
          diverging_value(last_value) {}
    double radius_reached;
    double diverging_value;  // sign tells which way the solution ran off
};

}  // namespace waveshift
