#pragma once

#include <stdexcept>
#include <string>

namespace gradest {

/// A field was asked for a capability it does not provide (complex-lifted
/// evaluation or an analytic gradient). The message names the field.
class FieldCapabilityError : public std::runtime_error {
public:
    explicit FieldCapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A probe evaluation produced a non-finite value. Estimates abort rather
/// than silently dropping bad probes.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// A vector with norm below 1e-300 was used where a direction is required
/// (unit gradients, cosine errors, all-degenerate statistics).
class DegenerateGradientError : public std::runtime_error {
public:
    explicit DegenerateGradientError(const std::string& what) : std::runtime_error(what) {}
};

/// File output failed.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gradest
