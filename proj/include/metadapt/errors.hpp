#pragma once

#include <stdexcept>
#include <string>

namespace metadapt {

// Shape or arity mismatch between tensors / modules.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// NaN/Inf produced by a forward op, or non-finite gradients hitting an
// optimizer step.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (empty batch, non-scalar loss,
// detached graph, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// On-disk container violations. `kind` distinguishes the failure class so
// callers/tests can tell bad magic from version skew from truncation.
struct FormatError : std::runtime_error {
    enum class Kind { BadMagic, BadVersion, Truncated, Corrupt };
    Kind kind;
    FormatError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace metadapt
