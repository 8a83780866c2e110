#pragma once

#include <stdexcept>
#include <string>

namespace gb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Genotype does not satisfy the problem's encoding invariant.
struct MalformedGenotypeError : Error {
    using Error::Error;
};

// Objective value incompatible with the quality mapping (f < 0 under minimization).
struct DegenerateObjectiveError : Error {
    using Error::Error;
};

// Move arguments violate an operator precondition (separator spans, bad variant, ...).
struct InvalidMoveError : Error {
    using Error::Error;
};

// A recombination could not produce a feasible child.
struct InfeasibleOffspringError : Error {
    using Error::Error;
};

// Random solution construction exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

// Malformed instance file or schema violation on load.
struct ParseError : Error {
    using Error::Error;
};

// Invalid configuration or benchmark plan.
struct ValidationError : Error {
    using Error::Error;
};

// Sample unusable for the requested statistic (e.g. zero pooled variance).
struct DegenerateSampleError : Error {
    using Error::Error;
};

}  // namespace gb
