#pragma once

#include <stdexcept>
#include <string>

namespace shifted {

/// Malformed input: length mismatches, non-partitions, bad parameters.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on an ideal that violates its precondition,
/// e.g. a Betti computation on an ideal that is not shifted, or a
/// shiftedness predicate on the zero/unit ideal.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The homology oracle refused a computation that exceeds its size guard.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace shifted
