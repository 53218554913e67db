#pragma once

#include <stdexcept>
#include <string>

namespace surcsp {

// Base for all library errors. The CLI maps subclasses to exit codes:
// usage/domain errors -> 1, infeasibility -> 2, cap overruns -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance and template signatures disagree (names, arities, or order).
struct SignatureMismatch : Error {
    explicit SignatureMismatch(const std::string& msg) : Error(msg) {}
};

// |A| < |B|: no surjective assignment exists.
struct NoSurjection : Error {
    explicit NoSurjection(const std::string& msg) : Error(msg) {}
};

// Repair ran out of reassignable elements (unreachable when |A| >= |B|).
struct NoSolution : Error {
    explicit NoSolution(const std::string& msg) : Error(msg) {}
};

// A brute-force enumeration would exceed the configured evaluation cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// Template is not 2-monotone, so the min-cut solver does not apply.
struct NotTwoMonotone : Error {
    explicit NotTwoMonotone(const std::string& msg) : Error(msg) {}
};

// Malformed problem file; message carries the offending path.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Argument outside its documented domain (bad index, bad anchor, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace surcsp
