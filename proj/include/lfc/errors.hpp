#pragma once

#include <stdexcept>
#include <string>

namespace lfc {

// Bad caller input: non-prime p, inconsistent roots-of-unity flags, malformed
// group tags and similar.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The query is well formed but outside what a formula or routine covers.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity failed (inexact division, broken closure, ...).
// Never expected on valid input; signals a formula-precondition breach.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lfc
