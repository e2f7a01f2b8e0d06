#pragma once

#include <stdexcept>
#include <string>

namespace gonil {

/// Malformed or dimensionally inconsistent input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An input pair contradicts a structural fact the computation relies on
/// (e.g. a nilpotent Lorentz-skew operator whose cube is nonzero).
class StructuralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gonil
