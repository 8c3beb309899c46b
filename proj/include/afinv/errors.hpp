#pragma once

#include <stdexcept>
#include <string>

namespace afinv {

/// Malformed or out-of-contract input (bad factors, non-subgroups, partial tables, schema errors).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested feature outside the supported (untwisted) fragment.
class UnsupportedFeature : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bimodules whose middle Q-systems do not match.
class InvalidComposition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact computation produced a value that contradicts a proven invariant.
/// Never recovered from by rounding.
class InternalConsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The floating-point oracle could not round to integers within tolerance.
class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace afinv
