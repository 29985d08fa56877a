#pragma once

#include <stdexcept>
#include <string>

namespace gwemb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad vertex id, self-loop, parse error,
/// invalid coloring, broken skeleton condition).
class InputError : public Error {
public:
    using Error::Error;
};

/// An exact procedure was asked to run above its configured size guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// A search ran out of its node or time budget before deciding.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace gwemb
