#pragma once

#include <stdexcept>
#include <string>

namespace dpcover {

/// Exact integer arithmetic overflowed the 128-bit carrier.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded its step budget or a configured size bound.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity that must match a recomputed value did not; signals a bug,
/// not bad input (e.g. a formula division that should always be exact).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// A verification suite found a mismatch against a recorded expected value.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dpcover
