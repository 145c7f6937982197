#pragma once

#include <stdexcept>
#include <string>

namespace kneserlab {

/// Thrown when an instance exceeds a configured enumeration or memory cap.
/// The CLI maps this to exit code 2.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a verified combinatorial property fails to hold.  This is a
/// build-stopping event: the CLI maps it to exit code 3.
class VerificationFailure : public std::logic_error {
public:
    explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kneserlab
