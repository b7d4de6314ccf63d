#pragma once

#include <stdexcept>
#include <string>

namespace blink {

// Input failed structural validation (bad shape, bad index, bad document).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition does not hold for these arguments.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The requested computation lies outside the supported fragment.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace blink
