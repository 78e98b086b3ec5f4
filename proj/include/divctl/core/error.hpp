#pragma once

#include <stdexcept>
#include <string>

namespace divctl {

// Base for all library errors. Subtypes carry the failure category so tests
// and the CLI can distinguish bad inputs from runtime failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration, malformed file, violated precondition on user input.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Filesystem / stream failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

#define DIVCTL_DEFINE_ERROR(NAME, BASE)                       \
    class NAME : public BASE {                                \
    public:                                                   \
        explicit NAME(const std::string& msg) : BASE(msg) {}  \
    }

}  // namespace divctl
