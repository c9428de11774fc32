#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

// Base for every error that reflects a violated domain contract. The CLI maps
// these to exit status 1; anything else escaping is a defect.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class SizeExceeded : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class MalformedCertificate : public Error {
public:
    using Error::Error;
};

class NoIndependentSet : public Error {
public:
    using Error::Error;
};

class ColorCollision : public Error {
public:
    using Error::Error;
};

} // namespace rainbow
