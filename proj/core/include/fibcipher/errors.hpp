#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibcipher {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text contains characters outside the message alphabet.
// Positions are 1-based and refer to the offending input string.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message,
                             std::vector<std::size_t> positions = {})
        : Error(message), positions_(std::move(positions)) {}

    const std::vector<std::size_t>& positions() const noexcept { return positions_; }

private:
    std::vector<std::size_t> positions_;
};

// Malformed serialized input: secret code files, ciphertext digits, message files.
class FormatError : public Error {
public:
    using Error::Error;
};

// Argument outside its documented domain (index, range, retry count).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace fibcipher
