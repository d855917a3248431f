#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schreier {

enum class ErrorKind {
    Shape,
    NotAssociative,
    BadIdentity,
    NotHomomorphism,
    SizeLimit,
    Composability,
    Triangle,
    NotPrefibration,
    InvalidAction,
    InvalidLaxHom,
    InvalidCell,
    NotAnAction,
    InvalidCleavage,
    NotKernelPreserving,
    NotCartesian,
    NotWellDefined,
    NotCommutative,
    NotRegular,
    NotRegularSchreier,
    Parse,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. The message carries the witness.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SizeLimitError : public Error {
public:
    SizeLimitError(std::size_t requested, std::size_t bound, const std::string& what)
        : Error(ErrorKind::SizeLimit, what), requested_(requested), bound_(bound) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t requested_;
    std::size_t bound_;
};

} // namespace schreier
