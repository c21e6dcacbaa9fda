#pragma once

#include <stdexcept>
#include <string>

namespace skein3 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// polynomial layer
struct HalfExponentPresent : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

// braid layer
struct SyntaxError : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };

// oracle layer
struct CrossingLimitExceeded : Error { using Error::Error; };

// identity / block layer
struct PreconditionViolated : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct GapOverlap : Error { using Error::Error; };
struct NotCondensed : Error { using Error::Error; };

// T-link layer
struct BraidIndexTooLarge : Error { using Error::Error; };
struct NotRepresentable : Error { using Error::Error; };

// persistence
struct IoError : Error { using Error::Error; };

} // namespace skein3
