#pragma once

#include <stdexcept>
#include <string>

namespace genus {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic preconditions
struct ZeroError : Error { using Error::Error; };           // a nonzero integer was required
struct DivisibilityError : Error { using Error::Error; };   // p | k where p must not divide k
struct EmptySetError : Error { using Error::Error; };       // nonempty collection required
struct NotPrimeError : Error { using Error::Error; };       // Prime construction failed
struct EvenPrimeError : Error { using Error::Error; };      // an odd prime was required
struct DomainError : Error { using Error::Error; };         // other argument preconditions

// Invariant / model construction
struct CoverageError : Error { using Error::Error; };       // overrides miss a prime dividing the base
struct NoEssentialMapError : Error { using Error::Error; }; // operation needs an essential map to exist

// Truncated series
struct MismatchError : Error { using Error::Error; };       // incompatible truncation order or modulus
struct ConstantTermError : Error { using Error::Error; };   // series must have zero constant term
struct NoSolutionError : Error { using Error::Error; };     // congruence solvable by neither sign

// Map construction and gluing
struct IncompatibleFamilyError : Error { using Error::Error; }; // local degrees do not glue
struct NonIntegralError : Error { using Error::Error; };        // glued degree is not an integer
struct NotRealizableError : Error { using Error::Error; };      // degree outside the degree set

// Config / CLI
struct ParseError : Error { using Error::Error; };

} // namespace genus
