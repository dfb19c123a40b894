#pragma once

#include <stdexcept>

namespace qomat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotLatin : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct BadPair : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct TripletNotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace qomat
