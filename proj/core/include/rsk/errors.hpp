#pragma once

#include <stdexcept>
#include <string>

namespace rsk {

// Base class for all library errors so callers can catch in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape / tableau structure.
struct ShapeMismatch : Error { using Error::Error; };
struct BoxOutOfShape : Error { using Error::Error; };
struct RectangleNotInShape : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NotRpp : Error { using Error::Error; };
struct NotCorner : Error { using Error::Error; };
struct NotLinearExtension : Error { using Error::Error; };

// Gelfand-Tsetlin patterns and gluing.
struct EntryOutOfRange : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct FirstRowMismatch : Error { using Error::Error; };

// Pyramid arrays.
struct KindMismatch : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };

// Lattice paths.
struct PathOutOfShape : Error { using Error::Error; };
struct EndpointOutOfShape : Error { using Error::Error; };
struct NoFamily : Error { using Error::Error; };

// Content weights and series.
struct MissingWeight : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };

// Resource guards.
struct CapExceeded : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };

// Input decoding (JSON and friends); distinct from semantic validation.
struct ParseError : Error { using Error::Error; };

} // namespace rsk
