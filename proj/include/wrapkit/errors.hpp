#pragma once

#include <stdexcept>
#include <string>

namespace wrapkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_field
struct DivisionByZero : Error { using Error::Error; };
struct IncompatibleRadicands : Error { using Error::Error; };

// characterize
struct InvalidParams : Error { using Error::Error; };
struct NonPositiveB : Error { using Error::Error; };
struct InconsistentStripData : Error { using Error::Error; };

// geometry
struct ZeroEdge : Error { using Error::Error; };
struct MalformedSquare : Error { using Error::Error; };

// tiling
struct InvalidSpec : Error { using Error::Error; };
struct MarginTooSmall : Error { using Error::Error; };
struct AmbiguousAtBoundary : Error { using Error::Error; };
struct NonIntegerProjection : Error { using Error::Error; };

// parsing / documents
struct MixedRadicands : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

}  // namespace wrapkit
