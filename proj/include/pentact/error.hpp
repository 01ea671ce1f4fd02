#pragma once

#include <stdexcept>
#include <string>

namespace pentact {

enum class ErrorKind {
    Parse,
    Io,
    InvalidSize,
    NonPlanar,
    NotTriangulated,
    OuterFaceMismatch,
    ChordPresent,
    MultiEdge,
    MissingEdgeAmbiguous,
    PathCycled,
    TooLarge,
    NotDirectedFace,
    DivisionByZero,
    Overflow,
    DimensionMismatch,
    SingularMatrix,
    CycleLinkFailure,
    NegativeInput,
    ClosureFailure,
    DegenerateContact,
    InvalidForest,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pentact
