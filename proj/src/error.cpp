#include "pentact/error.hpp"

namespace pentact {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotTriangulated: return "NotTriangulated";
    case ErrorKind::OuterFaceMismatch: return "OuterFaceMismatch";
    case ErrorKind::ChordPresent: return "ChordPresent";
    case ErrorKind::MultiEdge: return "MultiEdge";
    case ErrorKind::MissingEdgeAmbiguous: return "MissingEdgeAmbiguous";
    case ErrorKind::PathCycled: return "PathCycled";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDirectedFace: return "NotDirectedFace";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CycleLinkFailure: return "CycleLinkFailure";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::DegenerateContact: return "DegenerateContact";
    case ErrorKind::InvalidForest: return "InvalidForest";
    }
    return "Unknown";
}

}  // namespace pentact
