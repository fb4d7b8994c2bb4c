#include "linkspace/error.hpp"

namespace linkspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::ViolatesPolygonInequality: return "ViolatesPolygonInequality";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::TooCoarse: return "TooCoarse";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::OffHyperplane: return "OffHyperplane";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotAClosedSurface: return "NotAClosedSurface";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace linkspace
