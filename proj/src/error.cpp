#include "oddkh/error.hpp"

namespace oddkh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::ArcCountViolation: return "ArcCountViolation";
    case ErrorKind::OrientationInconsistent: return "OrientationInconsistent";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::InvalidBasepoint: return "InvalidBasepoint";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::ClassificationInconsistent: return "ClassificationInconsistent";
    case ErrorKind::MismatchedCircleSets: return "MismatchedCircleSets";
    case ErrorKind::InvalidRelabeling: return "InvalidRelabeling";
    case ErrorKind::InvalidBifurcation: return "InvalidBifurcation";
    case ErrorKind::DuplicateCircle: return "DuplicateCircle";
    case ErrorKind::CannotRemovePointed: return "CannotRemovePointed";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
    case ErrorKind::FiltrationViolated: return "FiltrationViolated";
    case ErrorKind::NotAntiChain: return "NotAntiChain";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace oddkh
