#include "dimlab/error.hpp"

namespace dimlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotAbelianQuotient: return "NotAbelianQuotient";
    case Errc::NotDescending: return "NotDescending";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::CostGuard: return "CostGuard";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::MismatchedGrading: return "MismatchedGrading";
    case Errc::UnknownName: return "UnknownName";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dimlab
