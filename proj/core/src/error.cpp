#include "arbocoh/error.hpp"

namespace arbocoh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::NotDistinct: return "NotDistinct";
    case ErrorKind::DegenerateCylinder: return "DegenerateCylinder";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::NotCuspidalShape: return "NotCuspidalShape";
    case ErrorKind::SubtreeHitsTriple: return "SubtreeHitsTriple";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorKind::NotACentipede: return "NotACentipede";
    case ErrorKind::DegenerateIrrep: return "DegenerateIrrep";
    case ErrorKind::BadVertexChoice: return "BadVertexChoice";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::BadVector: return "BadVector";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace arbocoh
