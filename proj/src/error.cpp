#include "sbgeo/error.hpp"

namespace sbgeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::InfeasibleUnbalanced: return "infeasible-unbalanced";
    case ErrorKind::InfeasibleRoyalCrossing: return "infeasible-royal-crossing";
    case ErrorKind::Ambiguous: return "ambiguous";
    case ErrorKind::CertificationFailure: return "certification-failure";
    case ErrorKind::Classification: return "classification";
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace sbgeo
