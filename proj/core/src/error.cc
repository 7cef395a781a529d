#include "almoststable/error.h"

namespace almoststable {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kAsymmetric: return "ASYMMETRIC";
    case ErrorCode::kDuplicateEntry: return "DUPLICATE_ENTRY";
    case ErrorCode::kSelfRanked: return "SELF_RANKED";
    case ErrorCode::kBadId: return "BAD_ID";
    case ErrorCode::kNotBipartite: return "NOT_BIPARTITE";
    case ErrorCode::kInvalidMatching: return "INVALID_MATCHING";
    case ErrorCode::kDegreeExceeded: return "DEGREE_EXCEEDED";
    case ErrorCode::kNotSmi: return "NOT_SMI";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kInconsistentCut: return "INCONSISTENT_CUT";
    case ErrorCode::kMissingVariable: return "MISSING_VARIABLE";
    case ErrorCode::kBadK: return "BAD_K";
    case ErrorCode::kBadOmega: return "BAD_OMEGA";
    case ErrorCode::kInvalidFormula: return "INVALID_FORMULA";
    case ErrorCode::kUnsatisfyingAssignment: return "UNSATISFYING_ASSIGNMENT";
    case ErrorCode::kMalformedWitness: return "MALFORMED_WITNESS";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kBadConfig: return "BAD_CONFIG";
    case ErrorCode::kEmpty: return "EMPTY";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace almoststable
