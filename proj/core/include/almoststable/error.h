#ifndef ALMOSTSTABLE_ERROR_H_
#define ALMOSTSTABLE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace almoststable {

enum class ErrorCode {
  kMalformed,
  kAsymmetric,
  kDuplicateEntry,
  kSelfRanked,
  kBadId,
  kNotBipartite,
  kInvalidMatching,
  kDegreeExceeded,
  kNotSmi,
  kInfeasible,
  kTooLarge,
  kInconsistentCut,
  kMissingVariable,
  kBadK,
  kBadOmega,
  kInvalidFormula,
  kUnsatisfyingAssignment,
  kMalformedWitness,
  kPrecondition,
  kBadConfig,
  kEmpty,
};

// Upper-case identifier, e.g. "ASYMMETRIC".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace almoststable

#endif  // ALMOSTSTABLE_ERROR_H_
