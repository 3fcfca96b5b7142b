#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarline {

enum class ErrorCode {
  DuplicateAlternative,
  DuplicateAlternativeInRanking,
  RankingSizeMismatch,
  CommitteeSizeOutOfRange,
  EmptyElection,
  UnknownAlternative,
  MissingPosition,
  MidpointTie,
  NotLineRealizable,
  CommitteeSizeMismatch,
  CommitteeSizeTooLarge,
  InsufficientAlternatives,
  InvalidCommittee,
  BudgetExceeded,
  IndexOutOfRange,
  PreconditionViolated,
  ParameterOutOfRange,
  SyntaxError,
  CountMismatch,
};

// Stable machine-readable name, e.g. "NotLineRealizable".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polarline
