#ifndef SEMIEQ_ERRORS_HPP_
#define SEMIEQ_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semieq {

enum class ErrorCode {
  OutOfRangeEntry,
  NonAssociative,
  EmptyGeneratorSet,
  NotACongruence,
  NotAnIdeal,
  UnsupportedParameter,
  NoIdempotents,
  NotIdempotent,
  SyntaxError,
  UnboundSymbol,
  DuplicateBinder,
  UnsupportedAtom,
  DisjunctiveMatrix,
  BudgetExceeded,
  OrderCapExceeded,
  UnknownClass,
  NotRegular,
  HasParameters,
  UnknownSymbol,
  ParseError,
  Overflow,
  UsageError,
  InternalCheckFailed,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library; `code` identifies the
/// failure class, `detail` carries a numeric payload where one exists
/// (e.g. the estimated cost of an over-budget evaluation).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, std::uint64_t detail = 0)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::uint64_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::uint64_t detail_;
};

}  // namespace semieq

#endif  // SEMIEQ_ERRORS_HPP_
