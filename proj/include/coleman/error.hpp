#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coleman {

enum class ErrorKind {
  OrderCapExceeded,
  InvalidPermutation,
  NotADivisor,
  NotNormal,
  NotASubgroup,
  InvalidSpec,
  InvalidAction,
  InvalidParams,
  NotNilpotent,
  QuotientNotCyclicPrimePower,
  InvalidTwist,
  NotAnAutomorphism,
  PrimeSearchExhausted,
  UnknownTheoremId,
  NotAbelian,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can report it as a machine-readable tag.
class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace coleman
