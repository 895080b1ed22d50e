#include "coleman/error.hpp"

namespace coleman {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::QuotientNotCyclicPrimePower: return "QuotientNotCyclicPrimePower";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::PrimeSearchExhausted: return "PrimeSearchExhausted";
    case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorKind::NotAbelian: return "NotAbelian";
  }
  return "Unknown";
}

}  // namespace coleman
