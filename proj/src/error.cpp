#include "leecode/error.hpp"

namespace leecode {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorKind::NotPrimeModulus: return "NotPrimeModulus";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroNormClass: return "ZeroNormClass";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::ZeroT: return "ZeroT";
    case ErrorKind::NotZeroDivisor: return "NotZeroDivisor";
    case ErrorKind::DegenerateT: return "DegenerateT";
    case ErrorKind::InvalidGeneratorSet: return "InvalidGeneratorSet";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace leecode
