#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jqc {

enum class Errc {
  NonPrime,
  SmallCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  IncompatibleTower,
  InvalidCurve,
  SingularCurve,
  PointNotOnCurve,
  ExceptionalPoint,
  InvalidLambda,
  SpecialJ,
  SpecialJ1728,
  ZeroScale,
  BadCardinality,
  ParseError,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::SmallCharacteristic: return "SmallCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::IncompatibleTower: return "IncompatibleTower";
    case Errc::InvalidCurve: return "InvalidCurve";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::ExceptionalPoint: return "ExceptionalPoint";
    case Errc::InvalidLambda: return "InvalidLambda";
    case Errc::SpecialJ: return "SpecialJ";
    case Errc::SpecialJ1728: return "SpecialJ1728";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::BadCardinality: return "BadCardinality";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message names the violated constraint (e.g. "b = 0" vs "a^2 = 4b").
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace jqc
