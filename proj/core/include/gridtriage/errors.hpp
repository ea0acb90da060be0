#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridtriage {

enum class Errc {
  CycleDetected,
  DisconnectedBus,
  DuplicateEnergizingLine,
  DuplicateId,
  UnknownRoot,
  UnknownBus,
  UnknownLine,
  UnknownClass,
  InvalidValue,
  DegenerateCurve,
  NonpositiveAverage,
  NegativeDuration,
  EmptySweep,
  ParseError,
  SchemaError,
};

std::string_view to_string(Errc code);

// Every failure raised by the library. `ids` carries the offending bus, line
// or class ids when the error concerns specific entities.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<int> ids = {});

  Errc code() const noexcept { return code_; }
  const std::vector<int>& ids() const noexcept { return ids_; }

  // Malformed input text, as opposed to well-formed input that fails checks.
  bool is_parse_failure() const noexcept { return code_ == Errc::ParseError; }

 private:
  Errc code_;
  std::vector<int> ids_;
};

// Data-quality finding that does not stop an assessment.
struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

}  // namespace gridtriage
