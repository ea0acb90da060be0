#include "gridtriage/errors.hpp"

namespace gridtriage {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::DisconnectedBus: return "DisconnectedBus";
    case Errc::DuplicateEnergizingLine: return "DuplicateEnergizingLine";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownRoot: return "UnknownRoot";
    case Errc::UnknownBus: return "UnknownBus";
    case Errc::UnknownLine: return "UnknownLine";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::InvalidValue: return "InvalidValue";
    case Errc::DegenerateCurve: return "DegenerateCurve";
    case Errc::NonpositiveAverage: return "NonpositiveAverage";
    case Errc::NegativeDuration: return "NegativeDuration";
    case Errc::EmptySweep: return "EmptySweep";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<int> ids)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      ids_(std::move(ids)) {}

}  // namespace gridtriage
