#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lune {

enum class ErrorCode {
  InvalidPoint,
  AntipodalEndpoints,
  DegenerateTriple,
  DegenerateLune,
  DegenerateInput,
  NotInOpenHemisphere,
  InvalidBody,
  NotOnBoundary,
  BadRadius,
  BadThickness,
  BadParameters,
  NoSolution,
  EmptyResult,
  NotSupporting,
  DiameterMismatch,
  ThicknessTooLarge,
  NotConstantWidthOverHalfPi,
  RegimeUnknown,
  UnknownTheoremId,
  Schema,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lune
