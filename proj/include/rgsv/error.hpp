#pragma once

#include <stdexcept>
#include <string>

namespace rgsv {

enum class ErrorCode {
  InvalidInput,
  DimensionZero,
  DegenerateFacet,
  DuplicateFacet,
  NotPseudoManifold,
  NotConnected,
  NotOrientable,
  LabelMismatch,
  NotACycle,
  ChainNotDescending,
  UnknownName,
  BadParams,
  ParseError,
};

const char* to_string(ErrorCode code);

// Every rejection raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rgsv
