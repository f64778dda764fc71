#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chiro {

enum class Errc {
  GeneralPositionViolation,
  TooSmall,
  InvalidTriple,
  NotARootedChirotope,
  SharedEndpoint,
  OracleTooLarge,
  InternalInvariantViolation,
  EmptyInput,
  OutOfRange,
  TooLarge,
  ConstructionFailed,
  NumericalInstability,
  MalformedFile,
  ParseError,
  UnknownIdentifier,
  BadArity,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// All domain failures surface as chiro::Error; the code is what the C API
// and the CLI map to status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace chiro
