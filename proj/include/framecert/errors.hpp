#pragma once

#include <stdexcept>
#include <string>

namespace framecert {

enum class ErrorKind {
  NonSymmetric,
  NoConvergence,
  Singular,
  UnsupportedNorm,
  ZeroFamily,
  LengthMismatch,
  DimensionMismatch,
  NotAFrame,
  BadDual,
  NotRiesz,
  NotABasis,
  InsufficientComplement,
  DepthTooLarge,
  ParseError,
  UnknownTheorem,
  UnknownGallery,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace framecert
