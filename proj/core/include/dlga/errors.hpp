#pragma once

#include <stdexcept>
#include <string>

namespace dlga {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamsErrc {
  RankTooSmall,
  LengthMismatch,
  ModulusOutOfRange,
  RankTooLargeForModulus,
  DuplicateL,
  NonUnitL,
  NonUnitDifference,
};

const char* to_string(ParamsErrc code);

class ParamsError : public Error {
 public:
  ParamsError(ParamsErrc code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ParamsErrc code() const noexcept { return code_; }

 private:
  ParamsErrc code_;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class MalformedString : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class StateBlowup : public Error {
 public:
  using Error::Error;
};

class NoImage : public Error {
 public:
  using Error::Error;
};

class AmbiguousImage : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlga
