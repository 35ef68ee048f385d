#pragma once

#include <stdexcept>
#include <string>

namespace manirep {

enum class ErrorKind {
  NotSymmetric,
  NotSkew,
  ConvergenceFailure,
  RankAmbiguous,
  InvalidDescriptor,
  SizeMismatch,
  NotInGroup,
  ModuleNotPreserved,
  OutOfLemmaRange,
  UnsupportedGroup,
  IllConditioned,
  InvalidSpectrum,
  NoConstantFactor,
  WitnessNotInModule,
  NotMinimalFamily,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace manirep
