#pragma once

#include <stdexcept>
#include <string>

namespace accyc {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  ZeroPolynomial,
  NotMonic,
  DimensionMismatch,
  NotSquare,
  Singular,
  MinpolyNotDividing,
  NotCoprime,
  TowerMismatch,
  OutOfDomain,
  UnknownDescriptor,
  SingularGenerator,
  CapExceeded,
  BadHeader,
  EntryOutOfRange,
  CountMismatch,
  UnsupportedMode,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// All library failures throw this; code() distinguishes the contract violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace accyc
