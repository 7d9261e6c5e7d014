#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

// Base for all library errors. Callers that only need exit-code style
// dispatch can catch this and inspect name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};
struct NonSquare : Error {
  explicit NonSquare(const std::string& w) : Error("NonSquare", w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error("DivisionByZero", w) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error("FieldMismatch", w) {}
};
struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& w) : Error("NotNilpotent", w) {}
};
struct NotHomomorphism : Error {
  explicit NotHomomorphism(const std::string& w) : Error("NotHomomorphism", w) {}
};
struct EigenvalueOne : Error {
  explicit EigenvalueOne(const std::string& w) : Error("EigenvalueOne", w) {}
};
struct NotClosedUnderBracket : Error {
  explicit NotClosedUnderBracket(const std::string& w)
      : Error("NotClosedUnderBracket", w) {}
};
struct NotInvariant : Error {
  explicit NotInvariant(const std::string& w) : Error("NotInvariant", w) {}
};
struct UnsupportedScalarTower : Error {
  explicit UnsupportedScalarTower(const std::string& w)
      : Error("UnsupportedScalarTower", w) {}
};
struct JordanOnCircle : Error {
  explicit JordanOnCircle(const std::string& w) : Error("JordanOnCircle", w) {}
};
struct NonIntegerLattice : Error {
  explicit NonIntegerLattice(const std::string& w)
      : Error("NonIntegerLattice", w) {}
};
struct DegenerateLayer : Error {
  explicit DegenerateLayer(const std::string& w) : Error("DegenerateLayer", w) {}
};
struct NonIntegerCoefficients : Error {
  explicit NonIntegerCoefficients(const std::string& w)
      : Error("NonIntegerCoefficients", w) {}
};
struct ClassTooHigh : Error {
  explicit ClassTooHigh(const std::string& w) : Error("ClassTooHigh", w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error("InternalError", w) {}
};

// Exact invariants the mathematics guarantees are asserted with this; a
// failure is a bug, not bad input.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace lefschetz
