#ifndef FOLGIT_ERRORS_HPP
#define FOLGIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace folgit {

/// Base for every error raised by the library. `kind()` is a stable
/// machine-readable tag used in reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DegreeMismatch : public Error {
 public:
  explicit DegreeMismatch(const std::string& what) : Error("DegreeMismatch", what) {}
};

class ZeroField : public Error {
 public:
  ZeroField() : Error("ZeroField", "vector field is identically zero") {}
};

/// Carries the offending common factor in printed form.
class CommonFactor : public Error {
 public:
  explicit CommonFactor(std::string factor)
      : Error("CommonFactor", "components share the common factor " + factor),
        factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class NonIsolated : public Error {
 public:
  explicit NonIsolated(std::string witness)
      : Error("NonIsolated", "singular set contains the curve " + witness + " = 0"),
        witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class NotSingular : public Error {
 public:
  explicit NotSingular(const std::string& point)
      : Error("NotSingular", "point " + point + " is not singular") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("SingularMatrix", "matrix is not invertible") {}
};

class NotUnimodular : public Error {
 public:
  NotUnimodular() : Error("NotUnimodular", "matrix determinant is not 1") {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

class InvalidSubgroup : public Error {
 public:
  explicit InvalidSubgroup(const std::string& what) : Error("InvalidSubgroup", what) {}
};

class FamilyConstraint : public Error {
 public:
  explicit FamilyConstraint(const std::string& what) : Error("FamilyConstraint", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class Inhomogeneous : public Error {
 public:
  explicit Inhomogeneous(const std::string& what) : Error("Inhomogeneous", what) {}
};

}  // namespace folgit

#endif  // FOLGIT_ERRORS_HPP
