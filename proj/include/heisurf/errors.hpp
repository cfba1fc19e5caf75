#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heisurf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class BadPrime : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  NonSquare(std::size_t r, std::size_t c)
      : Error("matrix is " + std::to_string(r) + "x" + std::to_string(c) + ", not square") {}
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset), detail_(what) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("variable '" + name + "' has no value"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DegreeZero : public Error {
 public:
  using Error::Error;
};

class ExactDivisionFailed : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class LambdaZero : public Error {
 public:
  LambdaZero() : Error("lambda must be nonzero") {}
};

class FileError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  explicit UnknownFamily(const std::string& name) : Error("unknown family '" + name + "'") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace heisurf
