#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class UnknownCoordinate : public Error {
 public:
  explicit UnknownCoordinate(const std::string& name)
      : Error("unknown coordinate '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ChartMismatch : public Error {
 public:
  ChartMismatch() : Error("operands live on different charts") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by identically zero field") {}
};

class PoleError : public Error {
 public:
  PoleError() : Error("denominator vanishes at evaluation point") {}
};

// Linear system without a unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain: degree, parity, dimension.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace jforge
