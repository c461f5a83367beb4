#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed rational literal; offset is the byte index of the first bad character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidLattice : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class NonConstantLambdaStar : public Error {
 public:
  using Error::Error;
};

class OracleDimensionError : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same closed-form quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A grid point where a construction cannot proceed (zero divisor).
class Singularity : public Error {
 public:
  Singularity(const std::string& what, std::string point)
      : Error(what + " at s = " + point), point_(std::move(point)) {}
  const std::string& point() const noexcept { return point_; }

 private:
  std::string point_;
};

/// x_k(s+1) = x_k(s): a difference quotient at level k has a zero denominator.
class DegenerateStep : public Singularity {
 public:
  DegenerateStep(int level, std::string point)
      : Singularity("zero lattice step at level " + std::to_string(level), std::move(point)) {}
};

class PearsonSingularity : public Singularity {
 public:
  explicit PearsonSingularity(std::string point)
      : Singularity("Pearson recurrence is singular", std::move(point)) {}
};

class SingularSummand : public Singularity {
 public:
  explicit SingularSummand(std::string point)
      : Singularity("discrete integrand is undefined", std::move(point)) {}
};

}  // namespace hyperlat
