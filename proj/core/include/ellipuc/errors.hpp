#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ellipuc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A parameter hit the degeneracy lattice (a vanishing sn factor).
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, long index)
      : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// Raised when a reflection parameter reaches |a_n| = 1. Carries the index
// and the values computed so far (including the terminal one) so that the
// finite-case machinery can pick up from there.
class FiniteCaseSignal : public Error {
 public:
  FiniteCaseSignal(long index, std::vector<double> values)
      : Error("reflection parameter reached |a_n| = 1 at n = " +
              std::to_string(index)),
        index_(index),
        values_(std::move(values)) {}
  long index() const noexcept { return index_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  long index_;
  std::vector<double> values_;
};

class NearSingularError : public Error {
 public:
  using Error::Error;
};

// Levinson recursion lost positivity (h_n <= 0 or |a_n| >= 1).
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, long index)
      : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace ellipuc
