#pragma once

#include <stdexcept>
#include <string>

namespace toda {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed rationals, gamma <= -1, wrong lengths.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class BranchCutError : public Error {
 public:
  using Error::Error;
};

class OriginError : public Error {
 public:
  using Error::Error;
};

// An expression or matrix does not have the shape an identity requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

class CardinalityError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, int order)
      : Error(what), order_(order) {}
  // Size of the first leading principal minor that is not positive.
  int order() const { return order_; }

 private:
  int order_;
};

// A Cholesky pivot is positive but not the square of a rational.
class NonSquarePivot : public Error {
 public:
  using Error::Error;
};

class SingularDiagonal : public Error {
 public:
  using Error::Error;
};

class NonzeroForbiddenCoordinate : public Error {
 public:
  using Error::Error;
};

class ProductConditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace toda
