#pragma once

#include <stdexcept>
#include <string>

namespace rdunkl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point evaluation outside the domain of a function or operator.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A Pochhammer or Gamma argument hit a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A triangular solve met a (numerically) vanishing diagonal entry.
class SingularError : public Error {
 public:
  using Error::Error;
};

// Argument outside the range where series summation keeps enough digits.
class SeriesOverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdunkl
