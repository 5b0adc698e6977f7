#pragma once

#include <stdexcept>
#include <string>

namespace waring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIntegerValued : public Error {
 public:
  explicit NotIntegerValued(const std::string& what)
      : Error("polynomial is not integer-valued: " + what) {}
};

class GcdNotOne : public Error {
 public:
  using Error::Error;
};

class UnsupportedPruning : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class KamkeConstantsMissing : public Error {
 public:
  using Error::Error;
};

class DegenerateUnresolved : public Error {
 public:
  using Error::Error;
};

class HypothesesNotMet : public Error {
 public:
  using Error::Error;
};

}  // namespace waring
