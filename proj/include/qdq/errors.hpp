#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values tagged with different root orders were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero") {}
};

/// q^r requested with r * root_order not an integer.
class NonRepresentableExponent : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The punctured submatrix X^{ij} (1-based labels) is not invertible.
class SubmatrixSingular : public Error {
 public:
  SubmatrixSingular(std::size_t i, std::size_t j)
      : Error("submatrix X^{" + std::to_string(i) + "," + std::to_string(j) +
              "} is singular"),
        row(i),
        col(j) {}

  std::size_t row;
  std::size_t col;
};

class WrongWedgeDimension : public Error {
 public:
  explicit WrongWedgeDimension(std::size_t dim)
      : Error("joint antisymmetric eigenspace has dimension " +
              std::to_string(dim) + ", expected 1"),
        dimension(dim) {}

  std::size_t dimension;
};

class CoactionNotProportional : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class BetaNotInH0 : public Error {
 public:
  using Error::Error;
};

class OrderReversing : public Error {
 public:
  using Error::Error;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

}  // namespace qdq
