#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatinv {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A complex matrix handed to from_crep is not the image of a quaternion matrix.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.qmat`, PPM or CSV input, or an I/O failure.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range parameter (negative step, empty trajectory, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

std::string shape_string(std::size_t rows, std::size_t cols);

}  // namespace quatinv
