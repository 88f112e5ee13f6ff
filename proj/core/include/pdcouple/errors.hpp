#pragma once

#include <stdexcept>
#include <string>

namespace pdcouple {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: parameters, geometry, or a request the discretization
// cannot honor. The CLI maps this family to exit code 1.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

// Coordinate outside the span of a grid side.
class RangeError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

// No admissible interpolation support contains the target.
class SupportError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

class DegenerateSupportError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

// A finite-difference or peridynamic stencil would reach outside its grid.
class StencilRangeError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

// Failures of the numerical pipeline itself. Exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace pdcouple
