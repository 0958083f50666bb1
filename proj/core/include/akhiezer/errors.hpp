#pragma once

#include <stdexcept>
#include <string>

namespace akhiezer {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation: an argument outside its documented domain.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// An iteration cap was hit, a root solve failed to bracket, a fit did not
/// validate, or an argument sits too close to a pole. Never a silent degrade.
class NumericalError : public Error {
public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Cross-validation against the independent minimizer failed.
class CertificationError : public Error {
public:
  explicit CertificationError(const std::string& what) : Error(what) {}
};

} // namespace akhiezer
