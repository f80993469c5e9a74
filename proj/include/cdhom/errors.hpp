#pragma once

#include <stdexcept>
#include <string>

namespace cdhom {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A point or parameter lies outside the domain where an operation is defined.
class DomainError : public Error {
public:
  using Error::Error;
};

// Invalid ModelParams / RunConfig.
class ConfigError : public Error {
public:
  using Error::Error;
};

class ZeroBase : public DomainError {
public:
  using DomainError::DomainError;
};

// c z + d vanishes (numerically) at the evaluation point.
class PoleHit : public DomainError {
public:
  using DomainError::DomainError;
};

// c z + d left the right half-plane, so the principal-branch multiplier is no
// longer the continuous continuation from the identity.
class BranchWarning : public DomainError {
public:
  using DomainError::DomainError;
};

// A normalizing radicand (2 lambda_j)_n (1)_n is not positive.
class NormalizationFailure : public DomainError {
public:
  using DomainError::DomainError;
};

class SingularG : public DomainError {
public:
  using DomainError::DomainError;
};

class SingularResolvent : public DomainError {
public:
  using DomainError::DomainError;
};

class SingularKernelColumn : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace cdhom
