#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ring lacks a capability the operation needs (commutativity, 1/2, i, ...).
class RingRefused : public Error {
 public:
  using Error::Error;
};

/// Input outside the operation's domain (zero vector, non-tangent, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotTangent : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotProjection : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No self-adjoint invertible square root of Tr(q^dagger q) exists in the ring.
class NoSquareRoot : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankone
