#pragma once

#include <stdexcept>
#include <string>

namespace adiabatic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or postcondition was violated by the caller's data.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside the operation's domain (s outside [0,1], T <= 0, ...).
class DomainError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// Mismatched dimensions, lengths or bases.
class ShapeError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// The request exceeds a configured size limit (dense qubits, state qubits, SAT variables).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its accuracy contract.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

class SingularSchedule : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

class DegenerateGround : public Error {
 public:
  using Error::Error;
};

class DiagnosticFailure : public Error {
 public:
  using Error::Error;
};

class IncompleteTranscript : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// Malformed input file (JSON problem description, DIMACS formula).
class ParseError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

}  // namespace adiabatic
