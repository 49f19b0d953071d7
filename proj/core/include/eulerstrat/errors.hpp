#pragma once

#include <stdexcept>
#include <string>

namespace eulerstrat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class CycleError : public InputError {
 public:
  using InputError::InputError;
};

class DimOrderError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownStratumError : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateStratumError : public InputError {
 public:
  using InputError::InputError;
};

/// A user-supplied dense stratum is not the unique maximum.
class InvalidDenseError : public InputError {
 public:
  using InputError::InputError;
};

class NoDenseStratumError : public InputError {
 public:
  using InputError::InputError;
};

class MissingLinkDataError : public InputError {
 public:
  using InputError::InputError;
};

/// Link entry on a non-comparable pair, negative Betti numbers, or the two
/// link encodings disagreeing.
class InvalidLinkDataError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidCodimError : public InputError {
 public:
  using InputError::InputError;
};

class SpaceMismatchError : public InputError {
 public:
  using InputError::InputError;
};

/// Kernel fails sum_V chi_c(V) k(V,U) = chi_c(U) for some source stratum U.
class KernelConsistencyError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownExampleError : public InputError {
 public:
  using InputError::InputError;
};

/// Document parse failure; the message carries line/column or a field path.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Checked 64-bit arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulerstrat
