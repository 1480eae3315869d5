#ifndef PTMORSE_ERRORS_HPP
#define PTMORSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptmorse {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Kummer series hits a non-positive integer lower parameter before terminating.
class PoleError : public Error {
public:
  using Error::Error;
};

class NonConvergence : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

/// Operation not meaningful in the current state (e.g. degenerate decomposition).
class StateError : public Error {
public:
  using Error::Error;
};

/// Adaptive integrator could not meet its tolerance.
class StepFailure : public Error {
public:
  using Error::Error;
};

class Overflow : public Error {
public:
  using Error::Error;
};

} // namespace ptmorse

#endif // PTMORSE_ERRORS_HPP
