#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments or violated preconditions. The CLI maps this to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A formula evaluated outside its domain (e.g. a negative radicand).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double residual)
      : Error(what), estimate_(estimate), residual_(residual) {}

  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double estimate_;
  double residual_;
};

/// Input exceeds the size an exhaustive routine is willing to handle.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A search exhausted its node budget without reaching a verdict.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& what, std::size_t nodes) : Error(what), nodes_(nodes) {}

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t nodes_;
};

}  // namespace spectra
