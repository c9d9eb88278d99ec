#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shg/trace.hpp"

namespace shg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad grid or solver configuration (odd N, non-positive length, gamma window...).
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// A physical or numerical parameter outside its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Fields bound to different grids were combined.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// The constraint integral vanished where a nonzero value is required.
class DegenerateConstraint : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (e.g. not a stationary solution).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The decay-fit window holds too few usable samples.
class FitWindowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<TraceEntry> trace)
      : Error(what), trace_(std::move(trace)) {}

  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

 private:
  std::vector<TraceEntry> trace_;
};

}  // namespace shg
