#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdyn {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, duplicate symbols, invalid documents.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed, but the operation is not defined for it
// (e.g. a graph that is not strongly connected).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was hit before the computation finished.
class ResourceCapError : public Error {
 public:
  ResourceCapError(std::string cap, std::size_t limit)
      : Error("resource cap exceeded: " + cap + " (limit " +
              std::to_string(limit) + ")"),
        cap_(std::move(cap)),
        limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

// Power iteration ran out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::size_t iterations, double last_estimate)
      : Error("power iteration did not converge after " +
              std::to_string(iterations) + " iterations (last estimate " +
              std::to_string(last_estimate) + ")"),
        iterations_(iterations),
        last_estimate_(last_estimate) {}

  std::size_t iterations() const noexcept { return iterations_; }
  double last_estimate() const noexcept { return last_estimate_; }

 private:
  std::size_t iterations_;
  double last_estimate_;
};

}  // namespace symdyn
