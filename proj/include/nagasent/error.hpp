#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nagasent {

/// Bad input: malformed files, unknown labels, inconsistent arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed to produce a result (e.g. SMO did not converge).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public ComputeError {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : ComputeError(what), iterations_(iterations) {}

  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

}  // namespace nagasent
