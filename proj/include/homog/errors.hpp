#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homog {

// Lattice generation failed: unknown family or target density unattainable.
class generation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File I/O failed: unreadable path, bad magic, truncated payload.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Iterative solve failed its residual contract. Carries the final relative
// residual of every right-hand-side column.
class solver_error : public std::runtime_error {
public:
  solver_error(const std::string& msg, std::vector<double> residuals)
      : std::runtime_error(msg), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
  std::vector<double> residuals_;
};

}  // namespace homog
