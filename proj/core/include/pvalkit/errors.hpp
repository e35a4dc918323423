#ifndef PVALKIT_ERRORS_HPP
#define PVALKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvalkit {

// Thrown when an iterative routine (series, continued fraction, root bracket,
// quadrature) fails to converge. Precondition violations use std::domain_error
// or std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string routine, std::string what, double last_value,
                 long iterations)
      : std::runtime_error(routine + ": " + what),
        routine_(std::move(routine)),
        last_value_(last_value),
        iterations_(iterations) {}

  const std::string& routine() const noexcept { return routine_; }
  double last_value() const noexcept { return last_value_; }
  long iterations() const noexcept { return iterations_; }

 private:
  std::string routine_;
  double last_value_;
  long iterations_;
};

}  // namespace pvalkit

#endif  // PVALKIT_ERRORS_HPP
