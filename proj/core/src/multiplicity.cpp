#include "pvalkit/multiplicity.hpp"

#include <cmath>
#include <stdexcept>

namespace pvalkit::multiplicity {

double bonferroni_threshold(double alpha_family, std::size_t k) {
  if (k == 0) throw std::domain_error("family size k must be at least 1");
  if (!(alpha_family >= 0.0 && alpha_family <= 1.0))
    throw std::domain_error("alpha_family must lie in [0, 1]");
  return alpha_family / static_cast<double>(k);
}

std::vector<double> bonferroni_adjust_p(std::span<const double> p_values,
                                        std::size_t k) {
  if (k == 0) throw std::domain_error("family size k must be at least 1");
  if (k < p_values.size())
    throw std::invalid_argument(
        "family size k cannot be smaller than the number of p-values");
  std::vector<double> adjusted;
  adjusted.reserve(p_values.size());
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("p-values must lie in [0, 1]");
    adjusted.push_back(std::fmin(1.0, static_cast<double>(k) * p));
  }
  return adjusted;
}

std::vector<double> bonferroni_adjust_p(std::span<const double> p_values) {
  if (p_values.empty())
    throw std::invalid_argument("no p-values to adjust");
  return bonferroni_adjust_p(p_values, p_values.size());
}

double fwer_analytic(double alpha_per_test, std::size_t k) {
  if (k == 0) throw std::domain_error("family size k must be at least 1");
  if (!(alpha_per_test >= 0.0 && alpha_per_test <= 1.0))
    throw std::domain_error("alpha_per_test must lie in [0, 1]");
  return 1.0 - std::pow(1.0 - alpha_per_test, static_cast<double>(k));
}

}  // namespace pvalkit::multiplicity
