#ifndef PVALKIT_MULTIPLICITY_HPP
#define PVALKIT_MULTIPLICITY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace pvalkit::multiplicity {

// A caller-defined family of tests. Which experiments form a family is a
// judgement call the caller makes; nothing here tries to infer it.
struct Family {
  std::size_t k = 1;
  double alpha_family = 0.05;
  std::vector<double> p_values;  // optional; may be empty
};

// Per-test significance threshold alpha_family / k.
double bonferroni_threshold(double alpha_family, std::size_t k);

// min(1, k * p) for each p; order-preserving. The family size defaults to
// the number of supplied p-values but can be larger when only a subset of
// the family's results is being adjusted.
std::vector<double> bonferroni_adjust_p(std::span<const double> p_values,
                                        std::size_t k);
std::vector<double> bonferroni_adjust_p(std::span<const double> p_values);

// Family-wise false positive rate of k independent tests at alpha each:
// 1 - (1 - alpha)^k.
double fwer_analytic(double alpha_per_test, std::size_t k);

}  // namespace pvalkit::multiplicity

#endif  // PVALKIT_MULTIPLICITY_HPP
