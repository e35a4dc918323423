#ifndef PVALKIT_EVIDENCE_HPP
#define PVALKIT_EVIDENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pvalkit::evidence {

// A banded descriptor scale for P-values. band_edges are strictly
// decreasing probabilities in (0, 1); labels run weakest-first and there is
// one more label than edges. Bands are half-open and lower-inclusive: a
// P-value sitting exactly on an edge belongs to the band whose lower bound
// is that edge.
struct DescriptorScale {
  std::vector<double> band_edges;
  std::vector<std::string> labels;

  void validate() const;  // throws std::invalid_argument
};

// The shipped default: geometric decade-style edges
// {0.1, 0.05, 0.01, 0.001, 0.0001} with labels from "none" up to
// "very strong". The wording of most labels is a presentation choice and
// fully overridable; only the placements of "trivial" (covering 0.05) and
// "moderately strong" (covering 0.002) are load-bearing and pinned by
// tests.
DescriptorScale default_scale();

// Index of the band containing p, 0 = weakest. Monotone: smaller p never
// maps to a weaker band.
std::size_t band_index(double p, const DescriptorScale& scale);

const std::string& describe(double p, const DescriptorScale& scale);

// JSON config:  {"edges": [...], "labels": [...]}
DescriptorScale scale_from_json(const std::string& json_text);
std::string scale_to_json(const DescriptorScale& scale);

}  // namespace pvalkit::evidence

#endif  // PVALKIT_EVIDENCE_HPP
