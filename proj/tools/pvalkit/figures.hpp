#ifndef PVALKIT_TOOLS_FIGURES_HPP
#define PVALKIT_TOOLS_FIGURES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pvalkit::cli {

// The canonical 5-point control series used by the pseudo-data figures
// (also shipped as data/control5.csv). Any nonconstant control works; the
// figures fix one so reruns are reproducible.
const std::vector<double>& canonical_control();

// Regenerates the data tables behind figure ids 1, 2, 4, 5 and 6 into
// out_dir. Returns the list of files written. Throws std::invalid_argument
// for unknown ids (the descriptor-scale figure 3 is covered by
// `describe --table`).
std::vector<std::string> reproduce_figure(int fig_id,
                                          const std::string& out_dir,
                                          std::uint64_t seed,
                                          unsigned threads);

}  // namespace pvalkit::cli

#endif  // PVALKIT_TOOLS_FIGURES_HPP
