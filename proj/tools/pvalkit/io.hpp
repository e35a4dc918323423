#ifndef PVALKIT_TOOLS_IO_HPP
#define PVALKIT_TOOLS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvalkit/design.hpp"
#include "pvalkit/simulate.hpp"

namespace pvalkit::cli {

// Compact, deterministic number formatting for CSV cells.
std::string fmt_num(double v);

// CSV input: '#' lines and blank lines are skipped, the first remaining
// row is the header. Throws std::invalid_argument on malformed input.
struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
CsvData read_csv(const std::string& path);
std::vector<double> read_csv_column(const std::string& path);

// Writes to the given path, or to stdout when path is empty.
void write_text(const std::string& path, const std::string& text);

// Every run carries a manifest echoing the tool version, subcommand and
// full parameter set; reruns of an identical manifest produce bit-identical
// output (no timestamps, no environment lookups).
nlohmann::json make_manifest(const std::string& subcommand,
                             const nlohmann::json& params,
                             std::optional<std::uint64_t> seed,
                             const std::vector<std::string>& outputs);

// CurveTable as CSV: '#' metadata lines, then a header row
// "effect,n=3,...,n=40" and one row per effect value.
std::string curve_csv(const design::CurveTable& table,
                      const nlohmann::json& manifest);

// Per-replicate records as CSV: rep,mean,sd,p,significant.
std::string records_csv(const std::vector<sim::ReplicateRecord>& records,
                        const nlohmann::json& manifest);

nlohmann::json rate_estimate_json(const sim::RateEstimate& est);
nlohmann::json filter_report_json(const sim::FilterReport& report);

}  // namespace pvalkit::cli

#endif  // PVALKIT_TOOLS_IO_HPP
