#include "pvalkit/evidence.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace pvalkit::evidence {

void DescriptorScale::validate() const {
  if (band_edges.empty())
    throw std::invalid_argument("descriptor scale needs at least one edge");
  if (labels.size() != band_edges.size() + 1)
    throw std::invalid_argument(
        "descriptor scale needs exactly one more label than edges");
  double prev = 1.0;
  for (double e : band_edges) {
    if (!(e > 0.0 && e < 1.0))
      throw std::invalid_argument("band edges must lie strictly in (0, 1)");
    if (!(e < prev))
      throw std::invalid_argument("band edges must be strictly decreasing");
    prev = e;
  }
  for (const std::string& label : labels)
    if (label.empty())
      throw std::invalid_argument("band labels must be nonempty");
}

DescriptorScale default_scale() {
  return {{0.1, 0.05, 0.01, 0.001, 0.0001},
          {"none", "trivial", "weak", "moderately strong", "strong",
           "very strong"}};
}

std::size_t band_index(double p, const DescriptorScale& scale) {
  scale.validate();
  if (std::isnan(p) || p < 0.0 || p > 1.0)
    throw std::domain_error("describe requires p in [0, 1]");
  std::size_t idx = 0;
  for (double e : scale.band_edges) {
    if (p >= e) break;  // lower-inclusive: p == edge stays in this band
    ++idx;
  }
  return idx;
}

const std::string& describe(double p, const DescriptorScale& scale) {
  return scale.labels[band_index(p, scale)];
}

DescriptorScale scale_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad scale JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc.contains("labels"))
    throw std::invalid_argument(
        "scale JSON must be an object with \"edges\" and \"labels\"");
  DescriptorScale scale;
  try {
    scale.band_edges = doc.at("edges").get<std::vector<double>>();
    scale.labels = doc.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad scale JSON: ") + e.what());
  }
  scale.validate();
  return scale;
}

std::string scale_to_json(const DescriptorScale& scale) {
  scale.validate();
  nlohmann::json doc;
  doc["edges"] = scale.band_edges;
  doc["labels"] = scale.labels;
  return doc.dump();
}

}  // namespace pvalkit::evidence
