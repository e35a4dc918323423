#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pvalkit/version.hpp"

namespace pvalkit::cli {

std::string fmt_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? std::string()
                                            : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& s, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                ": not a number: '" + s + "'");
  return v;
}

}  // namespace

CsvData read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);

  CsvData data;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (!have_header) {
      data.header = std::move(fields);
      data.columns.assign(data.header.size(), {});
      have_header = true;
      continue;
    }
    if (fields.size() != data.header.size())
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected " +
                                  std::to_string(data.header.size()) +
                                  " fields, got " +
                                  std::to_string(fields.size()));
    for (std::size_t c = 0; c < fields.size(); ++c)
      data.columns[c].push_back(parse_number(fields[c], line_no));
  }
  if (!have_header)
    throw std::invalid_argument("CSV file has no header row: " + path);
  return data;
}

std::vector<double> read_csv_column(const std::string& path) {
  CsvData data = read_csv(path);
  if (data.columns.empty() || data.columns[0].empty())
    throw std::invalid_argument("CSV file has no data rows: " + path);
  return std::move(data.columns[0]);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

nlohmann::json make_manifest(const std::string& subcommand,
                             const nlohmann::json& params,
                             std::optional<std::uint64_t> seed,
                             const std::vector<std::string>& outputs) {
  nlohmann::json m;
  m["tool"] = "pvalkit";
  m["version"] = pvalkit::version;
  m["subcommand"] = subcommand;
  m["parameters"] = params;
  if (seed) m["seed"] = *seed;
  if (!outputs.empty()) m["outputs"] = outputs;
  return m;
}

std::string curve_csv(const design::CurveTable& table,
                      const nlohmann::json& manifest) {
  std::string out;
  out += "# pvalkit " + std::string(pvalkit::version) + " curve table\n";
  out += "# kind=";
  switch (table.kind) {
    case design::CurveKind::power:
      out += "power alpha=" + fmt_num(table.alpha);
      break;
    case design::CurveKind::p_quantile:
      out += "p-quantile q=" + fmt_num(table.q);
      break;
    case design::CurveKind::p_mean:
      out += "p-mean";
      break;
  }
  out += " tails=" + design::to_string(table.tails) + "\n";
  out += "# manifest: " + manifest.dump() + "\n";

  out += "effect";
  for (double n : table.n_list) out += ",n=" + fmt_num(n);
  out += "\n";
  for (std::size_t j = 0; j < table.effect_grid.size(); ++j) {
    out += fmt_num(table.effect_grid[j]);
    for (std::size_t i = 0; i < table.n_list.size(); ++i)
      out += "," + fmt_num(table.values[i][j]);
    out += "\n";
  }
  return out;
}

std::string records_csv(const std::vector<sim::ReplicateRecord>& records,
                        const nlohmann::json& manifest) {
  std::string out;
  out += "# pvalkit " + std::string(pvalkit::version) + " replicate records\n";
  out += "# manifest: " + manifest.dump() + "\n";
  out += "rep,mean,sd,p,significant\n";
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    out += std::to_string(r) + "," + fmt_num(rec.mean) + "," +
           fmt_num(rec.sd) + "," + fmt_num(rec.p) + "," +
           (rec.significant ? "1" : "0") + "\n";
  }
  return out;
}

nlohmann::json rate_estimate_json(const sim::RateEstimate& est) {
  return {{"estimate", est.estimate},
          {"se", est.se},
          {"ci95_low", est.ci_low},
          {"ci95_high", est.ci_high},
          {"hits", est.hits},
          {"reps", est.reps}};
}

nlohmann::json filter_report_json(const sim::FilterReport& r) {
  nlohmann::json j;
  j["all_median_mean"] = r.all_median_mean;
  j["all_median_sd"] = r.all_median_sd;
  j["sig_median_mean"] = r.sig_median_mean;
  j["sig_median_sd"] = r.sig_median_sd;
  j["sig_count"] = r.sig_count;
  j["median_d_all"] = r.median_d_all;
  j["median_d_sig"] = r.median_d_sig;
  j["exaggeration_ratio"] = r.exaggeration_ratio;
  j["max_exaggeration"] = r.max_exaggeration;
  return j;
}

}  // namespace pvalkit::cli
