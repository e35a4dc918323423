// pvalkit: command-line toolkit for exact t-test evidence, power analysis,
// expected-P curves, and seeded error-rate simulations. Subcommands emit
// JSON summaries or CSV tables; every run embeds a manifest so identical
// invocations reproduce identical bytes.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "figures.hpp"
#include "io.hpp"
#include "pvalkit/pvalkit.hpp"

namespace {

using nlohmann::json;
using namespace pvalkit;

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void emit_json(json doc, const std::string& out_path) {
  cli::write_text(out_path, doc.dump(2) + "\n");
}

json ttest_result_json(const TTestResult& r) {
  json j;
  j["t"] = r.t;
  j["df"] = r.df;
  j["p"] = r.p;
  j["tails"] = to_string(r.tails);
  j["mean_diff"] = r.mean_diff;
  if (r.pooled_sd)
    j["pooled_sd"] = *r.pooled_sd;
  else
    j["pooled_sd"] = nullptr;
  j["se"] = r.se;
  j["cohen_d"] = r.cohen_d;
  j["variant"] = to_string(r.variant);
  j["degenerate_scale"] = r.degenerate_scale;
  return j;
}

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double v = lo + step * static_cast<double>(i);
    if (v > hi + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

// ---------------------------------------------------------------- ttest
struct TTestArgs {
  std::string file_a, file_b, data_file, out;
  std::string tails = "one", variant;
  double delta = 0.0;
};

void run_ttest(const TTestArgs& a) {
  std::vector<double> g1, g2;
  bool two_groups = false;
  if (!a.data_file.empty()) {
    if (!a.file_a.empty() || !a.file_b.empty())
      throw std::invalid_argument("use either --data or --a/--b, not both");
    auto csv = cli::read_csv(a.data_file);
    if (csv.columns.empty())
      throw std::invalid_argument("no columns in " + a.data_file);
    g1 = csv.columns[0];
    if (csv.columns.size() >= 2) {
      g2 = csv.columns[1];
      two_groups = true;
    }
  } else {
    if (a.file_a.empty())
      throw std::invalid_argument("ttest needs --data or --a");
    g1 = cli::read_csv_column(a.file_a);
    if (!a.file_b.empty()) {
      g2 = cli::read_csv_column(a.file_b);
      two_groups = true;
    }
  }

  TestSpec spec;
  spec.tails = tails_from_string(a.tails);
  spec.null_delta = a.delta;
  if (a.variant.empty())
    spec.variant = two_groups ? Variant::two_sample_pooled : Variant::one_sample;
  else
    spec.variant = variant_from_string(a.variant);

  TTestResult result;
  if (two_groups)
    result = t_test(summarize(g1), summarize(g2), spec);
  else
    result = t_test(summarize(g1), spec);

  json params{{"tails", to_string(spec.tails)},
              {"variant", to_string(spec.variant)},
              {"delta", spec.null_delta}};
  if (!a.data_file.empty()) params["data"] = a.data_file;
  if (!a.file_a.empty()) params["a"] = a.file_a;
  if (!a.file_b.empty()) params["b"] = a.file_b;

  json doc = ttest_result_json(result);
  doc["manifest"] = cli::make_manifest("ttest", params, std::nullopt,
                                       a.out.empty() ? std::vector<std::string>{}
                                                     : std::vector<std::string>{a.out});
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- fitp
struct FitpArgs {
  std::string control_file, out;
  double target = 0.05;
  std::size_t n = 0;
  std::string tails = "one";
  std::string variant = "pooled";
  double delta = 0.0;
};

void run_fitp(const FitpArgs& a) {
  std::vector<double> control = a.control_file.empty()
                                    ? cli::canonical_control()
                                    : cli::read_csv_column(a.control_file);
  const std::size_t n = a.n > 0 ? a.n : control.size();

  TestSpec spec;
  spec.tails = tails_from_string(a.tails);
  spec.variant = variant_from_string(a.variant);
  spec.null_delta = a.delta;

  const PseudoDataFit fit = fit_pseudo_data(control, n, a.target, spec);

  json params{{"target_p", a.target},
              {"n", n},
              {"tails", to_string(spec.tails)},
              {"variant", to_string(spec.variant)},
              {"delta", a.delta}};
  if (!a.control_file.empty()) params["control"] = a.control_file;
  const auto manifest = cli::make_manifest(
      "fitp", params, std::nullopt,
      a.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{a.out});

  std::string csv;
  csv += "# pvalkit " + std::string(pvalkit::version) + " pseudo-data fit\n";
  csv += "# shift=" + cli::fmt_num(fit.shift) +
         " achieved_p=" + cli::fmt_num(fit.achieved_p) + "\n";
  csv += "# manifest: " + manifest.dump() + "\n";
  csv += "control,treatment\n";
  for (std::size_t i = 0; i < fit.control.size(); ++i)
    csv += cli::fmt_num(fit.control[i]) + "," + cli::fmt_num(fit.treatment[i]) +
           "\n";
  cli::write_text(a.out, csv);
}

// ---------------------------------------------------------------- power
struct PowerArgs {
  double effect = 0.0, n = 0.0, alpha = 0.05;
  std::string tails = "one", variant = "two-sample", out;
};

void run_power(const PowerArgs& a) {
  design::DesignQuery q;
  q.std_effect = a.effect;
  q.n_per_group = a.n;
  q.alpha = a.alpha;
  q.tails = design::design_tails_from_string(a.tails);
  q.variant = design::design_variant_from_string(a.variant);

  json doc;
  doc["power"] = design::power(q);
  doc["df"] = design::degrees_of_freedom(q.n_per_group, q.variant);
  doc["ncp"] = design::noncentrality(std::fabs(q.std_effect), q.n_per_group,
                                     q.variant);
  json params{{"effect", a.effect}, {"n", a.n},       {"alpha", a.alpha},
              {"tails", a.tails},   {"variant", a.variant}};
  doc["manifest"] = cli::make_manifest("power", params, std::nullopt, {});
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- nsolve
struct NsolveArgs {
  double effect = 0.0, alpha = 0.05, power = 0.8;
  std::string tails = "one", variant = "two-sample", out;
};

void run_nsolve(const NsolveArgs& a) {
  const auto tails = design::design_tails_from_string(a.tails);
  const auto variant = design::design_variant_from_string(a.variant);
  const double n = design::solve_n(a.effect, a.alpha, a.power, tails, variant);
  const long rounded =
      design::solve_n_rounded(a.effect, a.alpha, a.power, tails, variant);

  json doc;
  doc["n"] = n;
  doc["n_rounded"] = rounded;
  doc["power_at_n"] =
      design::power({a.effect, n, a.alpha, tails, variant});
  json params{{"effect", a.effect}, {"alpha", a.alpha}, {"power", a.power},
              {"tails", a.tails},   {"variant", a.variant}};
  doc["manifest"] = cli::make_manifest("nsolve", params, std::nullopt, {});
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- curves
struct CurvesArgs {
  double alpha = 0.05;
  double n_min = 3, n_max = 40, n_step = 1;
  double effect_min = 0, effect_max = 4, effect_step = 0.05;
  std::string tails = "one", out;
};

void run_curves(const CurvesArgs& a) {
  const auto table = design::power_curve(
      arange(a.n_min, a.n_max, a.n_step),
      arange(a.effect_min, a.effect_max, a.effect_step), a.alpha,
      design::design_tails_from_string(a.tails));
  json params{{"alpha", a.alpha},
              {"tails", a.tails},
              {"n", {a.n_min, a.n_max, a.n_step}},
              {"effect", {a.effect_min, a.effect_max, a.effect_step}}};
  const auto manifest = cli::make_manifest(
      "curves", params, std::nullopt,
      a.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{a.out});
  cli::write_text(a.out, cli::curve_csv(table, manifest));
}

// ---------------------------------------------------------------- epv
struct EpvArgs {
  double q = 0.5;
  bool mean = false;
  double n_min = 3, n_max = 40, n_step = 1;
  double effect_min = 0, effect_max = 4, effect_step = 0.05;
  std::string out;
};

void run_epv(const EpvArgs& a) {
  const auto n_list = arange(a.n_min, a.n_max, a.n_step);
  const auto effects = arange(a.effect_min, a.effect_max, a.effect_step);
  const auto table = a.mean ? design::p_mean_curve(n_list, effects)
                            : design::p_quantile_curve(a.q, n_list, effects);
  json params{{"kind", a.mean ? "mean" : "quantile"},
              {"n", {a.n_min, a.n_max, a.n_step}},
              {"effect", {a.effect_min, a.effect_max, a.effect_step}}};
  if (!a.mean) params["q"] = a.q;
  const auto manifest = cli::make_manifest(
      "epv", params, std::nullopt,
      a.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{a.out});
  cli::write_text(a.out, cli::curve_csv(table, manifest));
}

// ---------------------------------------------------------------- sims
struct SimCommonArgs {
  std::uint64_t reps = 1000000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
};

// One-row CSV rendering of a summary report (the csv format of the
// simulation subcommands; sim-filter's csv is the per-replicate table).
std::string summary_csv(const std::vector<std::string>& header,
                        const std::vector<std::string>& row,
                        const json& manifest) {
  std::string out = "# manifest: " + manifest.dump() + "\n";
  for (std::size_t i = 0; i < header.size(); ++i)
    out += header[i] + (i + 1 < header.size() ? "," : "\n");
  for (std::size_t i = 0; i < row.size(); ++i)
    out += row[i] + (i + 1 < row.size() ? "," : "\n");
  return out;
}

struct SimFilterArgs : SimCommonArgs {
  std::size_t n = 5;
  double mu = 1.0, sigma = 1.0, null_mu = 0.0, alpha = 0.05;
  std::string tails = "one";
  std::string records_path;
};

sim::SimConfig filter_config(const SimFilterArgs& a) {
  sim::SimConfig cfg;
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  cfg.n_per_group = a.n;
  cfg.population = {a.mu, a.sigma};
  cfg.null_mu = a.null_mu;
  cfg.alpha = a.alpha;
  cfg.tails = tails_from_string(a.tails);
  return cfg;
}

json sim_filter_params(const SimFilterArgs& a) {
  return {{"reps", a.reps},     {"n", a.n},
          {"mu", a.mu},         {"sigma", a.sigma},
          {"null_mu", a.null_mu}, {"alpha", a.alpha},
          {"tails", a.tails}};
}

void run_sim_filter(const SimFilterArgs& a) {
  const auto cfg = filter_config(a);
  const auto run =
      sim::sim_significance_filter(cfg, resolve_threads(a.threads));

  std::vector<std::string> outputs;
  if (!a.out.empty()) outputs.push_back(a.out);
  if (!a.records_path.empty()) outputs.push_back(a.records_path);
  const auto manifest =
      cli::make_manifest("sim-filter", sim_filter_params(a), a.seed, outputs);

  if (!a.records_path.empty())
    cli::write_text(a.records_path, cli::records_csv(run.records, manifest));

  if (a.format == "csv") {
    cli::write_text(a.out, cli::records_csv(run.records, manifest));
    return;
  }
  json doc = cli::filter_report_json(run.report);
  doc["true_effect"] = (a.mu - a.null_mu) / a.sigma;
  doc["manifest"] = manifest;
  emit_json(doc, a.out);
}

struct TypeMArgs : SimCommonArgs {
  std::size_t n = 5;
  double effect = 1.0, sigma = 1.0, null_mu = 0.0, alpha = 0.05;
  std::string tails = "one";
};

void run_typem(const TypeMArgs& a) {
  sim::SimConfig cfg;
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  cfg.n_per_group = a.n;
  cfg.population = {a.null_mu, a.sigma};  // mean is derived from the effect
  cfg.null_mu = a.null_mu;
  cfg.alpha = a.alpha;
  cfg.tails = tails_from_string(a.tails);
  const auto summary =
      sim::sim_type_m(cfg, a.effect, resolve_threads(a.threads));

  json doc;
  doc["reps"] = summary.reps;
  doc["sig_count"] = summary.sig_count;
  doc["true_effect"] = summary.true_effect;
  doc["empty_conditional"] = summary.sig_count == 0;
  doc["mean_ratio"] =
      summary.mean_ratio ? json(*summary.mean_ratio) : json(nullptr);
  doc["median_ratio"] =
      summary.median_ratio ? json(*summary.median_ratio) : json(nullptr);
  doc["sign_error_share"] = summary.sign_error_share
                                ? json(*summary.sign_error_share)
                                : json(nullptr);
  json params{{"reps", a.reps},   {"n", a.n},
              {"effect", a.effect}, {"sigma", a.sigma},
              {"null_mu", a.null_mu}, {"alpha", a.alpha},
              {"tails", a.tails}};
  const auto manifest = cli::make_manifest("typem", params, a.seed, {});
  if (a.format == "csv") {
    auto opt = [](const std::optional<double>& v) {
      return v ? cli::fmt_num(*v) : std::string("nan");
    };
    cli::write_text(
        a.out,
        summary_csv({"reps", "sig_count", "true_effect", "mean_ratio",
                     "median_ratio", "sign_error_share"},
                    {std::to_string(summary.reps),
                     std::to_string(summary.sig_count),
                     cli::fmt_num(summary.true_effect),
                     opt(summary.mean_ratio), opt(summary.median_ratio),
                     opt(summary.sign_error_share)},
                    manifest));
    return;
  }
  doc["manifest"] = manifest;
  emit_json(doc, a.out);
}

struct StoppingArgs : SimCommonArgs {
  std::size_t n1 = 5, n_add = 5;
  double alpha_stop = 0.05, continue_below = 0.1;
  double mu = 0.0, sigma = 1.0;
  std::string tails = "one";
};

void run_sim_stopping(const StoppingArgs& a) {
  sim::StoppingRule rule{a.n1, a.n_add, a.alpha_stop, a.continue_below};
  sim::SimConfig cfg;
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  cfg.n_per_group = a.n1;
  cfg.population = {a.mu, a.sigma};
  cfg.tails = tails_from_string(a.tails);
  cfg.alpha = a.alpha_stop;
  const auto est =
      sim::sim_optional_stopping(rule, cfg, resolve_threads(a.threads));

  json doc;
  doc["false_positive_rate"] = cli::rate_estimate_json(est);
  doc["rule"] = {{"n1", a.n1},
                 {"n_add", a.n_add},
                 {"alpha_stop", a.alpha_stop},
                 {"continue_below", a.continue_below}};
  json params{{"reps", a.reps},       {"n1", a.n1},
              {"n_add", a.n_add},     {"alpha_stop", a.alpha_stop},
              {"continue_below", a.continue_below},
              {"mu", a.mu},           {"sigma", a.sigma},
              {"tails", a.tails}};
  const auto manifest = cli::make_manifest("sim-stopping", params, a.seed, {});
  if (a.format == "csv") {
    cli::write_text(
        a.out,
        summary_csv({"estimate", "se", "ci95_low", "ci95_high", "hits",
                     "reps"},
                    {cli::fmt_num(est.estimate), cli::fmt_num(est.se),
                     cli::fmt_num(est.ci_low), cli::fmt_num(est.ci_high),
                     std::to_string(est.hits), std::to_string(est.reps)},
                    manifest));
    return;
  }
  doc["manifest"] = manifest;
  emit_json(doc, a.out);
}

struct FwerArgs : SimCommonArgs {
  std::size_t k = 20, n = 5;
  double alpha = 0.05, mu = 0.0, sigma = 1.0;
  std::string tails = "one";
};

void run_sim_fwer(const FwerArgs& a) {
  sim::SimConfig cfg;
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  cfg.n_per_group = a.n;
  cfg.population = {a.mu, a.sigma};
  cfg.null_mu = a.mu;  // global null by construction
  cfg.alpha = a.alpha;
  cfg.tails = tails_from_string(a.tails);
  const auto result =
      sim::sim_fwer(a.k, a.alpha, cfg, resolve_threads(a.threads));

  json doc;
  doc["simulated"] = cli::rate_estimate_json(result.simulated);
  doc["analytic"] = result.analytic;
  doc["k"] = result.k;
  doc["alpha_per_test"] = result.alpha;
  json params{{"reps", a.reps}, {"k", a.k},         {"alpha", a.alpha},
              {"n", a.n},       {"mu", a.mu},       {"sigma", a.sigma},
              {"tails", a.tails}};
  const auto manifest = cli::make_manifest("sim-fwer", params, a.seed, {});
  if (a.format == "csv") {
    cli::write_text(
        a.out,
        summary_csv({"simulated", "se", "ci95_low", "ci95_high", "analytic",
                     "k", "alpha_per_test"},
                    {cli::fmt_num(result.simulated.estimate),
                     cli::fmt_num(result.simulated.se),
                     cli::fmt_num(result.simulated.ci_low),
                     cli::fmt_num(result.simulated.ci_high),
                     cli::fmt_num(result.analytic), std::to_string(result.k),
                     cli::fmt_num(result.alpha)},
                    manifest));
    return;
  }
  doc["manifest"] = manifest;
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- adjust
struct AdjustArgs {
  double alpha = 0.05;
  std::size_t k = 0;
  std::vector<double> p_values;
  std::string out;
};

void run_adjust(const AdjustArgs& a) {
  const std::size_t k = a.k > 0 ? a.k : a.p_values.size();
  if (k == 0)
    throw std::invalid_argument("adjust needs --k or at least one --p");

  json doc;
  doc["k"] = k;
  doc["alpha_family"] = a.alpha;
  const double threshold = multiplicity::bonferroni_threshold(a.alpha, k);
  doc["threshold"] = threshold;
  doc["fwer_at_threshold"] = multiplicity::fwer_analytic(threshold, k);
  doc["fwer_unadjusted"] = multiplicity::fwer_analytic(a.alpha, k);
  if (!a.p_values.empty()) {
    doc["p"] = a.p_values;
    doc["adjusted_p"] = multiplicity::bonferroni_adjust_p(a.p_values, k);
  }
  json params{{"alpha", a.alpha}, {"k", k}, {"p", a.p_values}};
  doc["manifest"] = cli::make_manifest("adjust", params, std::nullopt, {});
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- describe
struct DescribeArgs {
  double p = -1.0;
  bool table = false;
  std::string scale_file, out;
};

void run_describe(const DescribeArgs& a) {
  evidence::DescriptorScale scale = evidence::default_scale();
  if (!a.scale_file.empty()) {
    std::ifstream in(a.scale_file);
    if (!in) throw std::invalid_argument("cannot open " + a.scale_file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    scale = evidence::scale_from_json(text);
  }

  if (a.table) {
    const auto manifest = cli::make_manifest(
        "describe", {{"table", true}, {"scale", a.scale_file}}, std::nullopt,
        a.out.empty() ? std::vector<std::string>{} : std::vector<std::string>{a.out});
    std::string csv;
    csv += "# pvalkit " + std::string(pvalkit::version) +
           " evidential descriptor scale\n";
    csv += "# manifest: " + manifest.dump() + "\n";
    csv += "p_low,p_high,label\n";
    double upper = 1.0;
    for (std::size_t i = 0; i < scale.labels.size(); ++i) {
      const double lower =
          i < scale.band_edges.size() ? scale.band_edges[i] : 0.0;
      csv += cli::fmt_num(lower) + "," + cli::fmt_num(upper) + "," +
             scale.labels[i] + "\n";
      upper = lower;
    }
    cli::write_text(a.out, csv);
    return;
  }

  if (a.p < 0.0)
    throw std::invalid_argument("describe needs --p or --table");
  json doc;
  doc["p"] = a.p;
  doc["band_index"] = evidence::band_index(a.p, scale);
  doc["label"] = evidence::describe(a.p, scale);
  json params{{"p", a.p}, {"scale", a.scale_file}};
  doc["manifest"] = cli::make_manifest("describe", params, std::nullopt, {});
  emit_json(doc, a.out);
}

// --------------------------------------------------------------- post-hoc
struct PostHocArgs {
  double p = 0.0, n = 0.0, alpha = 0.05;
  std::string tails = "one", variant = "two-sample", out;
};

void run_posthoc(const PostHocArgs& a) {
  const auto result = design::post_hoc_power(
      a.p, a.n, a.alpha, design::design_tails_from_string(a.tails),
      design::design_variant_from_string(a.variant));
  std::cerr << "warning: " << result.warning << "\n";
  json doc;
  doc["post_hoc_power"] = result.value;
  doc["observed_effect"] = result.observed_effect;
  doc["warning"] = result.warning;
  json params{{"p", a.p},         {"n", a.n},
              {"alpha", a.alpha}, {"tails", a.tails},
              {"variant", a.variant}};
  doc["manifest"] = cli::make_manifest("posthoc-power", params, std::nullopt, {});
  emit_json(doc, a.out);
}

// ---------------------------------------------------------------- figures
struct FiguresArgs {
  int fig = 0;
  std::string out_dir = ".";
  std::uint64_t seed = 42;
  unsigned threads = 0;
};

void run_figures(const FiguresArgs& a) {
  const auto written = cli::reproduce_figure(a.fig, a.out_dir, a.seed,
                                             resolve_threads(a.threads));
  json params{{"fig", a.fig}, {"out_dir", a.out_dir}};
  json doc;
  doc["manifest"] = cli::make_manifest("figures", params, a.seed, written);
  emit_json(doc, "");
}

void add_sim_common(CLI::App* sub, SimCommonArgs& a) {
  sub->add_option("--reps", a.reps, "number of replicates")
      ->capture_default_str();
  sub->add_option("--seed", a.seed, "master seed")->capture_default_str();
  sub->add_option("--threads", a.threads,
                  "worker threads (0 = all cores; results are identical "
                  "for any value)")
      ->capture_default_str();
  sub->add_option("--out", a.out, "write output to a file instead of stdout");
  sub->add_option("--format", a.format, "json summary or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statistical evidence and error-rate toolkit"};
  app.set_version_flag("--version", std::string(pvalkit::version));
  app.require_subcommand(1);

  TTestArgs ttest_args;
  auto* c_ttest = app.add_subcommand("ttest", "t test from CSV data");
  c_ttest->add_option("--data", ttest_args.data_file,
                      "CSV with one column per group");
  c_ttest->add_option("--a", ttest_args.file_a, "CSV for group 1");
  c_ttest->add_option("--b", ttest_args.file_b, "CSV for group 2");
  c_ttest->add_option("--tails", ttest_args.tails,
                      "one|greater|less|two")->capture_default_str();
  c_ttest->add_option("--variant", ttest_args.variant,
                      "pooled|welch|one-sample (default: inferred)");
  c_ttest->add_option("--delta", ttest_args.delta,
                      "null difference (two-sample) or null mean (one-sample)")
      ->capture_default_str();
  c_ttest->add_option("--out", ttest_args.out, "output file");
  c_ttest->callback([&] { run_ttest(ttest_args); });

  FitpArgs fitp_args;
  auto* c_fitp = app.add_subcommand(
      "fitp", "construct pseudo-data hitting an exact target P");
  c_fitp->add_option("--control", fitp_args.control_file,
                     "control CSV (default: built-in 5-point control)");
  c_fitp->add_option("--target", fitp_args.target, "target P-value")
      ->required();
  c_fitp->add_option("--n", fitp_args.n,
                     "per-group size (default: control length)");
  c_fitp->add_option("--tails", fitp_args.tails, "one|greater|less|two")
      ->capture_default_str();
  c_fitp->add_option("--variant", fitp_args.variant, "pooled|welch")
      ->capture_default_str();
  c_fitp->add_option("--delta", fitp_args.delta, "null difference")
      ->capture_default_str();
  c_fitp->add_option("--out", fitp_args.out, "output file");
  c_fitp->callback([&] { run_fitp(fitp_args); });

  PowerArgs power_args;
  auto* c_power = app.add_subcommand("power", "exact power of a t test");
  c_power->add_option("--effect", power_args.effect,
                      "standardized effect delta/sigma")->required();
  c_power->add_option("--n", power_args.n, "per-group sample size (real)")
      ->required();
  c_power->add_option("--alpha", power_args.alpha, "significance level")
      ->capture_default_str();
  c_power->add_option("--tails", power_args.tails, "one|two")
      ->capture_default_str();
  c_power->add_option("--variant", power_args.variant,
                      "two-sample|one-sample")->capture_default_str();
  c_power->add_option("--out", power_args.out, "output file");
  c_power->callback([&] { run_power(power_args); });

  NsolveArgs nsolve_args;
  auto* c_nsolve =
      app.add_subcommand("nsolve", "continuous sample size for target power");
  c_nsolve->add_option("--effect", nsolve_args.effect,
                       "standardized effect delta/sigma")->required();
  c_nsolve->add_option("--alpha", nsolve_args.alpha, "significance level")
      ->capture_default_str();
  c_nsolve->add_option("--power", nsolve_args.power, "target power")
      ->capture_default_str();
  c_nsolve->add_option("--tails", nsolve_args.tails, "one|two")
      ->capture_default_str();
  c_nsolve->add_option("--variant", nsolve_args.variant,
                       "two-sample|one-sample")->capture_default_str();
  c_nsolve->add_option("--out", nsolve_args.out, "output file");
  c_nsolve->callback([&] { run_nsolve(nsolve_args); });

  CurvesArgs curves_args;
  auto* c_curves = app.add_subcommand("curves", "power curve table as CSV");
  c_curves->add_option("--alpha", curves_args.alpha, "significance level")
      ->capture_default_str();
  c_curves->add_option("--tails", curves_args.tails, "one|two")
      ->capture_default_str();
  c_curves->add_option("--n-min", curves_args.n_min, "")->capture_default_str();
  c_curves->add_option("--n-max", curves_args.n_max, "")->capture_default_str();
  c_curves->add_option("--n-step", curves_args.n_step, "")
      ->capture_default_str();
  c_curves->add_option("--effect-min", curves_args.effect_min, "")
      ->capture_default_str();
  c_curves->add_option("--effect-max", curves_args.effect_max, "")
      ->capture_default_str();
  c_curves->add_option("--effect-step", curves_args.effect_step, "")
      ->capture_default_str();
  c_curves->add_option("--out", curves_args.out, "output file");
  c_curves->callback([&] { run_curves(curves_args); });

  EpvArgs epv_args;
  auto* c_epv =
      app.add_subcommand("epv", "expected P-value curve table as CSV");
  c_epv->add_option("--q", epv_args.q,
                    "quantile of the P distribution (0.5 = median)")
      ->capture_default_str();
  c_epv->add_flag("--mean", epv_args.mean,
                  "mean of the P distribution instead of a quantile");
  c_epv->add_option("--n-min", epv_args.n_min, "")->capture_default_str();
  c_epv->add_option("--n-max", epv_args.n_max, "")->capture_default_str();
  c_epv->add_option("--n-step", epv_args.n_step, "")->capture_default_str();
  c_epv->add_option("--effect-min", epv_args.effect_min, "")
      ->capture_default_str();
  c_epv->add_option("--effect-max", epv_args.effect_max, "")
      ->capture_default_str();
  c_epv->add_option("--effect-step", epv_args.effect_step, "")
      ->capture_default_str();
  c_epv->add_option("--out", epv_args.out, "output file");
  c_epv->callback([&] { run_epv(epv_args); });

  SimFilterArgs filter_args;
  auto* c_filter = app.add_subcommand(
      "sim-filter", "significance-filter simulation (one-sample t)");
  add_sim_common(c_filter, filter_args);
  c_filter->add_option("--n", filter_args.n, "sample size per replicate")
      ->capture_default_str();
  c_filter->add_option("--mu", filter_args.mu, "true population mean")
      ->capture_default_str();
  c_filter->add_option("--sigma", filter_args.sigma, "true population sd")
      ->capture_default_str();
  c_filter->add_option("--null-mu", filter_args.null_mu, "tested null mean")
      ->capture_default_str();
  c_filter->add_option("--alpha", filter_args.alpha, "significance threshold")
      ->capture_default_str();
  c_filter->add_option("--tails", filter_args.tails, "one|greater|less|two")
      ->capture_default_str();
  c_filter->add_option("--records", filter_args.records_path,
                       "also write per-replicate CSV records here");
  c_filter->callback([&] { run_sim_filter(filter_args); });

  TypeMArgs typem_args;
  auto* c_typem = app.add_subcommand(
      "typem", "magnitude-exaggeration summary conditional on significance");
  add_sim_common(c_typem, typem_args);
  c_typem->add_option("--effect", typem_args.effect,
                      "true standardized effect delta/sigma")
      ->capture_default_str();
  c_typem->add_option("--n", typem_args.n, "sample size per replicate")
      ->capture_default_str();
  c_typem->add_option("--sigma", typem_args.sigma, "population sd")
      ->capture_default_str();
  c_typem->add_option("--null-mu", typem_args.null_mu, "tested null mean")
      ->capture_default_str();
  c_typem->add_option("--alpha", typem_args.alpha, "significance threshold")
      ->capture_default_str();
  c_typem->add_option("--tails", typem_args.tails, "one|greater|less|two")
      ->capture_default_str();
  c_typem->callback([&] { run_typem(typem_args); });

  StoppingArgs stopping_args;
  auto* c_stopping = app.add_subcommand(
      "sim-stopping", "two-stage optional stopping under a true null");
  add_sim_common(c_stopping, stopping_args);
  c_stopping->add_option("--n1", stopping_args.n1, "stage-1 size per group")
      ->capture_default_str();
  c_stopping->add_option("--n-add", stopping_args.n_add,
                         "stage-2 additional per group")
      ->capture_default_str();
  c_stopping->add_option("--alpha-stop", stopping_args.alpha_stop,
                         "critical value at each analysis")
      ->capture_default_str();
  c_stopping->add_option("--continue-below", stopping_args.continue_below,
                         "continue when alpha_stop < p < this")
      ->capture_default_str();
  c_stopping->add_option("--mu", stopping_args.mu, "population mean")
      ->capture_default_str();
  c_stopping->add_option("--sigma", stopping_args.sigma, "population sd")
      ->capture_default_str();
  c_stopping->add_option("--tails", stopping_args.tails,
                         "one|greater|less|two")
      ->capture_default_str();
  c_stopping->callback([&] { run_sim_stopping(stopping_args); });

  FwerArgs fwer_args;
  auto* c_fwer = app.add_subcommand(
      "sim-fwer", "family-wise error simulation under the global null");
  add_sim_common(c_fwer, fwer_args);
  c_fwer->add_option("--k", fwer_args.k, "number of independent tests")
      ->capture_default_str();
  c_fwer->add_option("--alpha", fwer_args.alpha, "per-test threshold")
      ->capture_default_str();
  c_fwer->add_option("--n", fwer_args.n, "sample size per test")
      ->capture_default_str();
  c_fwer->add_option("--mu", fwer_args.mu, "population mean (= tested null)")
      ->capture_default_str();
  c_fwer->add_option("--sigma", fwer_args.sigma, "population sd")
      ->capture_default_str();
  c_fwer->add_option("--tails", fwer_args.tails, "one|greater|less|two")
      ->capture_default_str();
  c_fwer->callback([&] { run_sim_fwer(fwer_args); });

  AdjustArgs adjust_args;
  auto* c_adjust = app.add_subcommand(
      "adjust", "Bonferroni threshold and adjusted p-values");
  c_adjust->add_option("--alpha", adjust_args.alpha, "family-wise alpha")
      ->capture_default_str();
  c_adjust->add_option("--k", adjust_args.k,
                       "family size (default: number of --p values)");
  c_adjust->add_option("--p", adjust_args.p_values,
                       "raw p-values (repeatable)");
  c_adjust->add_option("--out", adjust_args.out, "output file");
  c_adjust->callback([&] { run_adjust(adjust_args); });

  DescribeArgs describe_args;
  auto* c_describe = app.add_subcommand(
      "describe", "map a P-value onto the evidential descriptor scale");
  c_describe->add_option("--p", describe_args.p, "P-value to describe");
  c_describe->add_flag("--table", describe_args.table,
                       "print the full descriptor scale as CSV");
  c_describe->add_option("--scale", describe_args.scale_file,
                         "JSON scale config {\"edges\":[],\"labels\":[]}");
  c_describe->add_option("--out", describe_args.out, "output file");
  c_describe->callback([&] { run_describe(describe_args); });

  PostHocArgs posthoc_args;
  auto* c_posthoc = app.add_subcommand(
      "posthoc-power",
      "diagnostic: power at the effect implied by an observed P "
      "(emits a warning; not for reinterpreting results)");
  c_posthoc->add_option("--p", posthoc_args.p, "observed P-value")->required();
  c_posthoc->add_option("--n", posthoc_args.n, "per-group sample size")
      ->required();
  c_posthoc->add_option("--alpha", posthoc_args.alpha, "significance level")
      ->capture_default_str();
  c_posthoc->add_option("--tails", posthoc_args.tails, "one|two")
      ->capture_default_str();
  c_posthoc->add_option("--variant", posthoc_args.variant,
                        "two-sample|one-sample")->capture_default_str();
  c_posthoc->add_option("--out", posthoc_args.out, "output file");
  c_posthoc->callback([&] { run_posthoc(posthoc_args); });

  FiguresArgs figures_args;
  auto* c_figures = app.add_subcommand(
      "figures", "regenerate the data tables behind figures 1, 2, 4, 5, 6");
  c_figures->add_option("fig", figures_args.fig, "figure id")->required();
  c_figures->add_option("--out-dir", figures_args.out_dir,
                        "output directory")->capture_default_str();
  c_figures->add_option("--seed", figures_args.seed, "seed for figure 6")
      ->capture_default_str();
  c_figures->add_option("--threads", figures_args.threads,
                        "worker threads (0 = all cores)")
      ->capture_default_str();
  c_figures->callback([&] { run_figures(figures_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pvalkit::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
