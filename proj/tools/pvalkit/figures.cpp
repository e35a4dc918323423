#include "figures.hpp"

#include <filesystem>
#include <stdexcept>

#include "io.hpp"
#include "pvalkit/design.hpp"
#include "pvalkit/simulate.hpp"
#include "pvalkit/ttest.hpp"
#include "pvalkit/version.hpp"

namespace pvalkit::cli {

namespace {

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double v = lo + step * static_cast<double>(i);
    if (v > hi + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> default_n_list() { return arange(3.0, 40.0, 1.0); }
std::vector<double> default_effect_grid() { return arange(0.0, 4.0, 0.05); }

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

// Shared layout for the pseudo-data figures: the control column followed by
// one fitted treatment column per target P.
std::string pseudo_data_csv(const std::vector<double>& targets,
                            const nlohmann::json& manifest) {
  const auto& control = canonical_control();
  const TestSpec spec{Variant::two_sample_pooled, 0.0, Tails::one_greater};

  std::vector<PseudoDataFit> fits;
  fits.reserve(targets.size());
  for (double target : targets)
    fits.push_back(fit_pseudo_data(control, control.size(), target, spec));

  std::string out;
  out += "# pvalkit " + std::string(pvalkit::version) + " pseudo-data\n";
  out += "# one-tailed pooled t test, n=" + std::to_string(control.size()) +
         " per group; treatment columns are the control plus a fitted shift\n";
  out += "# shifts:";
  for (const auto& fit : fits) out += " " + fmt_num(fit.shift);
  out += "\n# achieved_p:";
  for (const auto& fit : fits) out += " " + fmt_num(fit.achieved_p);
  out += "\n";
  out += "# manifest: " + manifest.dump() + "\n";

  out += "control";
  for (double target : targets) out += ",p_" + fmt_num(target);
  out += "\n";
  for (std::size_t i = 0; i < control.size(); ++i) {
    out += fmt_num(control[i]);
    for (const auto& fit : fits) out += "," + fmt_num(fit.treatment[i]);
    out += "\n";
  }
  return out;
}

}  // namespace

const std::vector<double>& canonical_control() {
  static const std::vector<double> control{4.8, 5.2, 5.9, 6.1, 6.5};
  return control;
}

std::vector<std::string> reproduce_figure(int fig_id,
                                          const std::string& out_dir,
                                          std::uint64_t seed,
                                          unsigned threads) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;

  auto manifest_for = [&](const nlohmann::json& params,
                          std::vector<std::string> outputs) {
    return make_manifest("figures", params,
                         fig_id == 6 ? std::optional<std::uint64_t>(seed)
                                     : std::nullopt,
                         std::move(outputs));
  };

  switch (fig_id) {
    case 1: {
      const std::string path = join_path(out_dir, "fig1_pseudo_data.csv");
      const nlohmann::json params{{"fig", 1}, {"targets", {0.06, 0.04}}};
      write_text(path, pseudo_data_csv({0.06, 0.04},
                                       manifest_for(params, {path})));
      written.push_back(path);
      break;
    }
    case 2: {
      const std::string path = join_path(out_dir, "fig2_pseudo_data.csv");
      const std::vector<double> targets{0.05, 0.005, 0.0005, 0.0001};
      const nlohmann::json params{{"fig", 2}, {"targets", targets}};
      write_text(path, pseudo_data_csv(targets, manifest_for(params, {path})));
      written.push_back(path);
      break;
    }
    case 4: {
      for (double alpha : {0.05, 0.005}) {
        const std::string path = join_path(
            out_dir, "fig4_power_alpha_" + fmt_num(alpha) + ".csv");
        const nlohmann::json params{
            {"fig", 4}, {"alpha", alpha}, {"tails", "one"},
            {"n", "3..40"},  {"effect", "0..4 step 0.05"}};
        const auto table =
            design::power_curve(default_n_list(), default_effect_grid(),
                                alpha, design::DesignTails::one);
        write_text(path, curve_csv(table, manifest_for(params, {path})));
        written.push_back(path);
      }
      break;
    }
    case 5: {
      const struct {
        double q;
        const char* name;
      } panels[] = {{0.5, "fig5_p_median.csv"}, {0.9, "fig5_p_q90.csv"}};
      for (const auto& panel : panels) {
        const std::string path = join_path(out_dir, panel.name);
        const nlohmann::json params{{"fig", 5},
                                    {"quantile", panel.q},
                                    {"n", "3..40"},
                                    {"effect", "0..4 step 0.05"},
                                    {"reference_p", {0.05, 0.005}}};
        auto table = design::p_quantile_curve(panel.q, default_n_list(),
                                              default_effect_grid());
        std::string csv = curve_csv(table, manifest_for(params, {path}));
        // dashed reference lines drawn by plotting tools
        csv.insert(csv.find("# manifest:"),
                   "# reference_p=0.05,0.005\n");
        write_text(path, csv);
        written.push_back(path);
      }
      break;
    }
    case 6: {
      sim::SimConfig cfg;
      cfg.reps = 100;
      cfg.seed = seed;
      cfg.n_per_group = 5;
      cfg.population = {1.0, 1.0};
      cfg.null_mu = 0.0;
      cfg.alpha = 0.05;
      cfg.tails = Tails::one_greater;
      const auto run = sim::sim_significance_filter(cfg, threads);

      const std::string scatter = join_path(out_dir, "fig6_filter_scatter.csv");
      const std::string summary = join_path(out_dir, "fig6_filter_summary.json");
      const nlohmann::json params{{"fig", 6},     {"reps", cfg.reps},
                                  {"n", 5},       {"mu", 1.0},
                                  {"sigma", 1.0}, {"null_mu", 0.0},
                                  {"alpha", 0.05}, {"tails", "one-greater"}};
      const auto manifest = manifest_for(params, {scatter, summary});
      write_text(scatter, records_csv(run.records, manifest));
      nlohmann::json report = filter_report_json(run.report);
      report["manifest"] = manifest;
      write_text(summary, report.dump(2) + "\n");
      written.push_back(scatter);
      written.push_back(summary);
      break;
    }
    case 3:
      throw std::invalid_argument(
          "figure 3 is the descriptor table; run `pvalkit describe --table`");
    default:
      throw std::invalid_argument("unknown figure id " +
                                  std::to_string(fig_id) +
                                  " (available: 1, 2, 4, 5, 6)");
  }
  return written;
}

}  // namespace pvalkit::cli
