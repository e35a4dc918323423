#include <doctest.h>

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvalkit/dist.hpp"
#include "pvalkit/rng.hpp"
#include "pvalkit/ttest.hpp"
#include "testutil.hpp"

using namespace pvalkit;

namespace {

const TestSpec kOneGreater{Variant::two_sample_pooled, 0.0, Tails::one_greater};

std::vector<double> load_fixture_column(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open fixture ", path);
  std::vector<double> values;
  std::string line;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    values.push_back(std::stod(line));
  }
  return values;
}

}  // namespace

TEST_CASE("summarize hand-checkable values") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const SampleSummary sa = summarize(a);
  CHECK(sa.n == 3);
  CHECK(sa.mean == doctest::Approx(2.0));
  CHECK(sa.sd == doctest::Approx(1.0));

  const std::vector<double> b{5.0, 5.0, 5.0, 5.0};
  const SampleSummary sb = summarize(b);
  CHECK(sb.n == 4);
  CHECK(sb.mean == doctest::Approx(5.0));
  CHECK(sb.sd == 0.0);
}

TEST_CASE("summarize matches the fixture's recorded hand calculation") {
  const auto values =
      load_fixture_column(std::string(PVALKIT_TEST_DATA_DIR) +
                          "/summary10.csv");
  REQUIRE(values.size() == 10);
  const SampleSummary s = summarize(values);
  // expected values recorded in the fixture header (exact decimal
  // arithmetic: sum 109.6, ss 18.5440)
  CHECK_NEAR(s.mean, 10.96, 1e-12);
  CHECK_NEAR(s.sd, 1.4354248306492557, 1e-12);
}

TEST_CASE("summarize rejects bad input") {
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(summarize(std::vector<double>{1.0, INFINITY}),
                  std::invalid_argument);
}

TEST_CASE("identical groups give t = 0") {
  const SampleSummary g{5, 2.0, 1.0};
  const auto one = t_test(g, g, kOneGreater);
  CHECK(one.t == 0.0);
  CHECK(one.p == doctest::Approx(0.5));

  const auto two =
      t_test(g, g, {Variant::two_sample_pooled, 0.0, Tails::two});
  CHECK(two.p == doctest::Approx(1.0));
}

TEST_CASE("worked two-sample example") {
  const SampleSummary g1{5, 3.0, 2.0};
  const SampleSummary g2{5, 0.0, 2.0};
  const auto r = t_test(g1, g2, kOneGreater);
  // t = 3 / (2 sqrt(2/5))
  CHECK_NEAR(r.t, 3.0 / (2.0 * std::sqrt(0.4)), 1e-12);
  CHECK(r.df == doctest::Approx(8.0));
  REQUIRE(r.pooled_sd.has_value());
  CHECK(*r.pooled_sd == doctest::Approx(2.0));
  CHECK(r.cohen_d == doctest::Approx(1.5));
  // p frozen against a 1e7-replicate null simulation of the same statistic:
  // estimate 0.0225752, binomial 3*SE = 1.41e-4
  CHECK_NEAR(r.p, 0.0225752, 1.5e-4);

  // the explicit null offset absorbs the difference entirely
  const auto shifted =
      t_test(g1, g2, {Variant::two_sample_pooled, 3.0, Tails::one_greater});
  CHECK(shifted.t == 0.0);
  CHECK(shifted.p == doctest::Approx(0.5));
}

TEST_CASE("tail identities") {
  const SampleSummary g1{7, 4.1, 1.3};
  const SampleSummary g2{9, 3.2, 1.8};
  const auto greater =
      t_test(g1, g2, {Variant::two_sample_pooled, 0.0, Tails::one_greater});
  const auto less =
      t_test(g1, g2, {Variant::two_sample_pooled, 0.0, Tails::one_less});
  const auto two =
      t_test(g1, g2, {Variant::two_sample_pooled, 0.0, Tails::two});
  CHECK(greater.p + less.p == 1.0);  // exact by construction
  CHECK(two.p == doctest::Approx(2.0 * std::fmin(greater.p, less.p)));
}

TEST_CASE("location invariance and scale equivariance") {
  SplitMix64 rng(90901);
  for (int i = 0; i < 25; ++i) {
    std::vector<double> a, b;
    for (int j = 0; j < 6; ++j) a.push_back(10.0 * rng.next_unit());
    for (int j = 0; j < 8; ++j) b.push_back(10.0 * rng.next_unit());
    const auto base = t_test(summarize(a), summarize(b), kOneGreater);

    const double c = -3.7;
    std::vector<double> a_shift = a, b_shift = b;
    for (double& v : a_shift) v += c;
    for (double& v : b_shift) v += c;
    const auto shifted =
        t_test(summarize(a_shift), summarize(b_shift), kOneGreater);
    CHECK_NEAR(shifted.t, base.t, 1e-10);
    CHECK_NEAR(shifted.p, base.p, 1e-10);
    CHECK(shifted.df == base.df);

    const double k = 2.5;
    std::vector<double> a_scale = a, b_scale = b;
    for (double& v : a_scale) v *= k;
    for (double& v : b_scale) v *= k;
    const auto scaled =
        t_test(summarize(a_scale), summarize(b_scale), kOneGreater);
    CHECK_NEAR(scaled.t, base.t, 1e-10);
    CHECK_NEAR(scaled.p, base.p, 1e-10);
    CHECK_NEAR(scaled.mean_diff, k * base.mean_diff, 1e-9);
    CHECK_NEAR(*scaled.pooled_sd, k * *base.pooled_sd, 1e-9);
  }
}

TEST_CASE("pooled equals Welch for balanced equal-variance groups") {
  const SampleSummary g1{9, 2.5, 1.2};
  const SampleSummary g2{9, 1.1, 1.2};
  const auto pooled =
      t_test(g1, g2, {Variant::two_sample_pooled, 0.0, Tails::two});
  const auto welch =
      t_test(g1, g2, {Variant::two_sample_welch, 0.0, Tails::two});
  CHECK_NEAR(pooled.t, welch.t, 1e-12);
  CHECK_NEAR(pooled.df, welch.df, 1e-9);
  CHECK_NEAR(pooled.p, welch.p, 1e-12);
  CHECK_FALSE(welch.pooled_sd.has_value());
}

TEST_CASE("one-sample test") {
  const SampleSummary g{5, 1.2, 0.5};
  const auto r = t_test(g, {Variant::one_sample, 0.0, Tails::one_greater});
  CHECK_NEAR(r.t, 1.2 / (0.5 / std::sqrt(5.0)), 1e-12);
  CHECK(r.df == doctest::Approx(4.0));
  CHECK(r.cohen_d == doctest::Approx(2.4));
  CHECK_FALSE(r.pooled_sd.has_value());

  // null offset as the hypothesized mean
  const auto vs = t_test(g, {Variant::one_sample, 1.2, Tails::one_greater});
  CHECK(vs.t == 0.0);
  CHECK(vs.p == doctest::Approx(0.5));
}

TEST_CASE("degenerate scale handling") {
  const SampleSummary flat_a{4, 2.0, 0.0};
  const SampleSummary flat_b{4, 2.0, 0.0};
  CHECK_THROWS_AS(t_test(flat_a, flat_b, kOneGreater), std::domain_error);

  const SampleSummary flat_c{4, 3.0, 0.0};
  const auto r = t_test(flat_c, flat_b, kOneGreater);
  CHECK(r.degenerate_scale);
  CHECK(r.p == 0.0);  // limit in the rejection direction, never clamped
  const auto r_less =
      t_test(flat_c, flat_b, {Variant::two_sample_pooled, 0.0, Tails::one_less});
  CHECK(r_less.p == 1.0);
}

TEST_CASE("fit_pseudo_data identity at the control's own p") {
  const std::vector<double> control{4.8, 5.2, 5.9, 6.1, 6.5};
  const auto fit = fit_pseudo_data(control, 5, 0.5, kOneGreater);
  CHECK_NEAR(fit.shift, 0.0, 1e-9);
  CHECK_NEAR(fit.achieved_p, 0.5, 1e-9);
}

TEST_CASE("fit_pseudo_data reproduces the figure targets") {
  const std::vector<double> control{4.8, 5.2, 5.9, 6.1, 6.5};
  // left/right panels: one-tailed targets 0.06 and 0.04
  for (double target : {0.06, 0.04}) {
    const auto fit = fit_pseudo_data(control, 5, target, kOneGreater);
    CHECK_NEAR(fit.achieved_p, target, 1e-9);
    const auto back =
        t_test(summarize(fit.treatment), summarize(fit.control), kOneGreater);
    CHECK_NEAR(back.p, target, 1e-9);
  }

  // ladder of targets from one base control: shifts grow as targets shrink
  const std::vector<double> targets{0.05, 0.005, 0.0005, 0.0001};
  double prev_shift = -1.0;
  for (double target : targets) {
    const auto fit = fit_pseudo_data(control, 5, target, kOneGreater);
    CHECK_NEAR(fit.achieved_p, target, 1e-9);
    CHECK(fit.shift > prev_shift);
    prev_shift = fit.shift;
  }
}

TEST_CASE("fit_pseudo_data roundtrip property over random draws") {
  SplitMix64 rng(31337);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng.next_unit() * 5);
    std::vector<double> control;
    for (std::size_t j = 0; j < n; ++j)
      control.push_back(5.0 + 2.0 * rng.next_normal());
    const double target = 0.001 + 0.998 * rng.next_unit();
    const Tails tails = (i % 3 == 0)   ? Tails::two
                        : (i % 3 == 1) ? Tails::one_less
                                       : Tails::one_greater;
    const auto fit = fit_pseudo_data(
        control, n, target, {Variant::two_sample_pooled, 0.0, tails});
    CHECK_NEAR(fit.achieved_p, target, 1e-9);
    // shifting never touches the spread
    CHECK_NEAR(summarize(fit.treatment).sd, summarize(control).sd, 1e-9);
  }
}

TEST_CASE("fit_pseudo_data rejects degenerate input") {
  const std::vector<double> constant{2.0, 2.0, 2.0, 2.0, 2.0};
  CHECK_THROWS_AS(fit_pseudo_data(constant, 5, 0.06, kOneGreater),
                  std::domain_error);
  const std::vector<double> control{4.8, 5.2, 5.9, 6.1, 6.5};
  CHECK_THROWS_AS(fit_pseudo_data(control, 4, 0.06, kOneGreater),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_pseudo_data(control, 5, 0.0, kOneGreater),
                  std::domain_error);
  CHECK_THROWS_AS(fit_pseudo_data(control, 5, 1.0, kOneGreater),
                  std::domain_error);
}
