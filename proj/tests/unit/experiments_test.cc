#include "steergp/experiments.h"

#include <cmath>
#include <limits>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "steergp/config.h"

namespace steergp {
namespace {

RunConfig Default() {
  return load_run_config(std::string(STEERGP_CONFIG_DIR) + "/default.json");
}

SweepSpec SmallSweep() {
  SweepSpec s;
  s.base = Default().network;
  s.widths = {4, 16};
  s.draws = 30;
  s.seeds = {1, 2};
  s.layer = 1;
  return s;
}

TEST(Sweep, RowLayoutAndAnalyticColumn) {
  const SweepSpec spec = SmallSweep();
  const SweepResult r = converge_sweep(spec);
  const std::size_t bins = spec.base.grid.size();
  ASSERT_EQ(r.rows.size(), spec.widths.size() * spec.seeds.size() * bins);
  EXPECT_EQ(r.rows[0].width, 4u);
  EXPECT_EQ(r.rows[bins].seed, 2u);
  for (const ResultRow& row : r.rows) {
    EXPECT_DOUBLE_EQ(row.analytic, 6.0);
    EXPECT_EQ(row.depth, 1u);
    EXPECT_EQ(row.mode, 0);
    EXPECT_NEAR(row.rel_err, std::abs(row.empirical - 6.0) / 6.0, 1e-15);
  }
  EXPECT_EQ(median_rel_err(spec, r.rows).size(), 2u);
}

TEST(Sweep, SingleCellIsDeterministic) {
  SweepSpec spec = SmallSweep();
  spec.widths = {3};
  spec.seeds = {5};
  const SweepResult a = converge_sweep(spec);
  const SweepResult b = converge_sweep(spec);
  EXPECT_EQ(rows_to_csv(a.rows), rows_to_csv(b.rows));
  ASSERT_EQ(a.structure.size(), 1u);
  EXPECT_EQ(a.structure[0].replicates, 1u);
}

TEST(Sweep, BadLayerThrows) {
  SweepSpec spec = SmallSweep();
  spec.layer = 2;
  EXPECT_ANY_THROW(converge_sweep(spec));
}

TEST(Sweep, CsvHeader) {
  const std::string csv = rows_to_csv({});
  EXPECT_EQ(csv, "L,width,draws,mode,bin,analytic,empirical,std_err,rel_err,seed\n");
}

TEST(Suite, DefaultConfigPasses) {
  const RunConfig run = Default();
  const SuiteReport r = equivariance_suite(run.network, 1, suite_options(run));
  for (const SuiteItem& i : r.items) EXPECT_TRUE(i.pass) << i.name << " " << i.max_dev;
  EXPECT_EQ(r.items.size(), 7u);
}

TEST(Suite, FaultInjectionFailsOnlyTheConstraint) {
  const RunConfig run = Default();
  SuiteOptions o = suite_options(run);
  o.inject_two_mode_filter = true;
  const SuiteReport r = equivariance_suite(run.network, 1, o);
  EXPECT_FALSE(r.pass());
  for (const SuiteItem& i : r.items) {
    EXPECT_EQ(i.pass, i.name != "kernel_constraint") << i.name;
  }
}

TEST(Suite, TrivialGroupElementsGiveExactZero) {
  const RunConfig run = Default();
  SuiteOptions o = suite_options(run);
  o.thetas = {0.0};
  o.translation = {0.0, 0.0};
  const SuiteReport r = equivariance_suite(run.network, 2, o);
  EXPECT_EQ(r.item("rotation_equivariance").max_dev, 0.0);
  EXPECT_EQ(r.item("translation_equivariance").max_dev, 0.0);
}

TEST(Suite, ShiftedFilterModes) {
  RunConfig run = Default();
  run.network.filter_modes = {2};
  const SuiteReport r = equivariance_suite(run.network, 3, suite_options(run));
  EXPECT_TRUE(r.pass());
}

TEST(Emit, SummaryJsonIsSortedAndNullRuntime) {
  const std::string s = summary_json("check", true, 1e-13, nullptr);
  const auto j = nlohmann::json::parse(s);
  EXPECT_TRUE(j["runtime_seconds"].is_null());
  EXPECT_LT(s.find("max_dev"), s.find("pass"));
  EXPECT_LT(s.find("pass"), s.find("runtime_seconds"));
  const double t = 1.5;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(summary_json("x", false, 0, &t))["runtime_seconds"], 1.5);
}

TEST(Emit, FormatDoubleRoundTrips) {
  for (double v : {0.1, 6.0, 1296.0, 1e-300, -2.5e17, 1.0 / 3.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(6.0), "6");
}

TEST(Emit, SuiteCsv) {
  SuiteReport r;
  r.items.push_back({"a", 0.5, 1.0, true});
  EXPECT_EQ(suite_to_csv(r), "item,pass,max_dev,tolerance\na,true,0.5,1\n");
}

}  // namespace
}  // namespace steergp
