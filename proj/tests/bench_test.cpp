#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "projpath/bench.hpp"
#include "test_support.hpp"

namespace projpath {
namespace {

TEST(Bench, GeneratorHitsExactCellCount) {
  for (const auto& [n, density] : std::vector<std::pair<int, double>>{
           {8, 24.0 / 56.0}, {8, 19.0 / 56.0}, {12, 0.1}, {16, 0.35}, {25, 0.6}}) {
    const long expect = std::lround(density * n * (n - 1));
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      const mixed_graph g = gen_random_mixed(n, density, 0.25, seed);
      EXPECT_EQ(g.ordered_size(), expect) << "n=" << n << " density=" << density;
      EXPECT_EQ(g.order(), n);
    }
  }
}

TEST(Bench, GeneratorDensityExtremes) {
  const mixed_graph full = gen_random_mixed(6, 1.0, 0.5, 3);
  EXPECT_EQ(full.ordered_size(), 30);
  for (vertex u = 1; u <= 6; ++u)
    for (vertex v = 1; v <= 6; ++v)
      if (u != v) EXPECT_TRUE(full.has(u, v));

  EXPECT_EQ(gen_random_mixed(9, 0.0, 0.5, 3).ordered_size(), 0);
}

TEST(Bench, GeneratorIsSeedDeterministic) {
  const mixed_graph a = gen_random_mixed(16, 0.3, 0.25, 42);
  const mixed_graph b = gen_random_mixed(16, 0.3, 0.25, 42);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, gen_random_mixed(16, 0.3, 0.25, 43));
}

TEST(Bench, GeneratorHonorsArcFractionExtremes) {
  // an even cell target with arc_fraction 0 gives a symmetric graph
  const mixed_graph sym = gen_random_mixed(8, 24.0 / 56.0, 0.0, 5);
  EXPECT_EQ(sym, sym.transposed());

  // a small target with arc_fraction 1 gives arcs only
  const mixed_graph anti = gen_random_mixed(8, 10.0 / 56.0, 1.0, 5);
  EXPECT_EQ(anti.ordered_size(), 10);
  for (vertex u = 1; u <= 8; ++u)
    for (vertex v = u + 1; v <= 8; ++v)
      EXPECT_NE(anti.classify(u, v), pair_kind::edge);
}

TEST(Bench, GeneratorRejectsBadArguments) {
  EXPECT_THROW(gen_random_mixed(0, 0.5, 0.5, 1), error);
  EXPECT_THROW(gen_random_mixed(4, 1.5, 0.5, 1), error);
  EXPECT_THROW(gen_random_mixed(4, -0.1, 0.5, 1), error);
}

bench_config untimed_config() {
  bench_config cfg;
  cfg.sizes = {8, 12};
  cfg.densities = {0.2, 0.5};
  cfg.arc_fraction = 0.25;
  cfg.seed = 7;
  cfg.repetitions = 3;
  cfg.measure_time = false;
  return cfg;
}

TEST(Bench, SweepWithoutTimingIsByteIdentical) {
  const bench_config cfg = untimed_config();
  const std::string first = report_to_csv(run_sweep(cfg));
  const std::string second = report_to_csv(run_sweep(cfg));
  EXPECT_EQ(first, second);
  EXPECT_NE(first.find(",0.000000,0.000000,"), std::string::npos)
      << "timing columns should be zero when timing is off";
}

TEST(Bench, SweepShapeAndAggregates) {
  const bench_report report = run_sweep(untimed_config());
  // 2 sizes x 2 densities x (3 repetitions + 1 mean row)
  ASSERT_EQ(report.rows.size(), 16u);
  for (std::size_t cell = 0; cell < 4; ++cell) {
    const bench_row* rows = &report.rows[cell * 4];
    double dist_sum = 0.0;
    int max_dist = 0;
    for (int rep = 0; rep < 3; ++rep) {
      EXPECT_EQ(rows[rep].rep, rep);
      EXPECT_EQ(rows[rep].n, rows[3].n);
      EXPECT_EQ(rows[rep].density, rows[3].density);
      dist_sum += rows[rep].mean_dist;
      max_dist = std::max(max_dist, rows[rep].max_dist);
    }
    EXPECT_EQ(rows[3].rep, -1);
    EXPECT_NEAR(rows[3].mean_dist, dist_sum / 3.0, 1e-12);
    EXPECT_EQ(rows[3].max_dist, max_dist);
    EXPECT_EQ(rows[3].diameter, max_dist);
  }
}

TEST(Bench, MeanLookupsEqualMeanDistance) {
  for (const bench_row& row : run_sweep(untimed_config()).rows)
    EXPECT_DOUBLE_EQ(row.mean_lookups, row.mean_dist)
        << "n=" << row.n << " rep=" << row.rep;
}

TEST(Bench, CsvLayout) {
  const std::string csv = report_to_csv(run_sweep(untimed_config()));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,density,rep,build_ms,oracle_ms,mean_dist,max_dist,diameter,"
            "mean_lookups");
  std::size_t lines = 0, means = 0, at = 0;
  while ((at = csv.find('\n', at)) != std::string::npos) ++lines, ++at;
  EXPECT_EQ(lines, 17u);  // header + 16 rows
  at = 0;
  while ((at = csv.find(",mean,", at)) != std::string::npos) ++means, ++at;
  EXPECT_EQ(means, 4u);  // one aggregate per (n, density) cell
}

TEST(Bench, SmokeSweepWithTiming) {
  bench_config cfg;
  cfg.sizes = {8};
  cfg.densities = {0.3};
  cfg.repetitions = 3;
  cfg.measure_time = true;
  const bench_report report = run_sweep(cfg);
  ASSERT_EQ(report.rows.size(), 4u);
  for (const bench_row& row : report.rows) {
    EXPECT_GE(row.build_ms, 0.0);
    EXPECT_GE(row.oracle_ms, 0.0);
  }
}

TEST(Bench, ParseConfigReadsEveryKey) {
  const bench_config cfg = parse_config(
      "# sweep description\n"
      "sizes = 16, 32\n"
      "densities = 0.1, 0.4   # two cells\n"
      "arc_fraction = 0.5\n"
      "seed = 12345\n"
      "\n"
      "repetitions = 4\n"
      "measure_time = false\n");
  EXPECT_EQ(cfg.sizes, (std::vector<int>{16, 32}));
  ASSERT_EQ(cfg.densities.size(), 2u);
  EXPECT_DOUBLE_EQ(cfg.densities[0], 0.1);
  EXPECT_DOUBLE_EQ(cfg.densities[1], 0.4);
  EXPECT_DOUBLE_EQ(cfg.arc_fraction, 0.5);
  EXPECT_EQ(cfg.seed, 12345u);
  EXPECT_EQ(cfg.repetitions, 4);
  EXPECT_FALSE(cfg.measure_time);
}

TEST(Bench, ParseConfigKeepsDefaults) {
  const bench_config cfg = parse_config("sizes = 10\n");
  EXPECT_EQ(cfg.sizes, (std::vector<int>{10}));
  ASSERT_EQ(cfg.densities.size(), 1u);
  EXPECT_DOUBLE_EQ(cfg.densities[0], 0.2);
  EXPECT_DOUBLE_EQ(cfg.arc_fraction, 0.25);
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.repetitions, 3);
  EXPECT_TRUE(cfg.measure_time);
}

TEST(Bench, ParseConfigRejectsBadInput) {
  const auto expect_bad = [](const std::string& text) {
    try {
      parse_config(text);
      FAIL() << "expected rejection of: " << text;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::bad_config) << text;
    }
  };
  expect_bad("volume = 11\n");           // unknown key
  expect_bad("sizes\n");                 // no '='
  expect_bad("sizes = x\n");             // bad integer
  expect_bad("sizes = 1\n");             // below minimum order
  expect_bad("densities = 0\n");         // outside (0, 1]
  expect_bad("densities = 1.5\n");       // outside (0, 1]
  expect_bad("densities = two\n");       // bad number
  expect_bad("arc_fraction = 2\n");      // outside [0, 1]
  expect_bad("repetitions = 2\n");       // below minimum
  expect_bad("seed = abc\n");            // bad integer
  expect_bad("measure_time = maybe\n");  // bad boolean
}

TEST(Bench, ConfigValidateGuardsInvariants) {
  bench_config cfg;
  cfg.sizes.clear();
  EXPECT_THROW(cfg.validate(), error);
  cfg = {};
  cfg.densities.clear();
  EXPECT_THROW(cfg.validate(), error);
  cfg = {};
  EXPECT_NO_THROW(cfg.validate());
}

}  // namespace
}  // namespace projpath
