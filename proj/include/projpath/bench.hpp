// Measurement harness: seeded random mixed-graph generation, a density/size
// sweep over refined builds with a plain traversal as baseline, and a stable
// CSV report. Timing can be disabled so that reports are byte-identical
// across runs (the counted columns never vary for a fixed seed).
#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projpath/graph.hpp"
#include "projpath/graph_io.hpp"
#include "projpath/oracle.hpp"
#include "projpath/path_query.hpp"
#include "projpath/refined.hpp"

namespace projpath {

struct bench_config {
  std::vector<int> sizes{64};
  std::vector<double> densities{0.2};
  double arc_fraction = 0.25;
  std::uint64_t seed = 1;
  int repetitions = 3;
  bool measure_time = true;

  void validate() const {
    if (sizes.empty())
      throw error(errc::bad_config, "bench: sizes must be non-empty");
    for (int n : sizes)
      if (n < 2) throw error(errc::bad_config, "bench: sizes must be >= 2");
    if (densities.empty())
      throw error(errc::bad_config, "bench: densities must be non-empty");
    for (double d : densities)
      if (!(d > 0.0) || d > 1.0)
        throw error(errc::bad_config, "bench: densities must lie in (0, 1]");
    if (arc_fraction < 0.0 || arc_fraction > 1.0)
      throw error(errc::bad_config, "bench: arc_fraction must lie in [0, 1]");
    if (repetitions < 3)
      throw error(errc::bad_config, "bench: repetitions must be >= 3");
  }
};

/// One measured repetition (rep >= 0) or a per-cell aggregate (rep == -1).
struct bench_row {
  int n = 0;
  double density = 0.0;
  int rep = 0;  // -1 marks the mean row
  double build_ms = 0.0;
  double oracle_ms = 0.0;
  double mean_dist = 0.0;
  int max_dist = 0;
  int diameter = 0;
  double mean_lookups = 0.0;
};

struct bench_report {
  bench_config config;
  std::vector<bench_row> rows;
};

namespace detail {

// splitmix64; derives independent per-cell generator seeds from the config
// seed so the sweep is insensitive to cell ordering.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t cell_seed(std::uint64_t seed, int n, double density,
                               int rep) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ static_cast<std::uint64_t>(std::llround(density * 1e9)));
  return mix64(h ^ static_cast<std::uint64_t>(rep + 1));
}

// Raw engine draws only (no distribution adaptors), so sequences are pinned
// by the mt19937_64 specification alone.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline bool draw_bernoulli(std::mt19937_64& rng, double p) {
  return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

}  // namespace detail

/// Deterministic random mixed graph with an exact ordered-cell count of
/// round(target_density * n * (n-1)): unordered pairs are shuffled, then
/// filled greedily with edges (two cells) or arcs (one cell, random
/// direction) at the configured fraction, forcing choices when needed to
/// land on the exact count.
inline mixed_graph gen_random_mixed(int n, double target_density,
                                    double arc_fraction, std::uint64_t seed) {
  if (n < 1) throw error(errc::bad_config, "bench: graph order must be >= 1");
  if (!(target_density >= 0.0) || target_density > 1.0)
    throw error(errc::bad_config, "bench: target density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const std::int64_t total_cells = static_cast<std::int64_t>(n) * (n - 1);
  std::int64_t remaining = std::llround(target_density * static_cast<double>(total_cells));

  std::vector<std::pair<vertex, vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(total_cells / 2));
  for (vertex u = 1; u <= n; ++u)
    for (vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[detail::draw_below(rng, i)]);

  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  auto set_cell = [&](vertex a, vertex b) {
    cells[static_cast<std::size_t>(a - 1) * n + (b - 1)] = 1;
  };
  std::int64_t pairs_left = static_cast<std::int64_t>(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (remaining <= 0) break;
    bool make_edge;
    if (remaining >= 2 * pairs_left)
      make_edge = true;  // every remaining pair must carry two cells
    else if (remaining == 1)
      make_edge = false;
    else
      make_edge = !detail::draw_bernoulli(rng, arc_fraction);
    if (make_edge) {
      set_cell(u, v);
      set_cell(v, u);
      remaining -= 2;
    } else {
      if (detail::draw_bernoulli(rng, 0.5))
        set_cell(u, v);
      else
        set_cell(v, u);
      remaining -= 1;
    }
    --pairs_left;
  }
  return mixed_graph::from_cells(n, cells);
}

namespace detail {

struct cell_measurement {
  double build_ms = 0.0;
  double oracle_ms = 0.0;
  double mean_dist = 0.0;
  int max_dist = 0;
  double mean_lookups = 0.0;
};

inline cell_measurement measure_once(const mixed_graph& g, bool measure_time) {
  using clock = std::chrono::steady_clock;
  cell_measurement m;
  const int n = g.order();

  std::vector<predecessor_row> rows;
  rows.reserve(static_cast<std::size_t>(n));
  if (measure_time) {
    const auto t0 = clock::now();
    for (vertex u = 1; u <= n; ++u) rows.push_back(build_refined(g, u));
    m.build_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    const auto t1 = clock::now();
    for (vertex u = 1; u <= n; ++u) oracle::bfs_distances(g, u);
    m.oracle_ms = std::chrono::duration<double, std::milli>(clock::now() - t1).count();
  } else {
    for (vertex u = 1; u <= n; ++u) rows.push_back(build_refined(g, u));
  }

  std::int64_t dist_sum = 0, pair_count = 0, lookup_sum = 0;
  for (const predecessor_row& row : rows) {
    for (vertex v = 1; v <= n; ++v) {
      if (v == row.source || !row.reachable(v)) continue;
      const int d = row.dist_of(v);
      dist_sum += d;
      m.max_dist = std::max(m.max_dist, d);
      std::size_t lookups = 0;
      reconstruct_one(row, v, &lookups);
      lookup_sum += static_cast<std::int64_t>(lookups);
      ++pair_count;
    }
  }
  if (pair_count > 0) {
    m.mean_dist = static_cast<double>(dist_sum) / static_cast<double>(pair_count);
    m.mean_lookups =
        static_cast<double>(lookup_sum) / static_cast<double>(pair_count);
  }
  return m;
}

}  // namespace detail

/// Full sweep: for every (n, density) cell, a discarded warm-up repetition
/// (timing mode only), then `repetitions` measured repetitions on freshly
/// seeded graphs, then a mean row. Each timed section runs alone.
inline bench_report run_sweep(const bench_config& cfg) {
  cfg.validate();
  bench_report report;
  report.config = cfg;
  for (int n : cfg.sizes) {
    for (double density : cfg.densities) {
      if (cfg.measure_time) {
        const mixed_graph g = gen_random_mixed(
            n, density, cfg.arc_fraction,
            detail::cell_seed(cfg.seed, n, density, 0));
        detail::measure_once(g, true);  // warm-up, discarded
      }
      bench_row mean;
      mean.n = n;
      mean.density = density;
      mean.rep = -1;
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const mixed_graph g = gen_random_mixed(
            n, density, cfg.arc_fraction,
            detail::cell_seed(cfg.seed, n, density, rep));
        const detail::cell_measurement m =
            detail::measure_once(g, cfg.measure_time);
        bench_row row;
        row.n = n;
        row.density = density;
        row.rep = rep;
        row.build_ms = m.build_ms;
        row.oracle_ms = m.oracle_ms;
        row.mean_dist = m.mean_dist;
        row.max_dist = m.max_dist;
        row.diameter = m.max_dist;
        row.mean_lookups = m.mean_lookups;
        report.rows.push_back(row);
        mean.build_ms += m.build_ms;
        mean.oracle_ms += m.oracle_ms;
        mean.mean_dist += m.mean_dist;
        mean.max_dist = std::max(mean.max_dist, m.max_dist);
        mean.mean_lookups += m.mean_lookups;
      }
      const double r = static_cast<double>(cfg.repetitions);
      mean.build_ms /= r;
      mean.oracle_ms /= r;
      mean.mean_dist /= r;
      mean.mean_lookups /= r;
      mean.diameter = mean.max_dist;
      report.rows.push_back(mean);
    }
  }
  return report;
}

namespace detail {

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

/// Pinned column order; the aggregate rows carry "mean" in the rep column.
inline std::string report_to_csv(const bench_report& r) {
  std::string out =
      "n,density,rep,build_ms,oracle_ms,mean_dist,max_dist,diameter,"
      "mean_lookups\n";
  for (const bench_row& row : r.rows) {
    out += std::to_string(row.n);
    out += ',' + detail::fixed6(row.density);
    out += ',';
    out += row.rep < 0 ? "mean" : std::to_string(row.rep);
    out += ',' + detail::fixed6(row.build_ms);
    out += ',' + detail::fixed6(row.oracle_ms);
    out += ',' + detail::fixed6(row.mean_dist);
    out += ',' + std::to_string(row.max_dist);
    out += ',' + std::to_string(row.diameter);
    out += ',' + detail::fixed6(row.mean_lookups);
    out += '\n';
  }
  return out;
}

/// key=value configuration text: one pair per line, '#' comments, blank
/// lines ignored. Lists are comma-separated. Unknown keys are rejected.
inline bench_config parse_config(std::string_view text) {
  bench_config cfg;
  int line_no = 0;
  for (std::string& raw : detail::split(std::string(text), '\n')) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) line += c;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw error(errc::bad_config, "bench config line " +
                                        std::to_string(line_no) +
                                        ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    auto parse_double = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        const double d = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return d;
      } catch (const std::exception&) {
        throw error(errc::bad_config, "bench config line " +
                                          std::to_string(line_no) +
                                          ": bad number '" + s + "'");
      }
    };
    auto parse_i = [&](const std::string& s) {
      const auto v = detail::parse_int(s);
      if (!v)
        throw error(errc::bad_config, "bench config line " +
                                          std::to_string(line_no) +
                                          ": bad integer '" + s + "'");
      return *v;
    };
    if (key == "sizes") {
      cfg.sizes.clear();
      for (const std::string& tok : detail::split(value, ','))
        cfg.sizes.push_back(parse_i(tok));
    } else if (key == "densities") {
      cfg.densities.clear();
      for (const std::string& tok : detail::split(value, ','))
        cfg.densities.push_back(parse_double(tok));
    } else if (key == "arc_fraction") {
      cfg.arc_fraction = parse_double(value);
    } else if (key == "seed") {
      try {
        std::size_t used = 0;
        cfg.seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw error(errc::bad_config, "bench config line " +
                                          std::to_string(line_no) +
                                          ": bad seed '" + value + "'");
      }
    } else if (key == "repetitions") {
      cfg.repetitions = parse_i(value);
    } else if (key == "measure_time") {
      if (value == "true" || value == "1")
        cfg.measure_time = true;
      else if (value == "false" || value == "0")
        cfg.measure_time = false;
      else
        throw error(errc::bad_config, "bench config line " +
                                          std::to_string(line_no) +
                                          ": bad boolean '" + value + "'");
    } else {
      throw error(errc::bad_config, "bench config line " +
                                        std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace projpath
