// Command-line front end. Every subcommand reads a graph from a file or
// standard input (auto-detected matrix or edge-list form), runs one library
// operation and writes its canonical text form to standard output or a file.
//
// Exit codes: 0 success, 1 usage error, 2 input format error, 3 budget
// exceeded, 4 verification divergence.
#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projpath/bench.hpp"
#include "projpath/bracket.hpp"
#include "projpath/graph.hpp"
#include "projpath/graph_io.hpp"
#include "projpath/oracle.hpp"
#include "projpath/path_query.hpp"
#include "projpath/projection.hpp"
#include "projpath/refined.hpp"

namespace projpath {

namespace detail {

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string ecc_text(const eccentricity_result& e) {
  return e.bounded() ? std::to_string(e.value) : std::string("-");
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name; graph input
/// named '-' is read from `in`; results go to `out` (or --output), and
/// diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"shortest-path search on mixed graphs via leveled projections"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "auto";
  std::string output;
  vertex source = 0;
  vertex target = 0;
  std::string depth = "AUTO";
  bool inverse = false;
  bool all_paths = false;
  std::int64_t node_budget = static_cast<std::int64_t>(k_default_node_budget);
  std::int64_t path_budget = static_cast<std::int64_t>(k_default_path_budget);

  auto add_io = [&](CLI::App* sc) {
    sc->add_option("input", input,
                   "graph file (adjacency matrix or edge list), '-' for stdin");
    sc->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"auto", "matrix", "edgelist"}));
    sc->add_option("-o,--output", output, "write results to this file");
  };

  CLI::App* sc_project =
      app.add_subcommand("project", "projection of the graph from one vertex");
  add_io(sc_project);
  sc_project->add_option("-s,--source", source, "base vertex")->required();
  sc_project->add_option("-k,--depth", depth,
                         "projection depth: AUTO or a non-negative level");
  sc_project->add_flag("--inverse", inverse,
                       "project over reversed adjacency");
  sc_project->add_option("--node-budget", node_budget,
                         "abort if the tree exceeds this many nodes")
      ->check(CLI::PositiveNumber);

  CLI::App* sc_refine = app.add_subcommand(
      "refine", "refined projection: every vertex only at its lowest level");
  add_io(sc_refine);
  sc_refine->add_option("-s,--source", source, "base vertex")->required();
  sc_refine->add_option("--node-budget", node_budget,
                        "abort if the tree exceeds this many nodes")
      ->check(CLI::PositiveNumber);

  CLI::App* sc_sssp = app.add_subcommand(
      "sssp", "single-source shortest paths as a predecessor row");
  add_io(sc_sssp);
  sc_sssp->add_option("-s,--source", source, "source vertex")->required();

  CLI::App* sc_sdsp = app.add_subcommand(
      "sdsp", "single-destination shortest paths (row over reversed graph)");
  add_io(sc_sdsp);
  sc_sdsp->add_option("-t,--target", target, "destination vertex")->required();

  CLI::App* sc_spsp =
      app.add_subcommand("spsp", "shortest path(s) between one vertex pair");
  add_io(sc_spsp);
  sc_spsp->add_option("-s,--source", source, "source vertex")->required();
  sc_spsp->add_option("-t,--target", target, "target vertex")->required();
  sc_spsp->add_flag("--all", all_paths, "emit every tied shortest path");
  sc_spsp->add_option("--path-budget", path_budget,
                      "abort --all past this many paths")
      ->check(CLI::PositiveNumber);

  CLI::App* sc_apsp = app.add_subcommand(
      "apsp", "all-pairs shortest paths as a predecessor-set matrix (CSV)");
  add_io(sc_apsp);

  CLI::App* sc_metrics = app.add_subcommand(
      "metrics", "order, size, density, eccentricities and diameters");
  add_io(sc_metrics);

  CLI::App* sc_verify = app.add_subcommand(
      "verify", "check refined search against the brute-force reference");
  add_io(sc_verify);

  CLI::App* sc_bench =
      app.add_subcommand("bench", "random-graph density/size sweep (CSV)");
  std::string config_path;
  std::string sizes_csv;
  std::string densities_csv;
  double arc_fraction = 0.0;
  std::int64_t seed = 0;
  int repetitions = 0;
  bool no_time = false;
  sc_bench->add_option("-o,--output", output, "write results to this file");
  sc_bench->add_option("--config", config_path, "key=value configuration file");
  auto* opt_sizes =
      sc_bench->add_option("--sizes", sizes_csv, "comma-separated graph orders");
  auto* opt_densities = sc_bench->add_option(
      "--densities", densities_csv, "comma-separated target densities");
  auto* opt_arc = sc_bench->add_option("--arc-fraction", arc_fraction,
                                       "fraction of one-directional pairs");
  auto* opt_seed = sc_bench->add_option("--seed", seed, "sweep seed");
  auto* opt_reps =
      sc_bench->add_option("--repetitions", repetitions, "repetitions per cell");
  sc_bench->add_flag("--no-time", no_time,
                     "skip wall-clock timing for byte-identical reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  // ---- load phase: everything wrong with the input stream exits 2 ----
  std::string result;
  try {
    if (sc_bench->parsed()) {
      bench_config cfg;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
          err << "cannot open '" << config_path << "'\n";
          return 2;
        }
        cfg = parse_config(detail::read_all(f));
      }
      if (*opt_sizes) {
        cfg.sizes.clear();
        for (const std::string& tok : detail::split(sizes_csv, ',')) {
          const auto v = detail::parse_int(tok);
          if (!v) {
            err << "bad --sizes entry '" << tok << "'\n";
            return 1;
          }
          cfg.sizes.push_back(*v);
        }
      }
      if (*opt_densities) {
        cfg.densities.clear();
        for (const std::string& tok : detail::split(densities_csv, ',')) {
          try {
            std::size_t used = 0;
            cfg.densities.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
          } catch (const std::exception&) {
            err << "bad --densities entry '" << tok << "'\n";
            return 1;
          }
        }
      }
      if (*opt_arc) cfg.arc_fraction = arc_fraction;
      if (*opt_seed) cfg.seed = static_cast<std::uint64_t>(seed);
      if (*opt_reps) cfg.repetitions = repetitions;
      if (no_time) cfg.measure_time = false;
      try {
        cfg.validate();
      } catch (const error& e) {
        err << e.what() << '\n';
        return 1;
      }
      result = report_to_csv(run_sweep(cfg));
    } else {
      std::string text;
      if (input == "-") {
        text = detail::read_all(in);
      } else {
        std::ifstream f(input);
        if (!f) {
          err << "cannot open '" << input << "'\n";
          return 2;
        }
        text = detail::read_all(f);
      }
      std::optional<graph_format> fmt;
      if (format == "matrix") fmt = graph_format::matrix;
      if (format == "edgelist") fmt = graph_format::edge_list;
      const mixed_graph g = parse_graph(text, fmt);

      // ---- query phase: budget errors exit 3, bad arguments exit 1 ----
      try {
        if (sc_project->parsed() || sc_refine->parsed()) {
          int k = k_auto_depth;
          if (depth != "AUTO" && depth != "auto") {
            const auto v = detail::parse_int(depth);
            if (!v || *v < 0) {
              err << "--depth expects AUTO or a non-negative integer\n";
              return 1;
            }
            k = *v;
          }
          projection p =
              inverse ? build_inverse_projection(
                            g, source, k, static_cast<std::size_t>(node_budget))
                      : build_projection(g, source, k,
                                         static_cast<std::size_t>(node_budget));
          if (sc_refine->parsed()) p = refine_projection(p, g);
          result = to_bracket(p) + "\n";
        } else if (sc_sssp->parsed()) {
          result = format_row(sssp(g, source)) + "\n";
        } else if (sc_sdsp->parsed()) {
          result = format_row(sdsp(g, target)) + "\n";
        } else if (sc_spsp->parsed()) {
          if (all_paths) {
            const path_set ps =
                spsp(g, source, target, static_cast<std::size_t>(path_budget));
            if (ps.paths.empty())
              err << "no path from " << source << " to " << target << "\n";
            result = format_paths(ps);
          } else {
            g.check_vertex(target);
            const predecessor_row row =
                detail::build_refined_impl(g, source, target, false);
            if (!row.reachable(target)) {
              err << "no path from " << source << " to " << target << "\n";
            } else {
              const path p = reconstruct_one(row, target);
              path_set ps;
              ps.paths.push_back(p);
              result = format_paths(ps);
            }
          }
        } else if (sc_apsp->parsed()) {
          result = spm_to_csv(apsp(g));
        } else if (sc_metrics->parsed()) {
          int edges = 0, arcs = 0;
          for (vertex u = 1; u <= g.order(); ++u)
            for (vertex v = u + 1; v <= g.order(); ++v)
              switch (g.classify(u, v)) {
                case pair_kind::edge: ++edges; break;
                case pair_kind::arc_forward:
                case pair_kind::arc_backward: ++arcs; break;
                case pair_kind::none: break;
              }
          std::string s;
          s += "n " + std::to_string(g.order()) + "\n";
          s += "edges " + std::to_string(edges) + "\n";
          s += "arcs " + std::to_string(arcs) + "\n";
          s += "density " + detail::fixed6(g.density()) + "\n";
          for (vertex u = 1; u <= g.order(); ++u)
            s += "ecc " + std::to_string(u) + " " +
                 detail::ecc_text(eccentricity(g, u)) + "\n";
          for (vertex u = 1; u <= g.order(); ++u)
            s += "iecc " + std::to_string(u) + " " +
                 detail::ecc_text(inverse_eccentricity(g, u)) + "\n";
          s += "diameter " + detail::ecc_text(diameter(g)) + "\n";
          s += "inverse_diameter " + detail::ecc_text(inverse_diameter(g)) + "\n";
          result = s;
        } else if (sc_verify->parsed()) {
          const bool check_paths = g.order() <= 10;
          for (vertex u = 1; u <= g.order(); ++u) {
            const oracle::equivalence_report r =
                oracle::assert_equivalence(g, u, check_paths);
            if (!r) {
              err << "divergence: " << r.divergence << "\n";
              return 4;
            }
          }
          result = "ok: " + std::to_string(g.order()) + " sources verified" +
                   (check_paths ? "" : " (distances and predecessor sets)") +
                   "\n";
        }
      } catch (const error& e) {
        err << e.what() << '\n';
        if (e.code() == errc::budget_exceeded ||
            e.code() == errc::path_budget_exceeded)
          return 3;
        return 1;
      }
    }
  } catch (const error& e) {
    err << e.what() << '\n';
    return 2;
  }

  if (output.empty()) {
    out << result;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "cannot open '" << output << "' for writing\n";
      return 1;
    }
    f << result;
  }
  return 0;
}

}  // namespace projpath
