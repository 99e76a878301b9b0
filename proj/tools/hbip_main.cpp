// hbip: decide whether a graph splits into pattern-free parts, driven by a
// dynamic program over a tree decomposition.
//
// Exit codes: 0 = YES, 1 = NO, 2 = usage or input error, 3 = refused
// (width cap, pattern size, or oracle budget), 4 = internal check failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbip/certify.hpp"
#include "hbip/decomposition.hpp"
#include "hbip/graph.hpp"
#include "hbip/io.hpp"
#include "hbip/min_fill.hpp"
#include "hbip/oracle.hpp"
#include "hbip/pattern.hpp"
#include "hbip/solve.hpp"
#include "hbip/solver_types.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitInternal = 4;

void print_ids(const char* label, const std::vector<hbip::Vertex>& ids) {
  std::cout << label << ':';
  for (hbip::Vertex v : ids) std::cout << ' ' << v + 1;
  std::cout << '\n';
}

void print_stats(const char* engine, const hbip::SolveStats& stats) {
  std::cerr << "engine: " << engine << ", nodes: " << stats.node_count
            << ", peak states: " << stats.peak_states << ", time: " << stats.seconds << "s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split a graph into parts none of which contains a fixed pattern"};

  std::string graph_path, td_path, pattern_spec;
  std::string variant_name = "subgraph";
  std::string mode_name = "bipartition";
  std::string engine_name = "auto";
  int q = 0;
  int width_cap = -1;
  int threads = 1;
  std::uint64_t seed = 0;
  bool want_certificate = false;
  bool oracle_check = false;

  app.add_option("--graph", graph_path, "graph file ('p tw <n> <m>' header, 1-based edges)")
      ->required();
  app.add_option("--pattern", pattern_spec, "pattern: K#/P#/C# or a pattern file")->required();
  app.add_option("--td", td_path,
                 "tree decomposition file; built heuristically when absent");
  app.add_option("--variant", variant_name, "containment variant (default subgraph)")
      ->check(CLI::IsMember({"subgraph", "induced"}));
  app.add_option("--mode", mode_name, "bipartition | qpartition | min-q (default bipartition)")
      ->check(CLI::IsMember({"bipartition", "qpartition", "min-q"}));
  app.add_option("--q", q, "part count (qpartition mode)");
  app.add_option("--engine", engine_name, "engine override (default auto)")
      ->check(CLI::IsMember({"auto", "clique", "c4", "general"}));
  app.add_flag("--certificate", want_certificate, "print the partition on YES");
  app.add_flag("--oracle-check", oracle_check,
               "cross-check the answer by exhaustive enumeration (small inputs)");
  app.add_option("--width-cap", width_cap,
                 "decomposition width limit (default per engine; env HBIP_WIDTH_CAP)");
  app.add_option("--seed", seed, "tie-break seed for the decomposition heuristic");
  app.add_option("--threads", threads, "worker threads for the table walk (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (threads < 1) {
      std::cerr << "error: --threads must be at least 1\n";
      return kExitUsage;
    }
    if (mode_name == "qpartition" && q < 1) {
      std::cerr << "error: qpartition mode needs --q with a positive part count\n";
      return kExitUsage;
    }
    if (width_cap < 0) {
      if (const char* env = std::getenv("HBIP_WIDTH_CAP")) {
        try {
          width_cap = std::stoi(env);
        } catch (const std::exception&) {
          std::cerr << "error: HBIP_WIDTH_CAP is not a number: " << env << "\n";
          return kExitUsage;
        }
      }
    }

    std::ifstream graph_file(graph_path);
    if (!graph_file) {
      std::cerr << "error: cannot open graph file " << graph_path << "\n";
      return kExitUsage;
    }
    const hbip::Graph g = hbip::parse_graph(graph_file);

    const hbip::PatternGraph h = hbip::resolve_pattern(pattern_spec);

    const auto variant = variant_name == "induced" ? hbip::ContainmentVariant::kInduced
                                                   : hbip::ContainmentVariant::kSubgraph;
    hbip::EngineChoice choice = hbip::EngineChoice::kAuto;
    if (engine_name == "clique") choice = hbip::EngineChoice::kClique;
    if (engine_name == "c4") choice = hbip::EngineChoice::kC4;
    if (engine_name == "general") choice = hbip::EngineChoice::kGeneral;

    hbip::SolveOptions opts;
    opts.width_cap = width_cap;
    opts.want_certificate = want_certificate || oracle_check;
    opts.threads = threads;
    opts.seed = seed;

    std::optional<hbip::TreeDecomposition> td;
    if (!td_path.empty()) {
      std::ifstream td_file(td_path);
      if (!td_file) {
        std::cerr << "error: cannot open decomposition file " << td_path << "\n";
        return kExitUsage;
      }
      td = hbip::parse_decomposition(td_file, g);
      const auto report = hbip::validate(g, *td);
      if (!report.ok()) {
        std::cerr << "error: supplied decomposition is invalid:\n" << report.to_string();
        return kExitUsage;
      }
      std::cerr << "decomposition: supplied, width " << hbip::width(*td) << "\n";
    } else if (g.order() > 0) {
      td = hbip::heuristic_decomposition(g, seed);
      std::cerr << "decomposition: heuristic, width " << hbip::width(*td) << "\n";
    }
    const hbip::TreeDecomposition* td_ptr = td ? &*td : nullptr;

    // Forcing an incompatible engine is a usage error; report it as such.
    hbip::select_engine(h, variant, choice);

    if (mode_name == "bipartition") {
      const hbip::Decision dec = hbip::solve_bipartition(g, h, variant, opts, td_ptr, choice);
      print_stats(hbip::engine_name(dec.engine), dec.stats);
      if (dec.outcome == hbip::Outcome::kRefused) {
        std::cerr << "refused: " << dec.diagnostic << "\n";
        return kExitRefused;
      }
      const bool yes = dec.outcome == hbip::Outcome::kYes;
      std::cout << (yes ? "YES" : "NO") << "\n";
      if (yes && dec.certificate) {
        const auto check = hbip::verify_bipartition(g, h, variant, *dec.certificate);
        if (!check) {
          std::cerr << "internal error: certificate failed verification: " << check.message
                    << "\n";
          return kExitInternal;
        }
        if (want_certificate) {
          print_ids("A", dec.certificate->a);
          print_ids("B", dec.certificate->b);
        }
      }
      if (oracle_check) {
        const auto ref = hbip::oracle_bipartition(g, h, variant);
        if (ref.outcome == hbip::Outcome::kRefused) {
          std::cerr << "refused: " << ref.diagnostic << "\n";
          return kExitRefused;
        }
        if ((ref.outcome == hbip::Outcome::kYes) != yes) {
          std::cerr << "internal error: oracle disagrees with the solver\n";
          return kExitInternal;
        }
        std::cerr << "oracle: agreed\n";
      }
      return yes ? kExitYes : kExitNo;
    }

    // q-part modes share the printing path.
    hbip::QDecision dec;
    if (mode_name == "qpartition") {
      dec = hbip::solve_qpartition(g, h, variant, q, opts, td_ptr, choice);
    } else {
      dec = hbip::solve_min_q(g, h, variant, opts, td_ptr, choice);
    }
    print_stats(hbip::engine_name(dec.engine), dec.stats);
    if (dec.outcome == hbip::Outcome::kRefused) {
      std::cerr << "refused: " << dec.diagnostic << "\n";
      return kExitRefused;
    }
    const bool yes = dec.outcome == hbip::Outcome::kYes;
    std::cout << (yes ? "YES" : "NO") << "\n";
    if (yes && mode_name == "min-q") std::cout << "Q: " << dec.q << "\n";
    if (yes && dec.parts) {
      const auto check = hbip::verify_parts(g, h, variant, *dec.parts);
      if (!check) {
        std::cerr << "internal error: certificate failed verification: " << check.message << "\n";
        return kExitInternal;
      }
      if (want_certificate) {
        for (std::size_t i = 0; i < dec.parts->size(); ++i) {
          std::ostringstream label;
          label << "PART " << i + 1;
          print_ids(label.str().c_str(), (*dec.parts)[i]);
        }
      }
    }
    if (oracle_check) {
      // For min-q additionally confirm minimality: every smaller count fails.
      const int upto = dec.q;
      for (int qq = mode_name == "min-q" ? 1 : upto; qq <= upto; ++qq) {
        const auto ref = hbip::oracle_qpartition(g, h, variant, qq);
        if (ref.outcome == hbip::Outcome::kRefused) {
          std::cerr << "refused: " << ref.diagnostic << "\n";
          return kExitRefused;
        }
        const bool expect_yes = (qq == upto) ? yes : false;
        if ((ref.outcome == hbip::Outcome::kYes) != expect_yes) {
          std::cerr << "internal error: oracle disagrees with the solver at q=" << qq << "\n";
          return kExitInternal;
        }
      }
      std::cerr << "oracle: agreed\n";
    }
    return yes ? kExitYes : kExitNo;
  } catch (const hbip::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
