#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hbip/graph.hpp"

namespace hbip {

// Tri-state result: solvers refuse (rather than guess or crash) when an
// input exceeds a configured limit, e.g. decomposition width or pattern size.
enum class Outcome { kYes, kNo, kRefused };

enum class EngineKind { kClique, kC4, kGeneral };
enum class EngineChoice { kAuto, kClique, kC4, kGeneral };

inline const char* engine_name(EngineKind k) {
  switch (k) {
    case EngineKind::kClique: return "clique";
    case EngineKind::kC4: return "c4";
    case EngineKind::kGeneral: return "general";
  }
  return "?";
}

struct SolveStats {
  int node_count = 0;          // nice decomposition nodes walked
  std::size_t peak_states = 0; // largest per-node table
  double seconds = 0.0;
};

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

struct Decision {
  Outcome outcome = Outcome::kNo;
  std::optional<Bipartition> certificate;  // set for kYes when requested
  EngineKind engine = EngineKind::kGeneral;
  SolveStats stats;
  std::string diagnostic;  // human-readable reason when refused
};

struct QDecision {
  Outcome outcome = Outcome::kNo;
  int q = 0;                                // the part count answered for
  std::optional<std::vector<std::vector<Vertex>>> parts;  // kYes certificate
  EngineKind engine = EngineKind::kGeneral;
  SolveStats stats;
  std::string diagnostic;
};

struct SolveOptions {
  int width_cap = -1;           // -1 = engine default
  bool want_certificate = true;
  int threads = 1;
  std::uint64_t seed = 0;       // decomposition heuristic tie-breaking
};

inline const Bipartition& extract_certificate(const Decision& d) {
  if (d.outcome != Outcome::kYes || !d.certificate) {
    throw std::logic_error("no certificate available");
  }
  return *d.certificate;
}

}  // namespace hbip
