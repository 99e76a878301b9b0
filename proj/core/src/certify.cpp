#include "hbip/certify.hpp"

#include <algorithm>

namespace hbip {

namespace {

CertificateCheck fail(std::string msg) { return {false, std::move(msg)}; }

CertificateCheck check_partition_shape(const Graph& g,
                                       std::span<const std::vector<Vertex>> parts) {
  std::vector<Vertex> all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  if (all.size() != g.order()) {
    return fail("parts hold " + std::to_string(all.size()) + " vertices, graph has " +
                std::to_string(g.order()));
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    return fail("parts overlap");
  }
  if (!all.empty() && all.back() >= g.order()) {
    return fail("vertex " + std::to_string(all.back()) + " out of range");
  }
  return {};
}

CertificateCheck check_parts_free(const Graph& g, const PatternGraph& h,
                                  ContainmentVariant variant,
                                  std::span<const std::vector<Vertex>> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_part_valid(g, parts[i], h, variant)) {
      return fail("part " + std::to_string(i + 1) + " contains the pattern");
    }
  }
  return {};
}

}  // namespace

CertificateCheck verify_bipartition(const Graph& g, const PatternGraph& h,
                                    ContainmentVariant variant, const Bipartition& cert) {
  if (cert.a.empty() || cert.b.empty()) return fail("both parts must be non-empty");
  const std::vector<std::vector<Vertex>> parts{cert.a, cert.b};
  if (auto shape = check_partition_shape(g, parts); !shape) return shape;
  return check_parts_free(g, h, variant, parts);
}

CertificateCheck verify_parts(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                              std::span<const std::vector<Vertex>> parts) {
  if (auto shape = check_partition_shape(g, parts); !shape) return shape;
  return check_parts_free(g, h, variant, parts);
}

}  // namespace hbip
