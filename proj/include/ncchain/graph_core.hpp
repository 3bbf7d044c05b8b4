#pragma once

// Compressed adjacency and breadth-first sweeps shared by the type A and
// type B Hurwitz graphs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ncchain {

using VertexId = std::uint32_t;

/// Undirected graph in CSR form; every edge appears in both endpoint lists
/// and each list is sorted.
struct CsrGraph {
  std::vector<std::size_t> offsets{0};
  std::vector<VertexId> targets;

  std::size_t vertex_count() const { return offsets.size() - 1; }
  std::size_t edge_count() const { return targets.size() / 2; }
  std::span<const VertexId> neighbors(std::size_t v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  bool has_edge(std::size_t u, std::size_t v) const;
  bool is_symmetric() const;
};

/// Builds a CSR graph from per-vertex neighbour lists (sorted and deduplicated
/// on the way in).
CsrGraph make_csr(std::vector<std::vector<VertexId>> adjacency);

inline constexpr int kUnreached = -1;

/// Fills `dist` with hop distances from `source` (kUnreached if unreachable)
/// and returns the largest finite distance.
int bfs(const CsrGraph& g, std::size_t source, std::vector<int>& dist);

/// Eccentricity of every vertex, sweeping sources on `threads` workers.
/// Throws std::runtime_error if the graph is disconnected.
std::vector<int> eccentricities(const CsrGraph& g, unsigned threads);

/// Resolves a thread-count request: 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace ncchain
