#include "ncchain/graph_core.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace ncchain {

bool CsrGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), static_cast<VertexId>(v));
}

bool CsrGraph::is_symmetric() const {
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (!has_edge(v, u)) return false;
  return true;
}

CsrGraph make_csr(std::vector<std::vector<VertexId>> adjacency) {
  CsrGraph g;
  g.offsets.reserve(adjacency.size() + 1);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.targets.insert(g.targets.end(), list.begin(), list.end());
    g.offsets.push_back(g.targets.size());
  }
  return g;
}

int bfs(const CsrGraph& g, std::size_t source, std::vector<int>& dist) {
  dist.assign(g.vertex_count(), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(static_cast<VertexId>(source));
  int far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    const int du = dist[u];
    far = du;
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return far;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::vector<int> eccentricities(const CsrGraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  std::vector<int> ecc(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> disconnected{false};

  auto worker = [&] {
    std::vector<int> dist;  // worker-private buffer
    for (std::size_t s = next++; s < n; s = next++) {
      ecc[s] = bfs(g, s, dist);
      if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) disconnected = true;
    }
  };

  const unsigned t = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
  }
  if (disconnected) throw std::runtime_error("graph is disconnected");
  return ecc;
}

}  // namespace ncchain
