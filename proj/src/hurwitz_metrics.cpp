#include "ncchain/hurwitz_metrics.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "ncchain/chain_map.hpp"

namespace ncchain {

HurwitzGraph build_graph(int n, int max_n) {
  if (n > max_n)
    throw ResourceLimitExceeded("Hurwitz graph for n = " + std::to_string(n) + " exceeds the cap n <= " +
                                std::to_string(max_n));
  WordIndex index(enumerate_Fn(n, std::max(max_n, n)));
  std::vector<std::vector<VertexId>> adj(index.size());
  for (std::size_t v = 0; v < index.size(); ++v)
    for (const auto& u : neighbors(index[v])) adj[v].push_back(static_cast<VertexId>(index.index_of(u)));
  return HurwitzGraph(n, std::move(index), make_csr(std::move(adj)));
}

Eccentricity eccentricity(const HurwitzGraph& g, std::size_t v) {
  Eccentricity e;
  e.ecc = bfs(g.adjacency(), v, e.distances);
  return e;
}

std::vector<std::size_t> antipodes(const HurwitzGraph& g, std::size_t v) {
  const auto e = eccentricity(g, v);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < e.distances.size(); ++u)
    if (e.distances[u] == e.ecc) out.push_back(u);
  return out;
}

int radius_formula(int n) { return static_cast<int>(binomial(n - 1, 2)); }

int diameter_upper_bound(int n) { return radius_formula(n) + (n - 2) * (n - 2) / 4; }

int conjecture_diameter(int n) { return (n - 1) * (n - 1) / 2 - 1; }

MetricReport radius_and_diameter(const HurwitzGraph& g, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  MetricReport r;
  r.n = g.n();
  r.vertices = g.size();
  r.edges = g.adjacency().edge_count();
  const auto ecc = eccentricities(g.adjacency(), threads);
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  r.diameter = *std::max_element(ecc.begin(), ecc.end());
  const std::size_t e = g.base_vertex();
  r.ecc_e = ecc[e];
  r.antipodes_e = antipodes(g, e).size();
  r.radius_formula = radius_formula(g.n());
  r.diameter_upper_bound = diameter_upper_bound(g.n());
  r.conjecture_diameter = conjecture_diameter(g.n());
  r.radius_matches = r.radius == r.radius_formula;
  r.diameter_within_bounds = r.radius_formula <= r.diameter && r.diameter <= r.diameter_upper_bound;
  r.diameter_matches_conjecture = r.diameter == r.conjecture_diameter;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int cayley_distance(const Permutation& a, const Permutation& b) { return (a.inverse() * b).inversions(); }

ContractionResult contraction_report(const HurwitzGraph& g, std::size_t sampled_sources, std::uint64_t seed) {
  ContractionResult res;
  std::vector<Permutation> images;
  images.reserve(g.size());
  for (const auto& w : g.index().words()) images.push_back(phi(w));

  const auto& adj = g.adjacency();
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (VertexId u : adj.neighbors(v)) {
      if (u < v) continue;
      ++res.edges_checked;
      if (cayley_distance(images[v], images[u]) > 1) ++res.violations;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::vector<int> dist;
  for (std::size_t s = 0; s < sampled_sources && g.size() > 0; ++s) {
    const std::size_t src = s == 0 ? g.base_vertex() : pick(rng);
    bfs(adj, src, dist);
    for (std::size_t t = 0; t < g.size(); ++t) {
      ++res.pairs_checked;
      if (cayley_distance(images[src], images[t]) > dist[t]) ++res.violations;
    }
  }
  return res;
}

bool contraction_check(const HurwitzGraph& g) { return contraction_report(g).ok(); }

FactorWord apply_move(const FactorWord& w, Move m) {
  return m.kind == MoveKind::Right ? hurwitz_right(w, m.position) : hurwitz_left(w, m.position);
}

namespace {

int count_factors_with(const FactorWord& w, int lo, int hi, int label) {
  int c = 0;
  for (int k = lo; k <= hi; ++k) c += w.at(k).moves(label);
  return c;
}

// Applies m to w, logging it.
void step(FactorWord& w, std::vector<Move>& log, Move m) {
  w = apply_move(w, m);
  log.push_back(m);
}

}  // namespace

MeetPath bubble_sort_meet(const FactorWord& v, const FactorWord& w) {
  if (v.n() != w.n()) throw std::invalid_argument("words have different n");
  MeetPath path;
  FactorWord x = v;
  FactorWord y = w;
  int lo = 1;
  int hi = v.length();
  while (hi - lo + 1 >= 2) {
    // Smallest label occurring in exactly one active factor of x.
    int leaf = 0;
    for (int label = 1; label <= v.n() && leaf == 0; ++label)
      if (count_factors_with(x, lo, hi, label) == 1) leaf = label;
    if (leaf == 0) throw std::logic_error("active forest without a leaf in " + to_string(x));

    int k = lo;
    while (!x.at(k).moves(leaf)) ++k;
    const bool to_right = (hi - k) <= (k - lo);

    // x: the partner never contains the leaf, so conjugating the i-factor
    // keeps it an i-factor and the partner slides past unchanged.
    if (to_right) {
      for (; k < hi; ++k) step(x, path.moves_v, {MoveKind::Left, k});
    } else {
      for (; k > lo; --k) step(x, path.moves_v, {MoveKind::Right, k - 1});
    }

    // y: move the i-factor farthest from the target end. If its partner is
    // also an i-factor, choose the move that conjugates the partner off i.
    int count = count_factors_with(y, lo, hi, leaf);
    for (;;) {
      if (to_right) {
        int f = lo;
        while (!y.at(f).moves(leaf)) ++f;
        if (f == hi) break;
        const bool partner_has = y.at(f + 1).moves(leaf);
        step(y, path.moves_w, {partner_has ? MoveKind::Right : MoveKind::Left, f});
      } else {
        int f = hi;
        while (!y.at(f).moves(leaf)) --f;
        if (f == lo) break;
        const bool partner_has = y.at(f - 1).moves(leaf);
        step(y, path.moves_w, {partner_has ? MoveKind::Left : MoveKind::Right, f - 1});
      }
      const int now = count_factors_with(y, lo, hi, leaf);
      if (now > count) throw std::logic_error("push created an extra i-factor in " + to_string(y));
      count = now;
    }

    const int end = to_right ? hi : lo;
    if (x.at(end) != y.at(end)) throw std::logic_error("end factors differ after pushing");
    if (to_right)
      --hi;
    else
      ++lo;
  }
  if (x != y) throw std::logic_error("bubble sort did not meet");
  path.meet = x;
  return path;
}

}  // namespace ncchain
