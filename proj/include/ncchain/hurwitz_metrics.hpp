#pragma once

// The Hurwitz graph G_T(n) on F_n: eccentricities, radius, diameter,
// antipodes, the phi-contraction property and the bubble-sort meet path
// bounding the diameter.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/factor_core.hpp"
#include "ncchain/graph_core.hpp"

namespace ncchain {

/// Graph construction stores the full adjacency; n = 8 has 262144 vertices.
inline constexpr int kDefaultGraphCap = 8;

class HurwitzGraph {
public:
  HurwitzGraph(int n, WordIndex index, CsrGraph adjacency)
      : n_(n), index_(std::move(index)), adjacency_(std::move(adjacency)) {}

  int n() const { return n_; }
  std::size_t size() const { return index_.size(); }
  const WordIndex& index() const { return index_; }
  const CsrGraph& adjacency() const { return adjacency_; }
  const FactorWord& word(std::size_t v) const { return index_[v]; }
  std::size_t vertex_of(const FactorWord& w) const { return index_.index_of(w); }
  std::size_t base_vertex() const { return vertex_of(FactorWord::base(n_)); }

private:
  int n_;
  WordIndex index_;
  CsrGraph adjacency_;
};

/// Throws ResourceLimitExceeded if n > max_n.
HurwitzGraph build_graph(int n, int max_n = kDefaultGraphCap);

struct Eccentricity {
  int ecc = 0;
  std::vector<int> distances;
};

Eccentricity eccentricity(const HurwitzGraph& g, std::size_t v);

/// Vertices at distance ecc(v) from v.
std::vector<std::size_t> antipodes(const HurwitzGraph& g, std::size_t v);

struct MetricReport {
  int n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  int radius = 0;
  int diameter = 0;
  int ecc_e = 0;
  std::size_t antipodes_e = 0;
  int radius_formula = 0;          // binom(n-1, 2)
  int diameter_upper_bound = 0;    // binom(n-1, 2) + floor((n-2)^2 / 4)
  int conjecture_diameter = 0;     // floor((n-1)^2 / 2) - 1
  bool radius_matches = false;
  bool diameter_within_bounds = false;
  bool diameter_matches_conjecture = false;
  double elapsed_ms = 0;
};

/// Full eccentricity sweep over all vertices on `threads` workers (0 picks
/// the hardware concurrency).
MetricReport radius_and_diameter(const HurwitzGraph& g, unsigned threads = 1);

int radius_formula(int n);
int diameter_upper_bound(int n);
int conjecture_diameter(int n);

/// Length of a shortest path from a to b in the right Cayley graph of S_m on
/// simple transpositions: inv(a^{-1} b).
int cayley_distance(const Permutation& a, const Permutation& b);

struct ContractionResult {
  std::size_t edges_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

/// Checks d(phi(v), phi(w)) <= 1 on every edge, and d(phi(v), phi(w)) <=
/// d(v, w) for `sampled_sources` BFS sources against all targets.
ContractionResult contraction_report(const HurwitzGraph& g, std::size_t sampled_sources = 8,
                                     std::uint64_t seed = 1);
bool contraction_check(const HurwitzGraph& g);

enum class MoveKind { Right, Left };

struct Move {
  MoveKind kind;
  int position;  // 1-based i of R_i / L_i
  friend bool operator==(const Move&, const Move&) = default;
};

FactorWord apply_move(const FactorWord& w, Move m);

struct MeetPath {
  std::vector<Move> moves_v;
  std::vector<Move> moves_w;
  FactorWord meet;
  std::size_t length() const { return moves_v.size() + moves_w.size(); }
};

/// Drives v and w to a common word: repeatedly take the smallest leaf label i
/// of the active part of v, push v's i-factor to the nearer end of the active
/// window (ties go right), push every i-factor of w to the same end, then fix
/// that end factor. Throws std::invalid_argument on mismatched n.
MeetPath bubble_sort_meet(const FactorWord& v, const FactorWord& w);

}  // namespace ncchain
