#pragma once

// Weak(F_n): cover relations, the down operators D_i and D_pi realising the
// 0-Hecke algebra action, lower intervals and maximal elements.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/chain_map.hpp"
#include "ncchain/factor_core.hpp"

namespace ncchain {

/// True iff {u,v} is an edge of the Hurwitz graph and the ranks differ by 1.
bool is_hasse_edge(const FactorWord& u, const FactorWord& v);

/// Same-rank Hurwitz edges are exactly those joining (.., (a,c),(a,b), ..)
/// with (.., (b,c),(a,c), ..) at the same position, a < b < c.
bool is_deleted_edge_pattern(const FactorWord& u, const FactorWord& v);

/// D_i(w): the rank-lowering move at i when i is a descent of phi(w), else w.
/// When both R_i and L_i lower the rank they must coincide; a mismatch throws
/// std::logic_error. Throws std::out_of_range unless 1 <= i <= n-2.
FactorWord down_operator(const FactorWord& w, int i);

/// A reduced word s_{i_1} ... s_{i_k} for pi, found by repeatedly stripping
/// the rightmost (or, with leftmost_descent, the leftmost) right descent.
std::vector<int> reduced_word(const Permutation& pi, bool leftmost_descent = false);

/// D_{i_1} ... D_{i_k} applied to w (D_{i_k} acts first).
FactorWord down_word(const FactorWord& w, const std::vector<int>& word);

/// D_pi(w) along the canonical reduced word of pi (a permutation of {1..n-1}).
FactorWord down_pi(const FactorWord& w, const Permutation& pi);

/// [e, w] = {D_pi(w) : pi in S_{n-1}}, sorted canonically.
std::vector<FactorWord> lower_interval(const FactorWord& w);

/// Words with no upper cover, sorted canonically.
std::vector<FactorWord> maximal_elements(int n);

/// True iff w has no neighbour of larger rank.
bool is_maximal(const FactorWord& w);

/// Checks that phi maps [e, w0] bijectively onto S_{n-1} and that covers
/// correspond to covers of the weak order on S_{n-1}.
/// Throws std::invalid_argument if w0 is not maximal.
bool interval_isomorphism_check(const FactorWord& w0);

/// Explicit cover graph of Weak(F_n) over the canonical word index.
class HasseDiagram {
public:
  explicit HasseDiagram(int n);

  int n() const { return n_; }
  const WordIndex& index() const { return index_; }
  std::size_t size() const { return index_.size(); }
  int rank_of(std::size_t v) const { return ranks_[v]; }
  /// Indices of the words covering v.
  const std::vector<std::size_t>& up(std::size_t v) const { return up_[v]; }
  /// Indices of the words covered by v.
  const std::vector<std::size_t>& down(std::size_t v) const { return down_[v]; }
  std::size_t edge_count() const;

  /// All u <= v (transitive closure of covers), as a membership mask.
  std::vector<bool> below(std::size_t v) const;

private:
  int n_;
  WordIndex index_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// Pairs (u, v) with Inv, Inv_R and Inv_L of u contained in those of v but
/// u not below v, i.e. counterexamples to the converse of the monotonicity
/// criterion. Stops after `limit` witnesses.
std::vector<std::pair<FactorWord, FactorWord>> converse_criterion_search(const HasseDiagram& h,
                                                                         std::size_t limit = 16);

}  // namespace ncchain
