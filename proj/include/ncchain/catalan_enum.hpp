#pragma once

// Enumeration of F_n, fiber counts of phi, the alternating non-crossing tree
// bijection, and the (q,t)-Catalan statistics on maximal words, trees and
// Dyck paths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncchain/factor_core.hpp"
#include "ncchain/polynomial.hpp"

namespace ncchain {

struct ResourceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |F_9| = 9^7 is about 4.8 million words; beyond that enumeration is refused
/// unless the caller raises the cap.
inline constexpr int kDefaultEnumerationCap = 9;

/// F_n in canonical order, built as the closure of {e} under all Hurwitz
/// moves. Throws ResourceLimitExceeded if n > max_n.
std::vector<FactorWord> enumerate_Fn(int n, int max_n = kDefaultEnumerationCap);

/// Canonically sorted word list with index lookup by binary search.
class WordIndex {
public:
  WordIndex() = default;
  explicit WordIndex(std::vector<FactorWord> sorted_words);

  std::size_t size() const { return words_.size(); }
  const std::vector<FactorWord>& words() const { return words_; }
  const FactorWord& operator[](std::size_t k) const { return words_[k]; }
  std::optional<std::size_t> find(const FactorWord& w) const;
  /// Throws std::out_of_range if absent.
  std::size_t index_of(const FactorWord& w) const;

private:
  std::vector<FactorWord> words_;
};

std::uint64_t catalan_number(int n);
std::uint64_t binomial(int n, int k);

/// p(pi|_S): the subsequence of pi's one-line notation with values in S,
/// relabelled monotonically onto {1..|S|}.
Permutation pattern(const Permutation& pi, const std::vector<int>& values);

struct FiberCount {
  Permutation pi;
  std::uint64_t count = 0;
};

/// N(pi) = |phi^{-1}(pi)| via the first-letter recursion
///   N(pi) = sum_{i < j} N(p(pi|A(i,j))) * N(p(pi|B(i,j))),  j - 1 = pi(1),
/// memoized on patterns. pi of size 0 has N = 1.
FiberCount fiber_count(const Permutation& pi);

/// tC_{n+1} = sum_k q^k t^{n-k} tC_k tC_{n-k}, tC_0 = 1.
QTPolynomial qt_catalan(int n);
/// C_{n+1}(q) = sum_k q^{(k+1)(n-k)} C_k(q) C_{n-k}(q), C_0 = 1 (t-degree 0).
QTPolynomial carlitz_riordan(int n);

/// sum over maximal w in F_{n+1} of q^{inv_R(w)} t^{inv_L(w)}.
QTPolynomial max_statistics(int n);
/// sum over maximal w in F_{n+1} of q^{inv_L(w) + inv_N(w)}.
QTPolynomial max_statistics_ln(int n);

// ------------------------------------------------------- alternating trees

/// Every vertex has all neighbours larger or all smaller than itself.
bool is_alternating(const GeometricTree& tree);

/// All alternating non-crossing trees on {1..n}, in a fixed order.
std::vector<GeometricTree> alternating_noncrossing_trees(int n);

/// Orders the edges of an alternating non-crossing tree into the maximal word
/// g(T) = g(T_n), (1,n), g(T_1). Throws std::invalid_argument on input that is
/// not a tree, crosses, or is not alternating.
FactorWord word_of_tree(const GeometricTree& tree);

struct EdgePairStats {
  int right = 0;
  int left = 0;
  int neutral = 0;
};

/// Classifies every unordered pair of edges as neutral (disjoint spans),
/// right (inner edge on the low side of the outer one) or left.
/// Throws std::invalid_argument for a tree that is not alternating non-crossing.
EdgePairStats edge_pair_statistics(const GeometricTree& tree);

/// sum over alternating non-crossing trees T on [n] of q^{rp(T)} t^{lp(T)}.
QTPolynomial tree_statistics(int n);

// -------------------------------------------------------------- Dyck paths

class DyckPath {
public:
  /// Steps in {+1, -1}; throws std::invalid_argument unless balanced and
  /// never below the baseline.
  explicit DyckPath(std::vector<int> steps);
  /// Parses "UDUD"-style strings.
  static DyckPath parse(const std::string& s);

  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  const std::vector<int>& steps() const { return steps_; }
  std::string str() const;

private:
  std::vector<int> steps_;
};

std::vector<DyckPath> dyck_paths(int n);

struct DyckStats {
  int area = 0;
  int bmaj = 0;
};

/// area relative to the sawtooth path (both counting forms are evaluated and
/// must agree) and bmaj summed over internal local minima.
DyckStats dyck_statistics(const DyckPath& p);

/// sum over D(n) of q^{area} t^{bmaj}.
QTPolynomial dyck_generating_function(int n);

}  // namespace ncchain
