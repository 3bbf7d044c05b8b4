#pragma once

// The map phi: F_n -> S_{n-1}, rank, and the right/left/neutral inversion
// taxonomy of a factorization word.

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncchain/factor_core.hpp"

namespace ncchain {

/// sigma_j = t_j t_{j+1} ... t_{n-1} for j = 1..n, with sigma_n = id.
class PartialProducts {
public:
  explicit PartialProducts(std::vector<Permutation> sigma) : sigma_(std::move(sigma)) {}
  /// 1-based: sigma(1) == c, sigma(n) == id.
  const Permutation& sigma(int j) const { return sigma_[static_cast<std::size_t>(j - 1)]; }
  int n() const { return static_cast<int>(sigma_.size()); }

private:
  std::vector<Permutation> sigma_;
};

PartialProducts partial_products(const FactorWord& w);

/// phi(w)(j) = sigma_{j+1}^{-1}(a) where t_j = (a,b), a < b.
/// Throws std::invalid_argument if w is not in F_n.
Permutation phi(const FactorWord& w);

/// inv(phi(w)); equal to the distance from e in the Hurwitz graph.
int rank(const FactorWord& w);

/// Value pairs (i, j), i < j. Kept ordered so set equality is canonical.
using PairSet = std::set<std::pair<int, int>>;

/// Inv(p) = {(i,j) : i < j, p^{-1}(i) > p^{-1}(j)}: pairs of values.
PairSet inversion_set(const Permutation& p);

/// Relabels every pair through the longest element pi_0 of S_m and re-sorts,
/// i.e. (i,j) -> (m+1-j, m+1-i).
PairSet conjugate_by_longest(const PairSet& pairs, int m);

enum class InversionKind { Right, Left, Neutral };

struct InversionPair {
  int i;
  int j;
  InversionKind kind;
  friend bool operator==(const InversionPair&, const InversionPair&) = default;
};

struct InversionTable {
  Permutation pi;
  std::vector<InversionPair> pairs;  // sorted by (i, j)

  PairSet all() const;
  PairSet of_kind(InversionKind k) const;
  PairSet right() const { return of_kind(InversionKind::Right); }
  PairSet left() const { return of_kind(InversionKind::Left); }
  PairSet neutral() const { return of_kind(InversionKind::Neutral); }
  int count(InversionKind k) const;
};

/// Labels (i,j) in Inv(phi(w)) by the intervals I_v = [a,b] of the factor
/// t_{phi(w)^{-1}(v)}: Right iff I_i is inside I_j, Left iff I_j is inside
/// I_i, Neutral iff they are disjoint.
InversionTable inversion_table(const FactorWord& w);

struct LocalRange {
  Transposition factor;   // t_j = (a,b)
  int value = 0;          // i = phi(w)(j)
  bool in_range = false;  // a <= i < b
  /// For every other factor (b,c) nested in (a,d): i < b when the nested edge
  /// lies in the component of d after deleting {a,d}, else c <= i.
  bool component_rule = false;
};

/// Throws std::out_of_range unless 1 <= j <= n-1.
LocalRange local_range_check(const FactorWord& w, int j);

struct NoSuchChain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The unique w in F_n with Inv(w) = inv and Inv_L(w) = inv_left. Peels t_{n-1}
/// off the right end and recurses on the two cycles of c * t_{n-1}.
/// Throws NoSuchChain when the data does not come from a word.
FactorWord reconstruct(int n, const PairSet& inv, const PairSet& inv_left);

}  // namespace ncchain
