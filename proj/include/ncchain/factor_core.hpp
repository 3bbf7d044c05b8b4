#pragma once

// Transpositions, permutations and minimal transposition factorizations of
// the long cycle c = (1,2,...,n).
//
// Composition convention (used by every module in this library):
//
//     (f * g)(x) = f(g(x))
//
// i.e. a product acts right-to-left, and c(i) = i + 1 (mod n). With this
// convention the partial products satisfy sigma_j = t_j * sigma_{j+1}, and
// conjugation is g^h := h^{-1} g h. For a transposition g = (a,b) this is the
// transposition (h^{-1}(a), h^{-1}(b)).
//
// Labels and positions in the public API are 1-based.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncchain {

/// Largest supported rank parameter n. Labels fit in a byte and a word of
/// n - 1 factors packs into at most 2(n - 1) bytes.
inline constexpr int kMaxN = 12;

using Label = std::uint8_t;

class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int size);
  /// Throws std::invalid_argument unless `images` is a bijection of {1..m}.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);
  /// Cycle notation; points not mentioned are fixed.
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);
  /// The long cycle (1,2,...,size).
  static Permutation long_cycle(int size);
  /// The longest element [size, size-1, ..., 1].
  static Permutation longest(int size);
  /// The simple transposition s_j = (j, j+1).
  static Permutation simple(int size, int j);

  int size() const { return size_; }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)]; }

  Permutation inverse() const;
  int inversions() const;
  /// Positions i (1-based) with p(i) > p(i+1).
  std::vector<int> descents() const;
  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool is_identity() const;
  std::vector<int> images() const;
  Permutation swapped_positions(int i, int j) const;

  std::string one_line() const;
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::uint8_t size_ = 0;
  std::array<Label, kMaxN> img_{};
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A transposition (a b), stored with a < b.
struct Transposition {
  Label a = 0;
  Label b = 0;

  constexpr Transposition() = default;
  constexpr Transposition(int x, int y)
      : a(static_cast<Label>(x < y ? x : y)), b(static_cast<Label>(x < y ? y : x)) {}

  constexpr bool moves(int x) const { return x == a || x == b; }
  constexpr int apply(int x) const { return x == a ? b : (x == b ? a : x); }
  constexpr bool commutes_with(Transposition o) const {
    return *this == o || !(moves(o.a) || moves(o.b));
  }
  /// The endpoint other than x; x must be moved.
  constexpr int other(int x) const { return x == a ? b : a; }

  friend constexpr auto operator<=>(const Transposition&, const Transposition&) = default;
  friend constexpr bool operator==(const Transposition&, const Transposition&) = default;
};

/// g^h = h^{-1} g h.
constexpr Transposition conjugate(Transposition g, Transposition h) {
  return {h.apply(g.a), h.apply(g.b)};
}
Transposition conjugate(Transposition g, const Permutation& h);

std::ostream& operator<<(std::ostream& os, Transposition t);

/// An ordered sequence (t_1, ..., t_{n-1}) of transpositions on {1..n}.
/// Membership in F_n (product equal to c) is a property checked by
/// is_valid_chain, not a class invariant, so candidate words can be formed
/// freely. Values are immutable; moves return fresh words.
class FactorWord {
public:
  FactorWord() = default;
  /// Throws std::invalid_argument on size or label range mismatch.
  FactorWord(int n, std::span<const Transposition> factors);
  FactorWord(int n, std::initializer_list<Transposition> factors);

  /// e = ((1,2),(2,3),...,(n-1,n)).
  static FactorWord base(int n);

  int n() const { return n_; }
  int length() const { return n_ > 0 ? n_ - 1 : 0; }
  /// 1-based factor access.
  Transposition at(int pos) const { return factors_[static_cast<std::size_t>(pos - 1)]; }
  std::span<const Transposition> factors() const {
    return {factors_.data(), static_cast<std::size_t>(length())};
  }
  /// Copy with the factors at 1-based positions pos and pos+1 replaced.
  FactorWord with_pair(int pos, Transposition first, Transposition second) const;

  std::size_t hash() const;

  // Canonical order: lexicographic on (a_1, b_1, a_2, b_2, ...) for equal n.
  friend auto operator<=>(const FactorWord&, const FactorWord&) = default;
  friend bool operator==(const FactorWord&, const FactorWord&) = default;

private:
  std::uint8_t n_ = 0;
  std::array<Transposition, kMaxN - 1> factors_{};
};

/// Canonical string "a b,c d,..." (1-based labels).
std::string to_string(const FactorWord& w);
std::ostream& operator<<(std::ostream& os, const FactorWord& w);

struct FactorWordHash {
  std::size_t operator()(const FactorWord& w) const { return w.hash(); }
};

/// Undirected graph on {1..n} drawn on a circle; edges stored normalized and
/// sorted.
class GeometricTree {
public:
  GeometricTree() = default;
  GeometricTree(int n, std::vector<Transposition> edges);

  int n() const { return n_; }
  const std::vector<Transposition>& edges() const { return edges_; }
  bool has_edge(int x, int y) const;
  std::vector<int> neighbors_of(int v) const;

  bool is_tree() const;
  bool is_noncrossing() const;

  /// Vertices of the component containing `from` after deleting `removed`.
  std::vector<bool> component_without(Transposition removed, int from) const;

  friend bool operator==(const GeometricTree&, const GeometricTree&) = default;

private:
  int n_ = 0;
  std::vector<Transposition> edges_;
};

std::ostream& operator<<(std::ostream& os, const GeometricTree& t);

/// True iff chords {a,b} and {c,d} of the n-gon cross in their interiors.
bool chords_cross(Transposition x, Transposition y);

// ---------------------------------------------------------------------------

/// t_1 * t_2 * ... * t_{n-1}.
Permutation product(const FactorWord& w);

/// Goulden-Yong test: G(w) is a non-crossing tree and neighbours of every
/// vertex appear in cyclically decreasing order along the word.
bool is_valid_chain(const FactorWord& w);

/// R_i: (t_i, t_{i+1}) -> (t_{i+1}^{t_i}, t_i). Throws std::out_of_range
/// unless 1 <= i <= n-2.
FactorWord hurwitz_right(const FactorWord& w, int i);
/// L_i: (t_i, t_{i+1}) -> (t_{i+1}, t_i^{t_{i+1}}).
FactorWord hurwitz_left(const FactorWord& w, int i);

/// All distinct words reachable by one R_i or L_i, sorted canonically.
std::vector<FactorWord> neighbors(const FactorWord& w);

/// iota(t_1..t_{n-1}) = (t_{n-1}^{s0}, ..., t_1^{s0}) with s0 = [n,...,1].
FactorWord involution_iota(const FactorWord& w);

GeometricTree tree_of_word(const FactorWord& w);

}  // namespace ncchain

template <>
struct std::hash<ncchain::FactorWord> {
  std::size_t operator()(const ncchain::FactorWord& w) const noexcept { return w.hash(); }
};
