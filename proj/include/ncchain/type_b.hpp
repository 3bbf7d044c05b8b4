#pragma once

// Hurwitz graph of the hyperoctahedral group B_n on reduced reflection
// factorizations of the Coxeter element c = (-1 1)(1 2)...(n-1 n).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncchain/graph_core.hpp"

namespace ncchain {

/// B_n acts on {-n..-1, 1..n} and commutes with negation. Stored as the
/// images of 1..n.
class SignedPermutation {
public:
  SignedPermutation() = default;
  static SignedPermutation identity(int n);
  /// images[k] is the image of k + 1; throws std::invalid_argument unless the
  /// absolute values form a permutation of 1..n.
  static SignedPermutation from_images(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return x > 0 ? images_[x - 1] : -images_[-x - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  SignedPermutation inverse() const;
  /// Multiplicative order.
  int order() const;

  /// (f * g)(x) = f(g(x)).
  friend SignedPermutation operator*(const SignedPermutation& f, const SignedPermutation& g);
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
  std::vector<int> images_;
};

std::string to_string(const SignedPermutation& p);

/// The reflection swapping x <-> y and -x <-> -y. Normalized so that either
/// x = -y < 0 (sign change of y) or |x| < y; (i, j) is a short reflection and
/// (-i, j) a long one.
struct BReflection {
  int x = -1;
  int y = 1;

  BReflection() = default;
  BReflection(int first, int second);

  bool is_sign_change() const { return x == -y; }
  int apply(int z) const;
  SignedPermutation as_permutation(int n) const;

  friend auto operator<=>(const BReflection&, const BReflection&) = default;
};

/// g^h = h^{-1} g h, renormalized.
BReflection conjugate(BReflection g, BReflection h);

std::string to_string(BReflection r);

/// All n^2 reflections of B_n in canonical order.
std::vector<BReflection> b_reflections(int n);

class BFactorWord {
public:
  BFactorWord() = default;
  BFactorWord(int n, std::vector<BReflection> factors);

  int n() const { return n_; }
  int length() const { return static_cast<int>(factors_.size()); }
  /// 1-based.
  BReflection at(int pos) const { return factors_[static_cast<std::size_t>(pos - 1)]; }
  std::span<const BReflection> factors() const { return factors_; }

  friend auto operator<=>(const BFactorWord&, const BFactorWord&) = default;

private:
  int n_ = 0;
  std::vector<BReflection> factors_;
};

std::string to_string(const BFactorWord& w);

/// e = ((-1,1), (1,2), ..., (n-1,n)).
BFactorWord b_base_word(int n);
SignedPermutation b_product(const BFactorWord& w);
SignedPermutation b_coxeter_element(int n);

BFactorWord b_hurwitz_right(const BFactorWord& w, int i);
BFactorWord b_hurwitz_left(const BFactorWord& w, int i);
std::vector<BFactorWord> b_neighbors(const BFactorWord& w);

/// |H(B_5)| = 3125 is the largest the default cap admits.
inline constexpr int kDefaultTypeBCap = 5;

/// Closure of {e} under Hurwitz moves, canonically sorted. Throws
/// ResourceLimitExceeded if n > max_n.
std::vector<BFactorWord> enumerate_HBn(int n, int max_n = kDefaultTypeBCap);

struct BHurwitzGraph {
  int n = 0;
  std::vector<BFactorWord> words;
  CsrGraph adjacency;
  std::size_t vertex_of(const BFactorWord& w) const;
  std::size_t base_vertex() const { return vertex_of(b_base_word(n)); }
};

BHurwitzGraph build_b_graph(int n, int max_n = kDefaultTypeBCap);

struct BMetricReport {
  int n = 0;
  std::size_t count = 0;
  std::size_t expected_count = 0;  // n^n
  int radius = 0;
  int conjecture_radius = 0;       // binom(n, 2) + 1
  int ecc_e = 0;
  std::size_t antipodes_e = 0;           // at distance ecc(e) from e
  std::size_t antipodes_max_rank = 0;    // in the top BFS layer from e
  std::optional<int> diameter;
  std::optional<std::size_t> reference_antipodes;
  bool radius_matches_conjecture = false;
  double elapsed_ms = 0;
};

/// Diameter is included for n <= diameter_max_n.
BMetricReport b_metrics(const BHurwitzGraph& g, unsigned threads = 1,
                        std::optional<std::size_t> reference_antipodes = std::nullopt,
                        int diameter_max_n = 4);

}  // namespace ncchain
