#include "ncchain/weak_order.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace ncchain {

bool is_hasse_edge(const FactorWord& u, const FactorWord& v) {
  if (u.n() != v.n()) return false;
  const auto nb = neighbors(u);
  if (!std::binary_search(nb.begin(), nb.end(), v)) return false;
  return std::abs(rank(u) - rank(v)) == 1;
}

bool is_deleted_edge_pattern(const FactorWord& u, const FactorWord& v) {
  if (u.n() != v.n()) return false;
  auto matches = [](const FactorWord& x, const FactorWord& y, int p) {
    // x has ((a,c),(a,b)) and y has ((b,c),(a,c)) at positions p, p+1.
    const Transposition x1 = x.at(p), x2 = x.at(p + 1);
    const Transposition y1 = y.at(p), y2 = y.at(p + 1);
    if (x1.a != x2.a || x2.b >= x1.b) return false;
    const int a = x1.a, b = x2.b, c = x1.b;
    return y1 == Transposition(b, c) && y2 == Transposition(a, c);
  };
  for (int p = 1; p <= u.n() - 2; ++p) {
    bool rest_equal = true;
    for (int k = 1; k <= u.length() && rest_equal; ++k)
      if (k != p && k != p + 1 && u.at(k) != v.at(k)) rest_equal = false;
    if (rest_equal && (matches(u, v, p) || matches(v, u, p))) return true;
  }
  return false;
}

FactorWord down_operator(const FactorWord& w, int i) {
  if (i < 1 || i > w.n() - 2) throw std::out_of_range("down operator index out of range");
  const Permutation p = phi(w);
  if (!p.has_descent(i)) return w;
  const int r = p.inversions();
  const FactorWord right = hurwitz_right(w, i);
  const FactorWord left = hurwitz_left(w, i);
  const bool right_lowers = rank(right) < r;
  const bool left_lowers = rank(left) < r;
  if (right_lowers && left_lowers && right != left)
    throw std::logic_error("forbidden wedge: R_i and L_i both lower " + to_string(w));
  if (right_lowers) return right;
  if (left_lowers) return left;
  throw std::logic_error("descent without a rank-lowering move at " + to_string(w));
}

std::vector<int> reduced_word(const Permutation& pi, bool leftmost_descent) {
  std::vector<int> stripped;
  Permutation p = pi;
  for (;;) {
    const auto d = p.descents();
    if (d.empty()) break;
    const int i = leftmost_descent ? d.front() : d.back();
    stripped.push_back(i);
    p = p.swapped_positions(i, i + 1);
  }
  // pi = s_{d_k} ... s_{d_1} for the stripped descents d_1, ..., d_k.
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

FactorWord down_word(const FactorWord& w, const std::vector<int>& word) {
  FactorWord v = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = down_operator(v, *it);
  return v;
}

FactorWord down_pi(const FactorWord& w, const Permutation& pi) {
  if (pi.size() != w.n() - 1) throw std::invalid_argument("pi must permute {1..n-1}");
  return down_word(w, reduced_word(pi));
}

std::vector<FactorWord> lower_interval(const FactorWord& w) {
  const int m = w.n() - 1;
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  std::vector<FactorWord> out;
  do {
    out.push_back(down_pi(w, Permutation::from_images(images)));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_maximal(const FactorWord& w) {
  const int r = rank(w);
  for (const auto& u : neighbors(w))
    if (rank(u) > r) return false;
  return true;
}

std::vector<FactorWord> maximal_elements(int n) {
  std::vector<FactorWord> out;
  for (const auto& w : enumerate_Fn(n))
    if (is_maximal(w)) out.push_back(w);
  return out;
}

bool interval_isomorphism_check(const FactorWord& w0) {
  if (!is_maximal(w0)) throw std::invalid_argument("not maximal: " + to_string(w0));
  const int m = w0.n() - 1;
  const auto interval = lower_interval(w0);
  std::uint64_t factorial = 1;
  for (int k = 2; k <= m; ++k) factorial *= std::uint64_t(k);
  if (interval.size() != factorial) return false;

  std::vector<Permutation> images;
  std::vector<int> ranks;
  for (const auto& v : interval) {
    images.push_back(phi(v));
    ranks.push_back(images.back().inversions());
  }
  if (std::set<Permutation>(images.begin(), images.end()).size() != interval.size()) return false;

  for (std::size_t x = 0; x < interval.size(); ++x) {
    const auto nb = neighbors(interval[x]);
    for (std::size_t y = 0; y < interval.size(); ++y) {
      // interval[x] covers interval[y] in Weak(F_n)?
      const bool word_cover =
          ranks[x] == ranks[y] + 1 && std::binary_search(nb.begin(), nb.end(), interval[y]);
      bool perm_cover = false;
      for (int j = 1; j < m && !perm_cover; ++j)
        perm_cover = images[x].has_descent(j) && images[x].swapped_positions(j, j + 1) == images[y];
      if (word_cover != perm_cover) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- HasseDiagram

HasseDiagram::HasseDiagram(int n) : n_(n), index_(enumerate_Fn(n)) {
  const std::size_t size = index_.size();
  ranks_.resize(size);
  up_.resize(size);
  down_.resize(size);
  for (std::size_t v = 0; v < size; ++v) ranks_[v] = rank(index_[v]);
  for (std::size_t v = 0; v < size; ++v) {
    for (const auto& u : neighbors(index_[v])) {
      const std::size_t k = index_.index_of(u);
      if (ranks_[k] == ranks_[v] + 1) up_[v].push_back(k);
      if (ranks_[k] + 1 == ranks_[v]) down_[v].push_back(k);
    }
  }
}

std::size_t HasseDiagram::edge_count() const {
  std::size_t e = 0;
  for (const auto& u : up_) e += u.size();
  return e;
}

std::vector<bool> HasseDiagram::below(std::size_t v) const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : down_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<std::pair<FactorWord, FactorWord>> converse_criterion_search(const HasseDiagram& h, std::size_t limit) {
  const int m = h.n() - 1;
  // Pair (i,j) of {1..m} gets bit (i-1)*m + (j-1); m <= 8 fits in 64 bits.
  if (m > 8) throw std::invalid_argument("converse search supports n <= 9");
  auto bits = [m](const PairSet& s) {
    std::uint64_t b = 0;
    for (auto [i, j] : s) b |= std::uint64_t(1) << ((i - 1) * m + (j - 1));
    return b;
  };
  struct Masks {
    std::uint64_t all, right, left;
  };
  std::vector<Masks> masks;
  for (const auto& w : h.index().words()) {
    const auto t = inversion_table(w);
    masks.push_back({bits(t.all()), bits(t.right()), bits(t.left())});
  }
  auto subset = [](std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; };
  std::vector<std::pair<FactorWord, FactorWord>> out;
  for (std::size_t v = 0; v < h.size() && out.size() < limit; ++v) {
    const auto below_v = h.below(v);
    for (std::size_t u = 0; u < h.size() && out.size() < limit; ++u) {
      if (below_v[u]) continue;
      if (subset(masks[u].all, masks[v].all) && subset(masks[u].right, masks[v].right) &&
          subset(masks[u].left, masks[v].left))
        out.emplace_back(h.index()[u], h.index()[v]);
    }
  }
  return out;
}

}  // namespace ncchain
