#include "ncchain/type_b.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "ncchain/catalan_enum.hpp"

namespace ncchain {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

SignedPermutation SignedPermutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
  }
  SignedPermutation p;
  p.images_ = std::move(images);
  return p;
}

bool SignedPermutation::is_identity() const {
  for (int k = 1; k <= n(); ++k)
    if (images_[k - 1] != k) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation p = *this;
  for (int k = 1; k <= n(); ++k) {
    const int v = images_[k - 1];
    p.images_[std::abs(v) - 1] = v > 0 ? k : -k;
  }
  return p;
}

int SignedPermutation::order() const {
  SignedPermutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

SignedPermutation operator*(const SignedPermutation& f, const SignedPermutation& g) {
  if (f.n() != g.n()) throw std::invalid_argument("size mismatch");
  SignedPermutation h = g;
  for (int k = 1; k <= g.n(); ++k) h.images_[k - 1] = f(g(k));
  return h;
}

std::string to_string(const SignedPermutation& p) {
  std::string s = "[";
  for (int k = 1; k <= p.n(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(p(k));
  }
  return s + "]";
}

BReflection::BReflection(int first, int second) {
  if (first == 0 || second == 0 || first == second)
    throw std::invalid_argument("bad reflection (" + std::to_string(first) + "," + std::to_string(second) + ")");
  if (first == -second) {
    x = -std::abs(first);
    y = std::abs(first);
    return;
  }
  if (std::abs(first) > std::abs(second)) std::swap(first, second);
  if (second < 0) {
    first = -first;
    second = -second;
  }
  x = first;
  y = second;
}

int BReflection::apply(int z) const {
  if (z == x) return y;
  if (z == y) return x;
  if (z == -x) return -y;
  if (z == -y) return -x;
  return z;
}

SignedPermutation BReflection::as_permutation(int n) const {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images[k - 1] = apply(k);
  return SignedPermutation::from_images(std::move(images));
}

BReflection conjugate(BReflection g, BReflection h) { return {h.apply(g.x), h.apply(g.y)}; }

std::string to_string(BReflection r) { return std::to_string(r.x) + " " + std::to_string(r.y); }

std::vector<BReflection> b_reflections(int n) {
  std::vector<BReflection> out;
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(-i, i);
    for (int j = i + 1; j <= n; ++j) {
      out.emplace_back(i, j);
      out.emplace_back(-i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BFactorWord::BFactorWord(int n, std::vector<BReflection> factors) : n_(n), factors_(std::move(factors)) {
  for (auto r : factors_)
    if (std::abs(r.x) > n || r.y > n) throw std::invalid_argument("reflection label exceeds n");
}

std::string to_string(const BFactorWord& w) {
  std::string s;
  for (int k = 1; k <= w.length(); ++k) {
    if (k > 1) s += ",";
    s += to_string(w.at(k));
  }
  return s;
}

BFactorWord b_base_word(int n) {
  std::vector<BReflection> f{BReflection(-1, 1)};
  for (int k = 1; k < n; ++k) f.emplace_back(k, k + 1);
  return BFactorWord(n, std::move(f));
}

SignedPermutation b_product(const BFactorWord& w) {
  SignedPermutation p = SignedPermutation::identity(w.n());
  for (auto r : w.factors()) p = p * r.as_permutation(w.n());
  return p;
}

SignedPermutation b_coxeter_element(int n) { return b_product(b_base_word(n)); }

namespace {

void check_position(const BFactorWord& w, int i) {
  if (i < 1 || i > w.length() - 1) throw std::out_of_range("Hurwitz move position out of range");
}

}  // namespace

BFactorWord b_hurwitz_right(const BFactorWord& w, int i) {
  check_position(w, i);
  std::vector<BReflection> f(w.factors().begin(), w.factors().end());
  const BReflection s = f[i - 1], t = f[i];
  f[i - 1] = conjugate(t, s);
  f[i] = s;
  return BFactorWord(w.n(), std::move(f));
}

BFactorWord b_hurwitz_left(const BFactorWord& w, int i) {
  check_position(w, i);
  std::vector<BReflection> f(w.factors().begin(), w.factors().end());
  const BReflection s = f[i - 1], t = f[i];
  f[i - 1] = t;
  f[i] = conjugate(s, t);
  return BFactorWord(w.n(), std::move(f));
}

std::vector<BFactorWord> b_neighbors(const BFactorWord& w) {
  std::vector<BFactorWord> out;
  for (int i = 1; i < w.length(); ++i) {
    out.push_back(b_hurwitz_right(w, i));
    out.push_back(b_hurwitz_left(w, i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, w);
  return out;
}

std::vector<BFactorWord> enumerate_HBn(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > max_n)
    throw ResourceLimitExceeded("type B enumeration for n = " + std::to_string(n) + " exceeds the cap n <= " +
                                std::to_string(max_n));
  std::vector<BFactorWord> seen{b_base_word(n)};
  std::vector<BFactorWord> frontier = seen;
  while (!frontier.empty()) {
    std::vector<BFactorWord> next;
    for (const auto& w : frontier)
      for (auto& u : b_neighbors(w)) next.push_back(std::move(u));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<BFactorWord> fresh;
    std::set_difference(next.begin(), next.end(), seen.begin(), seen.end(), std::back_inserter(fresh));
    std::vector<BFactorWord> merged;
    std::merge(seen.begin(), seen.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    seen = std::move(merged);
    frontier = std::move(fresh);
  }
  return seen;
}

std::size_t BHurwitzGraph::vertex_of(const BFactorWord& w) const {
  const auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) throw std::out_of_range("word not in graph: " + to_string(w));
  return static_cast<std::size_t>(it - words.begin());
}

BHurwitzGraph build_b_graph(int n, int max_n) {
  BHurwitzGraph g;
  g.n = n;
  g.words = enumerate_HBn(n, max_n);
  std::vector<std::vector<VertexId>> adj(g.words.size());
  for (std::size_t v = 0; v < g.words.size(); ++v)
    for (const auto& u : b_neighbors(g.words[v])) adj[v].push_back(static_cast<VertexId>(g.vertex_of(u)));
  g.adjacency = make_csr(std::move(adj));
  return g;
}

BMetricReport b_metrics(const BHurwitzGraph& g, unsigned threads, std::optional<std::size_t> reference_antipodes,
                        int diameter_max_n) {
  const auto start = std::chrono::steady_clock::now();
  BMetricReport r;
  r.n = g.n;
  r.count = g.words.size();
  r.expected_count = 1;
  for (int k = 0; k < g.n; ++k) r.expected_count *= static_cast<std::size_t>(g.n);
  const auto ecc = eccentricities(g.adjacency, threads);
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  if (g.n <= diameter_max_n) r.diameter = *std::max_element(ecc.begin(), ecc.end());
  r.conjecture_radius = static_cast<int>(binomial(g.n, 2)) + 1;
  r.radius_matches_conjecture = r.radius == r.conjecture_radius;

  // Without a type B phi the only grading is distance from e, so the top
  // layer and the farthest vertices are the same set.
  std::vector<int> dist;
  r.ecc_e = bfs(g.adjacency, g.base_vertex(), dist);
  r.antipodes_e = static_cast<std::size_t>(std::count(dist.begin(), dist.end(), r.ecc_e));
  r.antipodes_max_rank = r.antipodes_e;
  r.reference_antipodes = reference_antipodes;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ncchain
