#include "ncchain/catalan_enum.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "ncchain/chain_map.hpp"
#include "ncchain/weak_order.hpp"

namespace ncchain {

// ------------------------------------------------------------- enumeration

namespace {

// For n <= 9 a word packs into 64 bits, one nibble per label, most
// significant first, so integer order equals canonical word order.
constexpr int kPackableN = 9;

std::uint64_t pack(const FactorWord& w) {
  std::uint64_t key = 0;
  for (auto t : w.factors()) key = (key << 8) | (std::uint64_t(t.a - 1) << 4) | std::uint64_t(t.b - 1);
  return key;
}

FactorWord unpack(int n, std::uint64_t key) {
  std::vector<Transposition> f(static_cast<std::size_t>(n - 1));
  for (int k = n - 2; k >= 0; --k) {
    f[static_cast<std::size_t>(k)] = Transposition(int((key >> 4) & 0xF) + 1, int(key & 0xF) + 1);
    key >>= 8;
  }
  return FactorWord(n, f);
}

// Breadth-first closure under Hurwitz moves. Neighbours of a BFS layer lie in
// the previous, current or next layer, so only three layers are needed for
// deduplication.
template <typename Key, typename Encode, typename Decode>
std::vector<Key> closure(int n, Encode encode, Decode decode) {
  std::vector<Key> all;
  std::vector<Key> prev;
  std::vector<Key> cur{encode(FactorWord::base(n))};
  while (!cur.empty()) {
    all.insert(all.end(), cur.begin(), cur.end());
    std::vector<Key> next;
    for (const Key& k : cur)
      for (const FactorWord& u : neighbors(decode(k))) next.push_back(encode(u));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<Key> tmp;
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(), std::back_inserter(tmp));
    next.clear();
    std::set_difference(tmp.begin(), tmp.end(), prev.begin(), prev.end(), std::back_inserter(next));
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<FactorWord> enumerate_Fn(int n, int max_n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  if (n > max_n)
    throw ResourceLimitExceeded("enumeration of F_" + std::to_string(n) + " exceeds the cap n <= " +
                                std::to_string(max_n));
  if (n <= kPackableN) {
    const auto keys = closure<std::uint64_t>(n, pack, [n](std::uint64_t k) { return unpack(n, k); });
    std::vector<FactorWord> words;
    words.reserve(keys.size());
    for (auto k : keys) words.push_back(unpack(n, k));
    return words;
  }
  return closure<FactorWord>(n, [](const FactorWord& w) { return w; }, [](const FactorWord& w) { return w; });
}

WordIndex::WordIndex(std::vector<FactorWord> sorted_words) : words_(std::move(sorted_words)) {
  if (!std::is_sorted(words_.begin(), words_.end())) std::sort(words_.begin(), words_.end());
}

std::optional<std::size_t> WordIndex::find(const FactorWord& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t WordIndex::index_of(const FactorWord& w) const {
  if (auto k = find(w)) return *k;
  throw std::out_of_range("word not in index: " + to_string(w));
}

// ----------------------------------------------------------------- counting

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

std::uint64_t catalan_number(int n) { return binomial(2 * n, n) / std::uint64_t(n + 1); }

Permutation pattern(const Permutation& pi, const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int pos = 1; pos <= pi.size(); ++pos) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), pi(pos));
    if (it != sorted.end() && *it == pi(pos)) out.push_back(int(it - sorted.begin()) + 1);
  }
  return Permutation::from_images(out);
}

namespace {

std::uint64_t fiber_recursive(const Permutation& pi, std::map<Permutation, std::uint64_t>& memo) {
  const int m = pi.size();
  if (m <= 1) return 1;
  if (auto it = memo.find(pi); it != memo.end()) return it->second;
  const int j = pi(1) + 1;
  std::uint64_t total = 0;
  for (int i = 1; i < j; ++i) {
    std::vector<int> a_set, b_set;
    for (int v = i; v <= j - 2; ++v) a_set.push_back(v);
    for (int v = 1; v <= i - 1; ++v) b_set.push_back(v);
    for (int v = j; v <= m; ++v) b_set.push_back(v);
    total += fiber_recursive(pattern(pi, a_set), memo) * fiber_recursive(pattern(pi, b_set), memo);
  }
  memo.emplace(pi, total);
  return total;
}

}  // namespace

FiberCount fiber_count(const Permutation& pi) {
  std::map<Permutation, std::uint64_t> memo;
  return {pi, fiber_recursive(pi, memo)};
}

// ------------------------------------------------------------- polynomials

QTPolynomial qt_catalan(int n) {
  std::vector<QTPolynomial> c{QTPolynomial::one()};
  for (int m = 0; m < n; ++m) {
    QTPolynomial next;
    for (int k = 0; k <= m; ++k) next += (c[std::size_t(k)] * c[std::size_t(m - k)]).shifted(k, m - k);
    c.push_back(std::move(next));
  }
  return c[std::size_t(n)];
}

QTPolynomial carlitz_riordan(int n) {
  std::vector<QTPolynomial> c{QTPolynomial::one()};
  for (int m = 0; m < n; ++m) {
    QTPolynomial next;
    for (int k = 0; k <= m; ++k) next += (c[std::size_t(k)] * c[std::size_t(m - k)]).shifted((k + 1) * (m - k), 0);
    c.push_back(std::move(next));
  }
  return c[std::size_t(n)];
}

QTPolynomial max_statistics(int n) {
  QTPolynomial sum;
  for (const auto& w : maximal_elements(n + 1)) {
    const auto table = inversion_table(w);
    sum.add_term(table.count(InversionKind::Right), table.count(InversionKind::Left), 1);
  }
  return sum;
}

QTPolynomial max_statistics_ln(int n) {
  QTPolynomial sum;
  for (const auto& w : maximal_elements(n + 1)) {
    const auto table = inversion_table(w);
    sum.add_term(table.count(InversionKind::Left) + table.count(InversionKind::Neutral), 0, 1);
  }
  return sum;
}

// ------------------------------------------------------- alternating trees

bool is_alternating(const GeometricTree& tree) {
  for (int v = 1; v <= tree.n(); ++v) {
    bool above = false, below = false;
    for (int u : tree.neighbors_of(v)) (u > v ? above : below) = true;
    if (above && below) return false;
  }
  return true;
}

namespace {

void append_trees(int lo, int hi, std::vector<std::vector<Transposition>>& out) {
  if (lo == hi) {
    out.emplace_back();
    return;
  }
  for (int k = lo; k < hi; ++k) {
    std::vector<std::vector<Transposition>> left, right;
    append_trees(lo, k, left);
    append_trees(k + 1, hi, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        auto edges = l;
        edges.insert(edges.end(), r.begin(), r.end());
        edges.emplace_back(lo, hi);
        out.push_back(std::move(edges));
      }
    }
  }
}

void validate_alternating_tree(const GeometricTree& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("not a tree");
  if (!tree.is_noncrossing()) throw std::invalid_argument("crossing");
  if (!is_alternating(tree)) throw std::invalid_argument("not alternating");
}

// Vertices reachable from `from` inside [lo, hi] without using `removed`.
std::vector<int> component_in(const GeometricTree& tree, int lo, int hi, Transposition removed, int from) {
  std::vector<bool> seen(static_cast<std::size_t>(tree.n() + 1), false);
  std::vector<int> stack{from}, comp;
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (int u : tree.neighbors_of(v)) {
      if (u < lo || u > hi || Transposition(u, v) == removed || seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = true;
      stack.push_back(u);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

void order_edges(const GeometricTree& tree, int lo, int hi, std::vector<Transposition>& out) {
  if (lo == hi) return;
  const Transposition outer(lo, hi);
  if (!tree.has_edge(lo, hi)) throw std::invalid_argument("not alternating");
  const auto low = component_in(tree, lo, hi, outer, lo);
  const int k = low.back();
  if (static_cast<int>(low.size()) != k - lo + 1) throw std::invalid_argument("crossing");
  order_edges(tree, k + 1, hi, out);
  out.push_back(outer);
  order_edges(tree, lo, k, out);
}

}  // namespace

std::vector<GeometricTree> alternating_noncrossing_trees(int n) {
  std::vector<std::vector<Transposition>> edge_sets;
  append_trees(1, n, edge_sets);
  std::vector<GeometricTree> trees;
  trees.reserve(edge_sets.size());
  for (auto& e : edge_sets) trees.emplace_back(n, std::move(e));
  return trees;
}

FactorWord word_of_tree(const GeometricTree& tree) {
  validate_alternating_tree(tree);
  std::vector<Transposition> order;
  order_edges(tree, 1, tree.n(), order);
  return FactorWord(tree.n(), order);
}

EdgePairStats edge_pair_statistics(const GeometricTree& tree) {
  validate_alternating_tree(tree);
  EdgePairStats stats;
  const auto& edges = tree.edges();
  for (std::size_t x = 0; x < edges.size(); ++x) {
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      const Transposition e = edges[x];
      const Transposition f = edges[y];
      if (e.b < f.a || f.b < e.a) {
        ++stats.neutral;
        continue;
      }
      Transposition outer = e, inner = f;
      if (!(outer.a <= inner.a && inner.b <= outer.b)) std::swap(outer, inner);
      if (!(outer.a <= inner.a && inner.b <= outer.b))
        throw std::logic_error("edge pair is neither nested nor disjoint");
      const auto side_a = tree.component_without(outer, outer.a);
      if (side_a[inner.a] && side_a[inner.b])
        ++stats.right;
      else
        ++stats.left;
    }
  }
  return stats;
}

QTPolynomial tree_statistics(int n) {
  QTPolynomial sum;
  for (const auto& t : alternating_noncrossing_trees(n)) {
    const auto s = edge_pair_statistics(t);
    sum.add_term(s.right, s.left, 1);
  }
  return sum;
}

// -------------------------------------------------------------- Dyck paths

DyckPath::DyckPath(std::vector<int> steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2 != 0) throw std::invalid_argument("Dyck path has odd length");
  int h = 0;
  for (int s : steps_) {
    if (s != 1 && s != -1) throw std::invalid_argument("Dyck steps must be +1 or -1");
    h += s;
    if (h < 0) throw std::invalid_argument("Dyck path goes below the baseline");
  }
  if (h != 0) throw std::invalid_argument("Dyck path does not return to the baseline");
}

DyckPath DyckPath::parse(const std::string& s) {
  std::vector<int> steps;
  for (char ch : s) {
    if (ch == 'U' || ch == 'u' || ch == '(')
      steps.push_back(1);
    else if (ch == 'D' || ch == 'd' || ch == ')')
      steps.push_back(-1);
    else
      throw std::invalid_argument("unexpected character in Dyck word");
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
  std::string s;
  for (int e : steps_) s += e > 0 ? 'U' : 'D';
  return s;
}

namespace {

void extend_paths(std::vector<int>& prefix, int ups, int height, int n, std::vector<DyckPath>& out) {
  if (static_cast<int>(prefix.size()) == 2 * n) {
    out.emplace_back(prefix);
    return;
  }
  if (ups < n) {
    prefix.push_back(1);
    extend_paths(prefix, ups + 1, height + 1, n, out);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(-1);
    extend_paths(prefix, ups, height - 1, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<int> prefix;
  extend_paths(prefix, 0, 0, n, out);
  return out;
}

DyckStats dyck_statistics(const DyckPath& p) {
  const auto& e = p.steps();
  const int len = static_cast<int>(e.size());
  const int n = p.semilength();
  long down_up = 0, up_down = 0, ups = 0, downs = 0;
  for (int s : e) {
    if (s > 0) {
      down_up += downs;
      ++ups;
    } else {
      up_down += ups;
      ++downs;
    }
  }
  const long area_low = long(binomial(n, 2)) - down_up;
  const long area_high = up_down - long(binomial(n + 1, 2));
  if (area_low != area_high) throw std::logic_error("area forms disagree for " + p.str());

  int bmaj = 0;
  for (int i = 1; i < len; ++i) {  // 1-based i with e_i = -1, e_{i+1} = +1
    if (!(e[std::size_t(i - 1)] < 0 && e[std::size_t(i)] > 0)) continue;
    int partial = 0, k = 0;
    for (int t = 1; i + t <= len; ++t) {
      partial += e[std::size_t(i + t - 1)];
      if (partial < 0) break;
      if (t % 2 == 0) k = t / 2;
    }
    bmaj += k;
  }
  return {static_cast<int>(area_low), bmaj};
}

QTPolynomial dyck_generating_function(int n) {
  QTPolynomial sum;
  for (const auto& p : dyck_paths(n)) {
    const auto s = dyck_statistics(p);
    sum.add_term(s.area, s.bmaj, 1);
  }
  return sum;
}

}  // namespace ncchain
