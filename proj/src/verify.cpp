#include "ncchain/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/chain_map.hpp"
#include "ncchain/hurwitz_metrics.hpp"
#include "ncchain/weak_order.hpp"

namespace ncchain {

namespace {

constexpr std::size_t kReportedFailures = 5;

class Checker {
public:
  explicit Checker(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failed;
    if (r_.failures.size() < kReportedFailures) r_.failures.push_back(what());
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

private:
  SuiteResult& r_;
};

std::string w_str(const FactorWord& w) { return "[" + to_string(w) + "]"; }

std::uint64_t power(int base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) r *= std::uint64_t(base);
  return r;
}

struct Context {
  int n;
  unsigned threads;
  std::vector<FactorWord> words;
};

void suite_chains(const Context& ctx, Checker& c) {
  const auto& words = ctx.words;
  c.check(words.size() == power(ctx.n, ctx.n - 2), [&] { return "|F_n| = " + std::to_string(words.size()); });
  const Permutation cycle = Permutation::long_cycle(ctx.n);
  for (const auto& w : words) {
    c.check(is_valid_chain(w) && product(w) == cycle, [&] { return "invalid chain " + w_str(w); });
    const auto tree = tree_of_word(w);
    c.check(tree.is_tree() && tree.is_noncrossing(), [&] { return "G(w) not a non-crossing tree " + w_str(w); });
  }
}

void suite_moves(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  for (const auto& w : ctx.words) {
    for (int i = 1; i <= n - 2; ++i) {
      const auto r = hurwitz_right(w, i);
      c.check(hurwitz_left(r, i) == w && hurwitz_right(hurwitz_left(w, i), i) == w,
              [&] { return "L_i is not inverse to R_i, i=" + std::to_string(i) + " " + w_str(w); });
      const auto r2 = hurwitz_right(r, i);
      c.check(r2 == w || hurwitz_right(r2, i) == w,
              [&] { return "R_i orbit longer than 3, i=" + std::to_string(i) + " " + w_str(w); });
      if (i <= n - 3) {
        const auto lhs = hurwitz_right(hurwitz_right(hurwitz_right(w, i), i + 1), i);
        const auto rhs = hurwitz_right(hurwitz_right(hurwitz_right(w, i + 1), i), i + 1);
        c.check(lhs == rhs, [&] { return "braid relation fails, i=" + std::to_string(i) + " " + w_str(w); });
      }
    }
    const auto iw = involution_iota(w);
    c.check(is_valid_chain(iw) && involution_iota(iw) == w, [&] { return "iota not an involution " + w_str(w); });
    c.check(rank(iw) == rank(w), [&] { return "iota changes rank " + w_str(w); });
    const auto inb = neighbors(iw);
    for (const auto& u : neighbors(w))
      c.check(std::binary_search(inb.begin(), inb.end(), involution_iota(u)),
              [&] { return "iota does not preserve edge " + w_str(w) + " -- " + w_str(u); });
  }
}

// The three admissible shapes of a non-commuting pair (t_j, t_k), j < k.
bool admissible_pair(Transposition x, Transposition y) {
  if (x.a == y.a && y.b < x.b) return true;  // ((a,c),(a,b))
  if (x.b == y.b && y.a < x.a) return true;  // ((b,c),(a,c))
  if (x.b == y.a) return true;               // ((a,b),(b,c))
  return false;
}

// Right-hand side of the characterization of inversions of phi(w) at
// positions j < k.
bool predicted_inversion(const FactorWord& w, const GeometricTree& tree, int j, int k) {
  const Transposition x = w.at(j), y = w.at(k);
  if (x.a == y.a && y.b < x.b) return true;
  if (x.b == y.b && y.a < x.a) return true;
  if (y.b < x.a) return true;
  if (x.a < y.a && y.b < x.b) return tree.component_without(x, x.a)[y.a];
  if (y.a < x.a && x.b < y.b) return !tree.component_without(y, y.a)[x.a];
  return false;
}

void suite_phi(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const int m = n - 1;
  std::map<Permutation, std::uint64_t> fibers;
  for (const auto& w : ctx.words) {
    const Permutation p = phi(w);
    ++fibers[p];
    const auto tree = tree_of_word(w);
    for (int j = 1; j <= m; ++j) {
      const auto lr = local_range_check(w, j);
      c.check(lr.in_range && lr.component_rule, [&] { return "local range fails at " + std::to_string(j) + " " + w_str(w); });
      for (int k = j + 1; k <= m; ++k) {
        if (!w.at(j).commutes_with(w.at(k)))
          c.check(admissible_pair(w.at(j), w.at(k)), [&] { return "forbidden pair shape " + w_str(w); });
        c.check((p(j) > p(k)) == predicted_inversion(w, tree, j, k),
                [&] { return "inversion characterization fails at (" + std::to_string(j) + "," + std::to_string(k) + ") " + w_str(w); });
      }
    }
    for (int j = 1; j <= n - 2; ++j) {
      const Transposition x = w.at(j), y = w.at(j + 1);
      const bool r_fixed = x.a == y.a && y.b < x.b;
      const bool l_fixed = x.b == y.b && y.a < x.a;
      const Permutation ps = p.swapped_positions(j, j + 1);
      c.check(phi(hurwitz_right(w, j)) == (r_fixed ? p : ps), [&] { return "phi(R_j w) rule fails " + w_str(w); });
      c.check(phi(hurwitz_left(w, j)) == (l_fixed ? p : ps), [&] { return "phi(L_j w) rule fails " + w_str(w); });
    }
  }
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) images[k] = k + 1;
  do {
    const Permutation pi = Permutation::from_images(images);
    const auto it = fibers.find(pi);
    const std::uint64_t direct = it == fibers.end() ? 0 : it->second;
    c.check(fiber_count(pi).count == direct, [&] { return "N(pi) recursion differs from fiber size at " + pi.one_line(); });
  } while (std::next_permutation(images.begin(), images.end()));
  c.check(fibers[Permutation::identity(m)] == 1, [] { return "phi^{-1}(id) is not {e}"; });
}

void suite_inversions(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const int m = n - 1;
  std::map<std::pair<PairSet, PairSet>, FactorWord> by_inv_right;
  for (const auto& w : ctx.words) {
    InversionTable t;
    try {
      t = inversion_table(w);
    } catch (const std::exception& e) {
      c.check(false, [&] { return std::string("inversion table: ") + e.what() + " " + w_str(w); });
      continue;
    }
    c.check(static_cast<int>(t.pairs.size()) == t.pi.inversions(), [&] { return "unlabelled inversion " + w_str(w); });
    const auto tt = inversion_table(involution_iota(w));
    c.check(tt.right() == conjugate_by_longest(t.left(), m) && tt.left() == conjugate_by_longest(t.right(), m),
            [&] { return "iota duality fails " + w_str(w); });
    bool round_trip = false;
    try {
      round_trip = reconstruct(n, t.all(), t.left()) == w;
    } catch (const NoSuchChain&) {
    }
    c.check(round_trip, [&] { return "reconstruct(Inv, Inv_L) does not return " + w_str(w); });
    const auto [it, fresh] = by_inv_right.emplace(std::make_pair(t.all(), t.right()), w);
    c.check(fresh, [&] { return "(Inv, Inv_R) shared by " + w_str(w) + " and " + w_str(it->second); });
  }
  if (n == 4) {
    const FactorWord u(4, {{1, 2}, {3, 4}, {2, 4}});
    const FactorWord v(4, {{3, 4}, {1, 2}, {2, 4}});
    const auto tu = inversion_table(u), tv = inversion_table(v);
    c.check(tu.left() == tv.left() && tu.right() == tv.right() && u != v,
            [] { return "(Inv_L, Inv_R) witness pair no longer collides"; });
  }
}

void suite_hecke(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const int m = n - 1;
  for (const auto& w : ctx.words) {
    const Permutation p = phi(w);
    for (int i = 1; i <= n - 2; ++i) {
      const auto di = down_operator(w, i);
      c.check(down_operator(di, i) == di, [&] { return "D_i^2 != D_i, i=" + std::to_string(i) + " " + w_str(w); });
      c.check(phi(di) == (p.has_descent(i) ? p.swapped_positions(i, i + 1) : p),
              [&] { return "phi(D_i w) descent rule fails " + w_str(w); });
      for (int j = i + 2; j <= n - 2; ++j)
        c.check(down_operator(di, j) == down_operator(down_operator(w, j), i),
                [&] { return "D_i D_j != D_j D_i " + w_str(w); });
      if (i + 1 <= n - 2) {
        const auto lhs = down_operator(down_operator(di, i + 1), i);
        const auto rhs = down_operator(down_operator(down_operator(w, i + 1), i), i + 1);
        c.check(lhs == rhs, [&] { return "Hecke braid relation fails, i=" + std::to_string(i) + " " + w_str(w); });
      }
    }
  }
  if (n <= 5) {
    WordIndex index(ctx.words);
    std::set<std::vector<std::size_t>> actions;
    std::size_t count = 0;
    std::vector<int> images(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) images[k] = k + 1;
    do {
      const Permutation pi = Permutation::from_images(images);
      std::vector<std::size_t> action;
      for (const auto& w : ctx.words) action.push_back(index.index_of(down_pi(w, pi)));
      actions.insert(std::move(action));
      ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    c.check(actions.size() == count, [] { return "distinct D_pi act identically (not faithful)"; });
  }
}

void suite_weak(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const HasseDiagram h(n);
  const auto& index = h.index();
  std::size_t rank_zero = 0;
  for (std::size_t v = 0; v < h.size(); ++v) rank_zero += h.rank_of(v) == 0;
  c.check(rank_zero == 1 && h.rank_of(index.index_of(FactorWord::base(n))) == 0, [] { return "e is not the unique minimum"; });

  for (std::size_t v = 0; v < h.size(); ++v) {
    const auto& w = index[v];
    const int r = h.rank_of(v);
    for (int j = 1; j <= n - 2; ++j) {
      const bool right_up = rank(hurwitz_right(w, j)) > r;
      const bool left_up = rank(hurwitz_left(w, j)) > r;
      c.check(right_up == left_up, [&] { return "wedge rule fails, j=" + std::to_string(j) + " " + w_str(w); });
      std::vector<int> orbit{r};
      for (auto u = hurwitz_right(w, j); u != w; u = hurwitz_right(u, j)) orbit.push_back(rank(u));
      std::sort(orbit.begin(), orbit.end());
      const bool shape = (orbit.size() == 2 && orbit[1] == orbit[0] + 1) ||
                         (orbit.size() == 3 && orbit[1] == orbit[0] + 1 && orbit[2] == orbit[0] + 1);
      c.check(shape, [&] { return "R_j orbit is neither a pair nor a wedge " + w_str(w); });
    }
    const auto tv = inversion_table(w);
    for (std::size_t u : h.down(v)) {
      const auto tu = inversion_table(index[u]);
      const auto sub = [](const PairSet& a, const PairSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
      c.check(sub(tu.all(), tv.all()) && sub(tu.right(), tv.right()) && sub(tu.left(), tv.left()),
              [&] { return "monotonicity fails on cover " + w_str(index[u]) + " < " + w_str(w); });
    }
    for (const auto& u : neighbors(w)) {
      const std::size_t k = index.index_of(u);
      const bool hasse = std::find(h.up(v).begin(), h.up(v).end(), k) != h.up(v).end() ||
                         std::find(h.down(v).begin(), h.down(v).end(), k) != h.down(v).end();
      if (!hasse)
        c.check(h.rank_of(k) == r && is_deleted_edge_pattern(w, u),
                [&] { return "non-Hasse edge of unexpected shape " + w_str(w) + " -- " + w_str(u); });
    }
  }
  // The Hasse diagram spans: every word is reachable from e by covers.
  std::vector<bool> seen(h.size(), false);
  std::vector<std::size_t> stack{index.index_of(FactorWord::base(n))};
  seen[stack.back()] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto* list : {&h.up(x), &h.down(x)})
      for (std::size_t y : *list)
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
  }
  c.check(std::ranges::all_of(seen, [](bool b) { return b; }), [] { return "Hasse diagram is not connected"; });
}

void suite_intervals(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const auto maxima = maximal_elements(n);
  c.check(maxima.size() == catalan_number(n - 1), [&] { return "|max| = " + std::to_string(maxima.size()); });
  const Transposition outer(1, n);
  for (const auto& w0 : maxima) {
    c.check(std::ranges::find(w0.factors(), outer) != w0.factors().end(), [&] { return "maximal word lacks (1,n) " + w_str(w0); });
    c.check(interval_isomorphism_check(w0), [&] { return "[e, w0] is not the weak order on S_{n-1}, w0=" + w_str(w0); });
  }
}

// Shifts every label of a factor sequence by -offset.
FactorWord relabel(int n, std::span<const Transposition> f, int offset) {
  std::vector<Transposition> g;
  for (auto t : f) g.emplace_back(t.a - offset, t.b - offset);
  return FactorWord(n, g);
}

void suite_catalan(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const int m = n - 1;
  const auto tc = qt_catalan(m);
  const auto cr = carlitz_riordan(m);
  auto poly = [](const QTPolynomial& p) { return p.str(); };
  c.check(max_statistics(m) == tc, [&] { return "max-element (inv_R, inv_L) sum " + poly(max_statistics(m)) + " != " + poly(tc); });
  c.check(max_statistics_ln(m) == cr, [&] { return "max-element inv_L+inv_N sum differs from C_n(q)"; });
  c.check(tc == tc.swapped(), [] { return "tC_n not symmetric in q,t"; });
  c.check(cr == tc.reflected_q(static_cast<int>(binomial(m, 2))), [] { return "C_n(q) != q^binom(n,2) tC_n(1/q, 1)"; });
  c.check(static_cast<std::uint64_t>(tc.coefficient_sum()) == catalan_number(m), [] { return "tC_n(1,1) != C_n"; });
  c.check(dyck_generating_function(m) == tc, [] { return "Dyck area/bmaj sum differs from tC_n"; });
  c.check(tree_statistics(n) == tc, [] { return "tree edge-pair sum differs from tC_{n-1}"; });

  // Each maximal word splits at its (1,n) factor into two maximal words on
  // the top and bottom label blocks.
  for (const auto& w : maximal_elements(n)) {
    int pos = 1;
    while (w.at(pos) != Transposition(1, n)) ++pos;
    const int k = pos - 1;
    const auto f = w.factors();
    bool ok = true;
    for (int i = 0; i < k; ++i) ok = ok && f[i].a >= n - k;
    for (int i = pos; i < m; ++i) ok = ok && f[i].b <= n - k - 1;
    if (ok && k > 0) {
      const auto top = relabel(k + 1, f.subspan(0, k), n - k - 1);
      ok = is_valid_chain(top) && is_maximal(top);
    }
    if (ok && pos < m) {
      const auto bottom = relabel(n - k - 1, f.subspan(pos), 0);
      ok = is_valid_chain(bottom) && is_maximal(bottom);
    }
    if (ok) {
      const auto t = inversion_table(w);
      const Permutation inv = t.pi.inverse();
      for (const auto& pr : t.pairs) {
        const int pj = inv(pr.j), pi = inv(pr.i);  // pj < pi as positions
        const bool straddles = (pj < pos && pi > pos) || pj == pos || pi == pos;
        if (!straddles) continue;
        InversionKind want = InversionKind::Neutral;
        if (pi == pos) want = InversionKind::Left;
        if (pj == pos) want = InversionKind::Right;
        ok = ok && pr.kind == want;
      }
    }
    c.check(ok, [&] { return "maximal word does not split at (1,n) " + w_str(w); });
  }
}

void suite_trees(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const auto trees = alternating_noncrossing_trees(n);
  c.check(trees.size() == catalan_number(n - 1), [&] { return "alternating tree count " + std::to_string(trees.size()); });
  for (const auto& t : trees) {
    FactorWord w;
    try {
      w = word_of_tree(t);
    } catch (const std::exception& e) {
      c.check(false, [&] { return std::string("word_of_tree: ") + e.what(); });
      continue;
    }
    c.check(is_valid_chain(w) && is_maximal(w) && tree_of_word(w).edges() == t.edges(),
            [&] { return "word_of_tree is not a right inverse at " + w_str(w); });
  }
  for (const auto& w : maximal_elements(n)) {
    const auto t = tree_of_word(w);
    c.check(is_alternating(t) && word_of_tree(t) == w, [&] { return "word_of_tree is not a left inverse at " + w_str(w); });
  }
}

void suite_metrics(const Context& ctx, Checker& c) {
  const int n = ctx.n;
  const auto g = build_graph(n, std::max(n, kDefaultGraphCap));
  c.check(g.adjacency().is_symmetric(), [] { return "adjacency not symmetric"; });
  const auto report = radius_and_diameter(g, ctx.threads);
  c.check(report.radius_matches, [&] { return "radius " + std::to_string(report.radius) + " != " + std::to_string(report.radius_formula); });
  c.check(report.diameter_within_bounds, [&] { return "diameter " + std::to_string(report.diameter) + " outside bounds"; });
  c.note("diameter " + std::to_string(report.diameter) + ", conjectured " + std::to_string(report.conjecture_diameter) +
         (report.diameter_matches_conjecture ? " (match)" : " (mismatch)"));

  const auto contraction = contraction_report(g);
  c.check(contraction.ok(), [&] { return std::to_string(contraction.violations) + " contraction violations"; });

  const std::size_t e = g.base_vertex();
  const auto from_e = eccentricity(g, e);
  for (std::size_t v = 0; v < g.size(); ++v)
    c.check(from_e.distances[v] == rank(g.word(v)), [&] { return "d(e,w) != rank(w) at " + w_str(g.word(v)); });
  std::vector<FactorWord> anti;
  for (std::size_t v : antipodes(g, e)) anti.push_back(g.word(v));
  c.check(anti == maximal_elements(n), [] { return "antipodes of e differ from the maximal elements"; });

  // Bubble-sort meet paths: all pairs for small n, sampled sources otherwise.
  const int bound = diameter_upper_bound(n);
  std::vector<std::size_t> sources;
  if (g.size() <= 125) {
    for (std::size_t v = 0; v < g.size(); ++v) sources.push_back(v);
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int k = 0; k < 4; ++k) sources.push_back(pick(rng));
  }
  std::vector<int> dist;
  for (std::size_t s : sources) {
    bfs(g.adjacency(), s, dist);
    const std::size_t step = g.size() <= 125 ? 1 : std::max<std::size_t>(1, g.size() / 500);
    for (std::size_t t = 0; t < g.size(); t += step) {
      const auto& v = g.word(s);
      const auto& w = g.word(t);
      MeetPath path;
      try {
        path = bubble_sort_meet(v, w);
      } catch (const std::exception& ex) {
        c.check(false, [&] { return std::string("bubble sort: ") + ex.what() + " on " + w_str(v) + " / " + w_str(w); });
        continue;
      }
      FactorWord x = v, y = w;
      for (auto mv : path.moves_v) x = apply_move(x, mv);
      for (auto mv : path.moves_w) y = apply_move(y, mv);
      const auto len = static_cast<int>(path.length());
      c.check(x == y && x == path.meet && len <= bound && len >= dist[t],
              [&] { return "bubble sort path of length " + std::to_string(len) + " on " + w_str(v) + " / " + w_str(w); });
    }
  }
}

void suite_converse(const Context& ctx, Checker& c) {
  const HasseDiagram h(ctx.n);
  const auto witnesses = converse_criterion_search(h, 4);
  if (witnesses.empty())
    c.note("no counterexample to the converse of the monotonicity criterion");
  else
    for (const auto& [u, v] : witnesses)
      c.note("inversion sets contained but not below: " + w_str(u) + " vs " + w_str(v));
}

using SuiteFn = void (*)(const Context&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"chains", suite_chains},   {"moves", suite_moves},         {"phi", suite_phi},
      {"inversions", suite_inversions}, {"hecke", suite_hecke},   {"weak", suite_weak},
      {"intervals", suite_intervals}, {"catalan", suite_catalan}, {"trees", suite_trees},
      {"metrics", suite_metrics}, {"converse", suite_converse},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<SuiteResult> run_verification(int n, const std::string& only, unsigned threads) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n must be in 2.." + std::to_string(kMaxN));
  if (!only.empty() && std::ranges::find(suite_names(), only) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + only + "'");
  const Context ctx{n, threads, enumerate_Fn(n)};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) {
    if (!only.empty() && name != only) continue;
    SuiteResult r;
    r.name = name;
    Checker c(r);
    try {
      fn(ctx, c);
    } catch (const std::exception& e) {
      c.check(false, [&] { return std::string("exception: ") + e.what(); });
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ncchain
