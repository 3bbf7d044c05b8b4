#include "ncchain/chain_map.hpp"

#include <algorithm>
#include <array>

namespace ncchain {

PartialProducts partial_products(const FactorWord& w) {
  const int n = w.n();
  std::vector<Permutation> sigma(static_cast<std::size_t>(n));
  sigma[static_cast<std::size_t>(n - 1)] = Permutation::identity(n);
  for (int j = n - 1; j >= 1; --j) {
    const Transposition t = w.at(j);
    const Permutation tj = Permutation::from_cycles(n, {{t.a, t.b}});
    sigma[static_cast<std::size_t>(j - 1)] = tj * sigma[static_cast<std::size_t>(j)];
  }
  return PartialProducts(std::move(sigma));
}

Permutation phi(const FactorWord& w) {
  const int n = w.n();
  const int m = n - 1;
  // inv[x] tracks sigma_{j+1}^{-1}(x); sigma_j^{-1} = sigma_{j+1}^{-1} t_j.
  std::array<int, kMaxN + 1> inv{};
  for (int x = 1; x <= n; ++x) inv[static_cast<std::size_t>(x)] = x;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int j = m; j >= 1; --j) {
    const Transposition t = w.at(j);
    images[static_cast<std::size_t>(j - 1)] = inv[t.a];
    std::swap(inv[t.a], inv[t.b]);
  }
  try {
    return Permutation::from_images(images);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("phi is defined on F_n only: " + to_string(w));
  }
}

int rank(const FactorWord& w) { return phi(w).inversions(); }

PairSet inversion_set(const Permutation& p) {
  const Permutation pinv = p.inverse();
  PairSet out;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (pinv(i) > pinv(j)) out.emplace(i, j);
  return out;
}

PairSet conjugate_by_longest(const PairSet& pairs, int m) {
  PairSet out;
  for (auto [i, j] : pairs) out.emplace(m + 1 - j, m + 1 - i);
  return out;
}

PairSet InversionTable::all() const {
  PairSet s;
  for (const auto& p : pairs) s.emplace(p.i, p.j);
  return s;
}

PairSet InversionTable::of_kind(InversionKind k) const {
  PairSet s;
  for (const auto& p : pairs)
    if (p.kind == k) s.emplace(p.i, p.j);
  return s;
}

int InversionTable::count(InversionKind k) const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [k](const auto& p) { return p.kind == k; }));
}

InversionTable inversion_table(const FactorWord& w) {
  InversionTable table{phi(w), {}};
  const Permutation pinv = table.pi.inverse();
  const int m = table.pi.size();
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (pinv(i) < pinv(j)) continue;
      const Transposition ii = w.at(pinv(i));
      const Transposition ij = w.at(pinv(j));
      InversionKind kind;
      if (ij.a <= ii.a && ii.b <= ij.b)
        kind = InversionKind::Right;
      else if (ii.a <= ij.a && ij.b <= ii.b)
        kind = InversionKind::Left;
      else if (ii.b < ij.a || ij.b < ii.a)
        kind = InversionKind::Neutral;
      else
        throw std::logic_error("unclassifiable inversion in " + to_string(w));
      table.pairs.push_back({i, j, kind});
    }
  }
  return table;
}

LocalRange local_range_check(const FactorWord& w, int j) {
  if (j < 1 || j > w.length()) throw std::out_of_range("factor position out of range");
  const Permutation p = phi(w);
  LocalRange r;
  r.factor = w.at(j);
  r.value = p(j);
  r.in_range = r.factor.a <= r.value && r.value < r.factor.b;
  r.component_rule = true;

  const int a = r.factor.a;
  const int d = r.factor.b;
  const GeometricTree tree = tree_of_word(w);
  const std::vector<bool> side_d = tree.component_without(r.factor, d);
  for (int k = 1; k <= w.length(); ++k) {
    if (k == j) continue;
    const int b = w.at(k).a;
    const int c = w.at(k).b;
    if (!(a <= b && c <= d)) continue;
    const bool in_d = side_d[static_cast<std::size_t>(b)] && side_d[static_cast<std::size_t>(c)];
    const bool ok = in_d ? (a <= r.value && r.value < b) : (c <= r.value && r.value < d);
    r.component_rule = r.component_rule && ok;
  }
  return r;
}

namespace {

// Recovers the permutation whose inversion set is `inv`, or throws.
Permutation permutation_from_inversions(int m, const PairSet& inv) {
  for (auto [i, j] : inv)
    if (i < 1 || j > m || i >= j) throw NoSuchChain("inversion pair out of range");
  // position of v = #values placed before v
  std::vector<int> images(static_cast<std::size_t>(m), 0);
  std::vector<bool> filled(static_cast<std::size_t>(m), false);
  for (int v = 1; v <= m; ++v) {
    int before = 0;
    for (int u = 1; u < v; ++u) before += inv.count({u, v}) == 0;
    for (int u = v + 1; u <= m; ++u) before += inv.count({v, u}) != 0;
    if (filled[static_cast<std::size_t>(before)]) throw NoSuchChain("not an inversion set");
    filled[static_cast<std::size_t>(before)] = true;
    images[static_cast<std::size_t>(before)] = v;
  }
  Permutation p = Permutation::from_images(images);
  if (inversion_set(p) != inv) throw NoSuchChain("not an inversion set");
  return p;
}

std::vector<Transposition> peel(int n, const PairSet& inv, const PairSet& inv_left) {
  if (n == 1) {
    if (!inv.empty() || !inv_left.empty()) throw NoSuchChain("nonempty data for F_1");
    return {};
  }
  const int m = n - 1;
  const Permutation p = permutation_from_inversions(m, inv);
  const int i = p(m);
  int lefts = 0;
  for (auto [x, y] : inv_left)
    if (x == i) ++lefts;
  const int j = i + lefts + 1;
  if (j > n) throw NoSuchChain("left-inversion count exceeds the available span");
  const Transposition last(i, j);

  // c * (i j) splits into cycles on V' = {i+1..j} and V'' = the rest.
  const int n1 = j - i;
  const int n2 = n - n1;
  auto in_v1 = [&](int y) { return i + 1 <= y && y <= j; };
  auto relabel1 = [&](int y) { return y - i; };
  auto relabel2 = [&](int y) { return y <= i ? y : y - n1; };

  std::vector<int> k1, k2;       // positions
  std::vector<int> val1, val2;   // original values phi(k)
  for (int k = 1; k <= m - 1; ++k) {
    const int y = last.apply(p(k));
    if (in_v1(y)) {
      k1.push_back(k);
      val1.push_back(p(k));
    } else {
      k2.push_back(k);
      val2.push_back(p(k));
    }
  }
  if (static_cast<int>(k1.size()) != n1 - 1 || static_cast<int>(k2.size()) != n2 - 1)
    throw NoSuchChain("support split does not match cycle sizes");

  auto restrict = [&](const std::vector<int>& vals, auto relabel, const PairSet& src) {
    PairSet out;
    for (std::size_t s = 0; s < vals.size(); ++s) {
      for (std::size_t t = 0; t < vals.size(); ++t) {
        const int x = vals[s];
        const int y = vals[t];
        if (x < y && src.count({x, y})) {
          const int rx = relabel(last.apply(x));
          const int ry = relabel(last.apply(y));
          out.emplace(std::min(rx, ry), std::max(rx, ry));
        }
      }
    }
    return out;
  };
  const auto sub1 = peel(n1, restrict(val1, relabel1, inv), restrict(val1, relabel1, inv_left));
  const auto sub2 = peel(n2, restrict(val2, relabel2, inv), restrict(val2, relabel2, inv_left));

  std::vector<Transposition> out(static_cast<std::size_t>(m));
  for (std::size_t s = 0; s < k1.size(); ++s)
    out[static_cast<std::size_t>(k1[s] - 1)] = Transposition(sub1[s].a + i, sub1[s].b + i);
  auto unlabel2 = [&](int y) { return y <= i ? y : y + n1; };
  for (std::size_t s = 0; s < k2.size(); ++s)
    out[static_cast<std::size_t>(k2[s] - 1)] = Transposition(unlabel2(sub2[s].a), unlabel2(sub2[s].b));
  out[static_cast<std::size_t>(m - 1)] = last;
  return out;
}

}  // namespace

FactorWord reconstruct(int n, const PairSet& inv, const PairSet& inv_left) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  for (const auto& pr : inv_left)
    if (!inv.count(pr)) throw NoSuchChain("left inversions must be inversions");
  const auto factors = peel(n, inv, inv_left);
  FactorWord w;
  try {
    w = FactorWord(n, factors);
  } catch (const std::invalid_argument&) {
    throw NoSuchChain("reconstructed factors are malformed");
  }
  if (!is_valid_chain(w)) throw NoSuchChain("no chain has this inversion data");
  const InversionTable table = inversion_table(w);
  if (table.all() != inv || table.left() != inv_left)
    throw NoSuchChain("no chain has this inversion data");
  return w;
}

}  // namespace ncchain
