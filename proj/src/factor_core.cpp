#include "ncchain/factor_core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ncchain {

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int size) {
  if (size < 0 || size > kMaxN) throw std::invalid_argument("permutation size out of range");
  Permutation p;
  p.size_ = static_cast<std::uint8_t>(size);
  for (int i = 0; i < size; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<Label>(i + 1);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int m = static_cast<int>(images.size());
  if (m > kMaxN) throw std::invalid_argument("permutation size out of range");
  Permutation p;
  p.size_ = static_cast<std::uint8_t>(m);
  std::array<bool, kMaxN + 1> seen{};
  for (int i = 0; i < m; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<Label>(v);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(size);
  std::array<bool, kMaxN + 1> used{};
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int x = cyc[k];
      const int y = cyc[(k + 1) % cyc.size()];
      if (x < 1 || x > size || y < 1 || y > size || used[static_cast<std::size_t>(x)])
        throw std::invalid_argument("bad cycle notation");
      used[static_cast<std::size_t>(x)] = true;
      p.img_[static_cast<std::size_t>(x - 1)] = static_cast<Label>(y);
    }
  }
  return p;
}

Permutation Permutation::long_cycle(int size) {
  Permutation p = identity(size);
  for (int i = 1; i <= size; ++i) p.img_[static_cast<std::size_t>(i - 1)] = static_cast<Label>(i % size + 1);
  return p;
}

Permutation Permutation::longest(int size) {
  Permutation p = identity(size);
  for (int i = 1; i <= size; ++i) p.img_[static_cast<std::size_t>(i - 1)] = static_cast<Label>(size + 1 - i);
  return p;
}

Permutation Permutation::simple(int size, int j) {
  if (j < 1 || j >= size) throw std::out_of_range("simple reflection index out of range");
  return identity(size).swapped_positions(j, j + 1);
}

Permutation Permutation::inverse() const {
  Permutation q = *this;
  for (int i = 1; i <= size_; ++i) q.img_[static_cast<std::size_t>((*this)(i) - 1)] = static_cast<Label>(i);
  return q;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 1; i <= size_; ++i)
    for (int j = i + 1; j <= size_; ++j) count += (*this)(i) > (*this)(j);
  return count;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size_; ++i)
    if (has_descent(i)) d.push_back(i);
  return d;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size_; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  return {img_.begin(), img_.begin() + size_};
}

Permutation Permutation::swapped_positions(int i, int j) const {
  Permutation q = *this;
  std::swap(q.img_[static_cast<std::size_t>(i - 1)], q.img_[static_cast<std::size_t>(j - 1)]);
  return q;
}

std::string Permutation::one_line() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= size_; ++i) os << (i > 1 ? "," : "") << (*this)(i);
  os << ']';
  return os.str();
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::array<bool, kMaxN + 1> seen{};
  for (int i = 1; i <= size_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    os << '(';
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      os << (x == i ? "" : ",") << x;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation h = f;
  for (int x = 1; x <= g.size(); ++x) h.img_[static_cast<std::size_t>(x - 1)] = static_cast<Label>(f(g(x)));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.one_line(); }

// -------------------------------------------------------------- Transposition

Transposition conjugate(Transposition g, const Permutation& h) {
  const Permutation hinv = h.inverse();
  return {hinv(g.a), hinv(g.b)};
}

std::ostream& operator<<(std::ostream& os, Transposition t) {
  return os << '(' << int(t.a) << ',' << int(t.b) << ')';
}

// ----------------------------------------------------------------- FactorWord

FactorWord::FactorWord(int n, std::span<const Transposition> factors) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  if (static_cast<int>(factors.size()) != n - 1)
    throw std::invalid_argument("a word in F_n has exactly n-1 factors");
  n_ = static_cast<std::uint8_t>(n);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Transposition t = factors[k];
    if (t.a < 1 || t.b > n || t.a >= t.b) throw std::invalid_argument("transposition label out of range");
    factors_[k] = t;
  }
}

FactorWord::FactorWord(int n, std::initializer_list<Transposition> factors)
    : FactorWord(n, std::span<const Transposition>(factors.begin(), factors.size())) {}

FactorWord FactorWord::base(int n) {
  std::vector<Transposition> f;
  for (int j = 1; j < n; ++j) f.emplace_back(j, j + 1);
  return FactorWord(n, f);
}

FactorWord FactorWord::with_pair(int pos, Transposition first, Transposition second) const {
  FactorWord w = *this;
  w.factors_[static_cast<std::size_t>(pos - 1)] = first;
  w.factors_[static_cast<std::size_t>(pos)] = second;
  return w;
}

std::size_t FactorWord::hash() const {
  // FNV-1a over the packed labels.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (int k = 0; k < length(); ++k) {
    const auto t = factors_[static_cast<std::size_t>(k)];
    h = (h ^ t.a) * 1099511628211ull;
    h = (h ^ t.b) * 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const FactorWord& w) {
  std::string s;
  for (int j = 1; j <= w.length(); ++j) {
    if (j > 1) s += ',';
    s += std::to_string(w.at(j).a);
    s += ' ';
    s += std::to_string(w.at(j).b);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const FactorWord& w) { return os << to_string(w); }

// -------------------------------------------------------------- GeometricTree

GeometricTree::GeometricTree(int n, std::vector<Transposition> edges) : n_(n), edges_(std::move(edges)) {
  for (auto e : edges_)
    if (e.a < 1 || e.b > n || e.a >= e.b) throw std::invalid_argument("edge label out of range");
  std::sort(edges_.begin(), edges_.end());
}

bool GeometricTree::has_edge(int x, int y) const {
  return std::binary_search(edges_.begin(), edges_.end(), Transposition(x, y));
}

std::vector<int> GeometricTree::neighbors_of(int v) const {
  std::vector<int> out;
  for (auto e : edges_)
    if (e.moves(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

bool GeometricTree::is_tree() const {
  if (static_cast<int>(edges_.size()) != n_ - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(n_ + 1));
  std::iota(parent.begin(), parent.end(), 0);
  for (auto e : edges_) {
    const int ra = find_root(parent, e.a);
    const int rb = find_root(parent, e.b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

bool chords_cross(Transposition x, Transposition y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

bool GeometricTree::is_noncrossing() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (chords_cross(edges_[i], edges_[j])) return false;
  return true;
}

std::vector<bool> GeometricTree::component_without(Transposition removed, int from) const {
  std::vector<bool> seen(static_cast<std::size_t>(n_ + 1), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto e : edges_) {
      if (e == removed || !e.moves(v)) continue;
      const int u = e.other(v);
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

std::ostream& operator<<(std::ostream& os, const GeometricTree& t) {
  os << "{";
  for (std::size_t i = 0; i < t.edges().size(); ++i)
    os << (i ? "," : "") << int(t.edges()[i].a) << int(t.edges()[i].b);
  return os << "}";
}

// ----------------------------------------------------------------- operations

Permutation product(const FactorWord& w) {
  Permutation p = Permutation::identity(w.n());
  for (int j = w.length(); j >= 1; --j) {
    const Transposition t = w.at(j);
    std::vector<int> img = p.images();
    for (int& v : img) v = t.apply(v);
    p = Permutation::from_images(img);
  }
  return p;
}

bool is_valid_chain(const FactorWord& w) {
  const int n = w.n();
  const auto f = w.factors();
  const GeometricTree g(n, {f.begin(), f.end()});
  if (!g.is_tree() || !g.is_noncrossing()) return false;
  // Cyclically decreasing neighbours: if t_i = (a,c) and t_j = (a,b) with
  // i < j then c >_a b, where x <_a y compares (x - a) mod n.
  for (int i = 1; i <= w.length(); ++i) {
    for (int j = i + 1; j <= w.length(); ++j) {
      const Transposition ti = w.at(i);
      const Transposition tj = w.at(j);
      for (int a : {int(ti.a), int(ti.b)}) {
        if (!tj.moves(a)) continue;
        const int c = ti.other(a);
        const int b = tj.other(a);
        if ((c - a + n) % n <= (b - a + n) % n) return false;
      }
    }
  }
  return true;
}

namespace {

void check_move_index(const FactorWord& w, int i) {
  if (i < 1 || i > w.n() - 2) throw std::out_of_range("Hurwitz move position out of range");
}

}  // namespace

FactorWord hurwitz_right(const FactorWord& w, int i) {
  check_move_index(w, i);
  const Transposition ti = w.at(i);
  const Transposition tk = w.at(i + 1);
  return w.with_pair(i, conjugate(tk, ti), ti);
}

FactorWord hurwitz_left(const FactorWord& w, int i) {
  check_move_index(w, i);
  const Transposition ti = w.at(i);
  const Transposition tk = w.at(i + 1);
  return w.with_pair(i, tk, conjugate(ti, tk));
}

std::vector<FactorWord> neighbors(const FactorWord& w) {
  std::vector<FactorWord> out;
  out.reserve(static_cast<std::size_t>(2 * std::max(0, w.n() - 2)));
  for (int i = 1; i <= w.n() - 2; ++i) {
    out.push_back(hurwitz_right(w, i));
    out.push_back(hurwitz_left(w, i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FactorWord involution_iota(const FactorWord& w) {
  const int n = w.n();
  std::vector<Transposition> f;
  f.reserve(static_cast<std::size_t>(w.length()));
  // s0 is an involution, so t^{s0} = (s0(a), s0(b)).
  for (int j = w.length(); j >= 1; --j) f.emplace_back(n + 1 - w.at(j).a, n + 1 - w.at(j).b);
  return FactorWord(n, f);
}

GeometricTree tree_of_word(const FactorWord& w) {
  const auto f = w.factors();
  return GeometricTree(w.n(), {f.begin(), f.end()});
}

}  // namespace ncchain
