#include "ncchain/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ncchain/chain_map.hpp"

namespace ncchain {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_word(const FactorWord& w) { return to_string(w); }

std::string display_label(const FactorWord& w) {
  if (w.n() > 9) return format_word(w);
  std::string s;
  for (int k = 1; k <= w.length(); ++k) {
    if (k > 1) s += ',';
    s += char('0' + w.at(k).a);
    s += char('0' + w.at(k).b);
  }
  return s;
}

namespace {

int parse_label(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad label '" + s + "'");
  return std::stoi(s);
}

}  // namespace

FactorWord parse_word(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream fields(item);
    std::vector<std::string> parts;
    for (std::string p; fields >> p;) parts.push_back(p);
    if (parts.size() == 1 && parts[0].size() == 2)
      pairs.emplace_back(parse_label(parts[0].substr(0, 1)), parse_label(parts[0].substr(1)));
    else if (parts.size() == 2)
      pairs.emplace_back(parse_label(parts[0]), parse_label(parts[1]));
    else
      throw std::invalid_argument("bad factor '" + item + "' in '" + text + "'");
  }
  const int n = static_cast<int>(pairs.size()) + 1;
  if (pairs.empty() || n > kMaxN) throw std::invalid_argument("bad factor count in '" + text + "'");
  std::vector<Transposition> f;
  for (auto [a, b] : pairs) {
    if (a == b || a < 1 || b < 1 || a > n || b > n)
      throw std::invalid_argument("bad transposition in '" + text + "'");
    f.emplace_back(a, b);
  }
  FactorWord w(n, f);
  if (!is_valid_chain(w)) throw std::invalid_argument("not a factorization of the long cycle: '" + text + "'");
  return w;
}

void write_enumeration(std::ostream& os, const std::vector<FactorWord>& words) {
  for (const auto& w : words) os << format_word(w) << '\n';
  os << "count=" << words.size() << '\n';
}

std::vector<FactorWord> read_enumeration(std::istream& is) {
  std::vector<FactorWord> out;
  std::optional<std::size_t> count;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    if (line.rfind("count=", 0) == 0) {
      count = std::stoull(line.substr(6));
      continue;
    }
    out.push_back(parse_word(line));
  }
  if (count && *count != out.size()) throw std::invalid_argument("count line disagrees with word list");
  return out;
}

void write_stats_csv(std::ostream& os, const std::vector<FactorWord>& words) {
  os << "word,rank,inv_r,inv_l,inv_n\n";
  for (const auto& w : words) {
    const auto t = inversion_table(w);
    os << '"' << format_word(w) << "\"," << t.pi.inversions() << ',' << t.count(InversionKind::Right) << ','
       << t.count(InversionKind::Left) << ',' << t.count(InversionKind::Neutral) << '\n';
  }
}

std::string polynomial_to_json(const QTPolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [exp, c] : p.terms()) terms.push_back({{"q", exp.first}, {"t", exp.second}, {"c", c}});
  ordered_json doc;
  doc["terms"] = terms;
  return doc.dump();
}

QTPolynomial polynomial_from_json(const std::string& text) {
  QTPolynomial p;
  try {
    const auto doc = json::parse(text);
    for (const auto& term : doc.at("terms"))
      p.add_term(term.at("q").get<int>(), term.at("t").get<int>(), term.at("c").get<QTPolynomial::Coefficient>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
  return p;
}

void write_graph_dot(std::ostream& os, const HurwitzGraph& g) {
  os << "graph G_T" << g.n() << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) os << "  v" << v << " [label=\"" << display_label(g.word(v)) << "\"];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (VertexId u : g.adjacency().neighbors(v))
      if (u > v) os << "  v" << v << " -- v" << u << ";\n";
  os << "}\n";
}

void write_hasse_dot(std::ostream& os, const HasseDiagram& h) {
  os << "graph Weak" << h.n() << " {\n  rankdir=BT;\n";
  int top = 0;
  for (std::size_t v = 0; v < h.size(); ++v) top = std::max(top, h.rank_of(v));
  for (int r = 0; r <= top; ++r) {
    os << "  { rank=same;";
    for (std::size_t v = 0; v < h.size(); ++v)
      if (h.rank_of(v) == r) os << " v" << v << ";";
    os << " }\n";
  }
  for (std::size_t v = 0; v < h.size(); ++v)
    os << "  v" << v << " [label=\"" << display_label(h.index()[v]) << "\"];\n";
  for (std::size_t v = 0; v < h.size(); ++v)
    for (std::size_t u : h.up(v)) os << "  v" << v << " -- v" << u << ";\n";
  os << "}\n";
}

std::string report_to_json(const MetricReport& r) {
  ordered_json doc;
  doc["n"] = r.n;
  doc["vertices"] = r.vertices;
  doc["edges"] = r.edges;
  doc["radius"] = r.radius;
  doc["diameter"] = r.diameter;
  doc["ecc_e"] = r.ecc_e;
  doc["antipodes_e"] = r.antipodes_e;
  doc["conjecture"] = {{"diameter", r.conjecture_diameter}, {"matches", r.diameter_matches_conjecture}};
  doc["radius_formula"] = r.radius_formula;
  doc["radius_matches"] = r.radius_matches;
  doc["diameter_upper_bound"] = r.diameter_upper_bound;
  doc["diameter_within_bounds"] = r.diameter_within_bounds;
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc.dump(2);
}

std::string report_to_json(const BMetricReport& r) {
  ordered_json doc;
  doc["n"] = r.n;
  doc["count"] = r.count;
  doc["expected_count"] = r.expected_count;
  doc["radius"] = r.radius;
  doc["conjecture_radius"] = r.conjecture_radius;
  doc["radius_matches_conjecture"] = r.radius_matches_conjecture;
  doc["ecc_e"] = r.ecc_e;
  doc["antipodes_e"] = r.antipodes_e;
  doc["antipodes_max_rank"] = r.antipodes_max_rank;
  if (r.reference_antipodes) {
    doc["reference_antipodes"] = *r.reference_antipodes;
    doc["antipodes_match_reference"] = *r.reference_antipodes == r.antipodes_e;
  }
  if (r.diameter) doc["diameter"] = *r.diameter;
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc.dump(2);
}

std::map<int, std::size_t> load_reference_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<int, std::size_t> out;
  try {
    const auto doc = json::parse(in);
    for (const auto& [key, value] : doc.at("values").items()) out[std::stoi(key)] = value.get<std::size_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return out;
}

int resolve_cap(int default_cap) {
  if (const char* env = std::getenv("HURWITZ_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kMaxN));
  }
  return default_cap;
}

}  // namespace ncchain
