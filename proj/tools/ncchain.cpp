// ncchain: command-line front end for the library.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncchain/catalan_enum.hpp"
#include "ncchain/chain_map.hpp"
#include "ncchain/hurwitz_metrics.hpp"
#include "ncchain/io.hpp"
#include "ncchain/type_b.hpp"
#include "ncchain/verify.hpp"
#include "ncchain/weak_order.hpp"

namespace {

using namespace ncchain;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 4;
  bool hasse = false;
  bool poly = false;
  std::string type = "A";
  unsigned threads = 1;
  std::string out;
  std::string ref_seq;
  std::string suite;
};

// Writes to --out when given, else stdout.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

private:
  std::unique_ptr<std::ofstream> file_;
};

void require_n(int n, int lo, int cap, const std::string& what) {
  if (n < lo) throw UsageError(what + " needs n >= " + std::to_string(lo));
  if (n > cap)
    throw ResourceLimitExceeded(what + " for n = " + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap) +
                                " (raise with HURWITZ_MAX_N)");
}

int cmd_enumerate(const Options& o) {
  const int cap = resolve_cap(kDefaultEnumerationCap);
  require_n(o.n, 2, cap, "enumerate");
  Output out(o.out);
  write_enumeration(out.stream(), enumerate_Fn(o.n, cap));
  out.finish();
  return kExitOk;
}

int cmd_stats(const Options& o) {
  const int cap = resolve_cap(8);
  require_n(o.n, 2, cap, "stats");
  Output out(o.out);
  if (o.poly) {
    // Sum over the maximal words of F_n, i.e. tC_{n-1}.
    out.stream() << polynomial_to_json(max_statistics(o.n - 1)) << '\n';
  } else {
    write_stats_csv(out.stream(), enumerate_Fn(o.n, cap));
  }
  out.finish();
  return kExitOk;
}

int cmd_graph(const Options& o) {
  const int cap = resolve_cap(7);
  require_n(o.n, 2, cap, "graph");
  Output out(o.out);
  if (o.hasse)
    write_hasse_dot(out.stream(), HasseDiagram(o.n));
  else
    write_graph_dot(out.stream(), build_graph(o.n, cap));
  out.finish();
  return kExitOk;
}

std::optional<std::size_t> reference_for(const Options& o, int n) {
  if (o.ref_seq.empty()) return std::nullopt;
  const auto values = load_reference_sequence(o.ref_seq);
  const auto it = values.find(n);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

int cmd_metrics_b(const Options& o) {
  const int cap = resolve_cap(kDefaultTypeBCap);
  require_n(o.n, 1, cap, "type B metrics");
  const auto report = b_metrics(build_b_graph(o.n, cap), o.threads, reference_for(o, o.n));
  Output out(o.out);
  out.stream() << report_to_json(report) << '\n';
  out.finish();
  return kExitOk;
}

int cmd_metrics(const Options& o) {
  if (o.type == "B" || o.type == "b") return cmd_metrics_b(o);
  if (o.type != "A" && o.type != "a") throw UsageError("--type must be A or B");
  const int cap = resolve_cap(7);
  require_n(o.n, 2, cap, "metrics");
  const auto report = radius_and_diameter(build_graph(o.n, cap), o.threads);
  Output out(o.out);
  out.stream() << report_to_json(report) << '\n';
  out.finish();
  if (!report.radius_matches || !report.diameter_within_bounds) {
    std::cerr << "radius or diameter bound check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const int cap = resolve_cap(7);
  require_n(o.n, 2, cap, "verify");
  std::vector<SuiteResult> results;
  try {
    results = run_verification(o.n, o.suite, o.threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out(o.out);
  bool all = true;
  for (const auto& r : results) {
    out.stream() << (r.passed() ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks << " failed=" << r.failed << '\n';
    for (const auto& f : r.failures) out.stream() << "  counterexample: " << f << '\n';
    for (const auto& note : r.notes) out.stream() << "  note: " << note << '\n';
    all = all && r.passed();
  }
  out.stream() << (all ? "all suites passed" : "some suites failed") << '\n';
  out.finish();
  return all ? kExitOk : kExitCheckFailed;
}

std::string edges_string(const GeometricTree& t) {
  std::string s;
  for (auto e : t.edges()) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.a) + " " + std::to_string(e.b);
  }
  return s;
}

int cmd_trees(const Options& o) {
  const int cap = resolve_cap(9);
  require_n(o.n, 2, cap, "trees");
  Output out(o.out);
  if (o.poly) {
    out.stream() << polynomial_to_json(tree_statistics(o.n)) << '\n';
  } else {
    const auto trees = alternating_noncrossing_trees(o.n);
    for (const auto& t : trees) {
      const auto s = edge_pair_statistics(t);
      out.stream() << "tree=" << edges_string(t) << " word=" << format_word(word_of_tree(t)) << " rp=" << s.right
                   << " lp=" << s.left << " np=" << s.neutral << '\n';
    }
    out.stream() << "count=" << trees.size() << '\n';
  }
  out.finish();
  return kExitOk;
}

int cmd_dyck(const Options& o) {
  require_n(o.n, 0, resolve_cap(12), "dyck");
  Output out(o.out);
  if (o.poly) {
    out.stream() << polynomial_to_json(dyck_generating_function(o.n)) << '\n';
  } else {
    const auto paths = dyck_paths(o.n);
    for (const auto& p : paths) {
      const auto s = dyck_statistics(p);
      out.stream() << p.str() << " area=" << s.area << " bmaj=" << s.bmaj << '\n';
    }
    out.stream() << "count=" << paths.size() << '\n';
  }
  out.finish();
  return kExitOk;
}

int cmd_typeb(const Options& o) {
  const int cap = resolve_cap(kDefaultTypeBCap);
  require_n(o.n, 1, cap, "typeb");
  const auto words = enumerate_HBn(o.n, cap);
  Output out(o.out);
  for (const auto& w : words) out.stream() << to_string(w) << '\n';
  out.stream() << "count=" << words.size() << '\n';
  out.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal transposition factorizations of the long cycle"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "rank parameter n")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default stdout)"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list F_n in canonical order");
  add_n(enumerate);
  add_out(enumerate);

  auto* stats = app.add_subcommand("stats", "rank and inversion counts per word, or the maximal-word polynomial");
  add_n(stats);
  add_out(stats);
  stats->add_flag("--poly", o.poly, "emit the (inv_R, inv_L) polynomial of the maximal words as JSON");

  auto* graph = app.add_subcommand("graph", "DOT export of the Hurwitz graph or the Hasse diagram");
  add_n(graph);
  add_out(graph);
  graph->add_flag("--hasse", o.hasse, "emit the Hasse diagram of the weak order");

  auto* metrics = app.add_subcommand("metrics", "radius, diameter and antipodes as JSON");
  add_n(metrics);
  add_out(metrics);
  add_threads(metrics);
  metrics->add_option("--type", o.type, "A or B")->capture_default_str();
  metrics->add_option("--ref-seq", o.ref_seq, "JSON file with reference antipode counts (type B)");

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  add_n(verify);
  add_out(verify);
  add_threads(verify);
  verify->add_option("--suite", o.suite, "run only this suite");

  auto* trees = app.add_subcommand("trees", "alternating non-crossing trees and their words");
  add_n(trees);
  add_out(trees);
  trees->add_flag("--poly", o.poly, "emit the edge-pair polynomial as JSON");

  auto* dyck = app.add_subcommand("dyck", "Dyck paths with area and bmaj");
  add_n(dyck);
  add_out(dyck);
  dyck->add_flag("--poly", o.poly, "emit the area/bmaj polynomial as JSON");

  auto* typeb = app.add_subcommand("typeb", "list the type B factorizations of c");
  add_n(typeb);
  add_out(typeb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*stats) return cmd_stats(o);
    if (*graph) return cmd_graph(o);
    if (*metrics) return cmd_metrics(o);
    if (*verify) return cmd_verify(o);
    if (*trees) return cmd_trees(o);
    if (*dyck) return cmd_dyck(o);
    if (*typeb) return cmd_typeb(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
