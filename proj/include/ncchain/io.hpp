#pragma once

// Text formats: words, enumeration dumps, statistics CSV, polynomial JSON,
// DOT graphs and metric reports.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ncchain/factor_core.hpp"
#include "ncchain/hurwitz_metrics.hpp"
#include "ncchain/polynomial.hpp"
#include "ncchain/type_b.hpp"
#include "ncchain/weak_order.hpp"

namespace ncchain {

/// "1 2,2 3,3 4".
std::string format_word(const FactorWord& w);
/// "12,23,34" for n <= 9, otherwise the same as format_word.
std::string display_label(const FactorWord& w);

/// Parses "1 2,2 3,3 4" or the compact "12,23,34"; n is the factor count plus
/// one. Throws std::invalid_argument on malformed or non-chain input.
FactorWord parse_word(const std::string& text);

/// One word per line followed by "count=N".
void write_enumeration(std::ostream& os, const std::vector<FactorWord>& words);
/// Reads words back, skipping the count line. Throws std::invalid_argument if
/// the count line disagrees with the number of words.
std::vector<FactorWord> read_enumeration(std::istream& is);

/// Columns word,rank,inv_r,inv_l,inv_n.
void write_stats_csv(std::ostream& os, const std::vector<FactorWord>& words);

/// {"terms":[{"q":i,"t":j,"c":k},...]} sorted by (q,t).
std::string polynomial_to_json(const QTPolynomial& p);
QTPolynomial polynomial_from_json(const std::string& text);

void write_graph_dot(std::ostream& os, const HurwitzGraph& g);
void write_hasse_dot(std::ostream& os, const HasseDiagram& h);

/// Keys n, radius, diameter, ecc_e, antipodes_e, conjecture, elapsed_ms plus
/// the bound and match flags.
std::string report_to_json(const MetricReport& r);
/// Keys n, count, radius, conjecture_radius, antipodes_e and the optional
/// reference_antipodes and diameter.
std::string report_to_json(const BMetricReport& r);

/// Reads {"values": {"2": a, "3": b, ...}} (other keys such as "source" are
/// ignored) into n -> value.
std::map<int, std::size_t> load_reference_sequence(const std::string& path);

/// The default cap, or HURWITZ_MAX_N when set to a positive integer.
int resolve_cap(int default_cap);

}  // namespace ncchain
