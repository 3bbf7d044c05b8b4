#pragma once

#include <string>
#include <vector>

#include "ncchain/factor_core.hpp"
#include "ncchain/io.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Word to_oracle(const ncchain::FactorWord& w) {
  oracle::Word out;
  for (auto t : w.factors()) out.emplace_back(t.a, t.b);
  return out;
}

inline ncchain::FactorWord from_oracle(int n, const oracle::Word& w) {
  std::vector<ncchain::Transposition> f;
  for (auto [a, b] : w) f.emplace_back(a, b);
  return ncchain::FactorWord(n, f);
}

/// Compact labels like "12,23,34".
inline ncchain::FactorWord W(const std::string& s) { return ncchain::parse_word(s); }

}  // namespace support
