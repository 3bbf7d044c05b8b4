#pragma once

// Edge lists of the drawings of G_T(4) and of the Hasse diagram of
// Weak(F_4), with vertices written as compact labels.

#include <array>
#include <utility>

namespace figures {

using Edge = std::pair<const char*, const char*>;

inline constexpr std::array<Edge, 28> kHurwitzGraph4{{
    {"12,23,34", "12,24,23"}, {"12,23,34", "12,34,24"}, {"12,23,34", "13,12,34"}, {"12,23,34", "23,13,34"},
    {"12,24,23", "12,34,24"}, {"12,24,23", "14,12,23"}, {"12,24,23", "24,14,23"}, {"12,34,24", "34,12,24"},
    {"13,12,34", "13,34,12"}, {"13,12,34", "23,13,34"}, {"13,34,12", "14,13,12"}, {"13,34,12", "34,14,12"},
    {"14,12,23", "14,13,12"}, {"14,12,23", "14,23,13"}, {"14,12,23", "24,14,23"}, {"14,13,12", "14,23,13"},
    {"14,13,12", "34,14,12"}, {"14,23,13", "23,14,13"}, {"23,13,34", "23,14,13"}, {"23,13,34", "23,34,14"},
    {"23,14,13", "23,34,14"}, {"23,34,14", "24,23,14"}, {"23,34,14", "34,24,14"}, {"24,14,23", "24,23,14"},
    {"24,23,14", "34,24,14"}, {"34,12,24", "34,14,12"}, {"34,12,24", "34,24,14"}, {"34,14,12", "34,24,14"},
}};

inline constexpr std::array<Edge, 20> kHasse4{{
    {"12,23,34", "12,24,23"}, {"12,23,34", "12,34,24"}, {"12,23,34", "13,12,34"}, {"12,23,34", "23,13,34"},
    {"12,24,23", "14,12,23"}, {"12,24,23", "24,14,23"}, {"12,34,24", "34,12,24"}, {"13,12,34", "13,34,12"},
    {"13,34,12", "14,13,12"}, {"13,34,12", "34,14,12"}, {"14,12,23", "14,13,12"}, {"14,12,23", "14,23,13"},
    {"14,23,13", "23,14,13"}, {"23,13,34", "23,14,13"}, {"23,13,34", "23,34,14"}, {"23,34,14", "24,23,14"},
    {"23,34,14", "34,24,14"}, {"24,14,23", "24,23,14"}, {"34,12,24", "34,14,12"}, {"34,12,24", "34,24,14"},
}};

/// Top row of the Hasse diagram.
inline constexpr std::array<const char*, 5> kMaximal4{"14,23,13", "14,13,12", "34,14,12", "34,24,14", "24,23,14"};

}  // namespace figures
