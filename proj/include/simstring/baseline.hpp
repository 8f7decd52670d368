#pragma once

#include <cstddef>
#include <cstdint>

#include "simstring/symbol_string.hpp"

namespace simstring {

struct LengthFeatures {
  std::size_t len1 = 0;
  std::size_t len2 = 0;
  std::int64_t diff = 0;  // len2 - len1
  std::size_t absDiff = 0;
};

// Number of edit operations.
using EditCost = std::size_t;

LengthFeatures lengthFeatures(const SymbolString& w1, const SymbolString& w2);

// One longest common subsequence (traceback prefers matches, then w1-deletions).
SymbolString lcs(const SymbolString& w1, const SymbolString& w2);
std::size_t lcsLength(const SymbolString& w1, const SymbolString& w2);
// |LCS|^2 / (|w1| |w2|); 0 if either string is empty.
double nlcs(const SymbolString& w1, const SymbolString& w2);

// Longest common prefix of w1[n1..] and w2[n2..]. Throws std::out_of_range when an
// offset exceeds its string length.
SymbolString mclcs(const SymbolString& w1, const SymbolString& w2, std::size_t n1, std::size_t n2);
// Longest common contiguous substring; the leftmost occurrence in w1 on ties.
SymbolString mclcsGlobal(const SymbolString& w1, const SymbolString& w2);
std::size_t longestCommonSubstringLength(const SymbolString& w1, const SymbolString& w2);

enum class MclcsVariant {
  Start,          // (0, 0)
  SkipFirstOfW2,  // (0, 1)
  Middle,         // (|w1|/2, |w2|/2)
  Global,         // all offsets
};

// |MCLCS|^2 / (|w1| |w2|) with the full string lengths; 0 if either is empty.
double nmclcs(const SymbolString& w1, const SymbolString& w2, MclcsVariant variant);

// Positional mismatches after truncating the longer string to the shorter length.
EditCost modHamming(const SymbolString& w1, const SymbolString& w2);
EditCost levenshtein(const SymbolString& w1, const SymbolString& w2);
// Restricted edit distance with adjacent transpositions (optimal string alignment).
EditCost damerau(const SymbolString& w1, const SymbolString& w2);
// 2 |w1 ∩ w2| / (|w1| + |w2|), multiset intersection; 1 when both are empty.
double dice(const SymbolString& w1, const SymbolString& w2);

}  // namespace simstring
