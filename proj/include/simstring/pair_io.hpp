#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "simstring/synth.hpp"

namespace simstring {

// Pair dataset file: UTF-8 text, header line "#simstring-pairs v1", then one
// record per line with three tab-separated fields w1, w2, label. Tab, newline
// and backslash inside fields are written as \t, \n and \\.
inline constexpr std::string_view kPairsHeader = "#simstring-pairs v1";

struct PairRecord {
  ComparisonPair pair;
  std::size_t line = 0;  // 1-based line in the source file
};

std::string escapeField(std::string_view raw);
// Throws std::invalid_argument on a dangling or unknown escape.
std::string unescapeField(std::string_view escaped);

void writePairs(std::ostream& out, const std::vector<ComparisonPair>& pairs);
void writePairsFile(const std::string& path, const std::vector<ComparisonPair>& pairs);

// Throws std::runtime_error with "<source>:<line>: ..." context on malformed input.
std::vector<PairRecord> readPairs(std::istream& in, const std::string& source = "<stream>");
std::vector<PairRecord> readPairsFile(const std::string& path);

}  // namespace simstring
