#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "simstring/symbol_string.hpp"

namespace simstring {

// Which aligned position pairs enter the joint distribution.
enum class CoOccurrence {
  // Every aligned pair (w1[p], w2[p]) counts, equal or not.
  AllAlignedPairs,
  // Only pairs with w1[p] == w2[p]; marginals still come from all aligned positions.
  EqualPairsOnly,
};

struct MiConfig {
  double logBase = 2.0;  // g > 1
  double weight = 2.0;   // m, applied to equal-symbol summands of PWMI (> 1 rewards matches)
  CoOccurrence cooccurrence = CoOccurrence::AllAlignedPairs;

  // Throws std::invalid_argument unless logBase > 1 and weight > 0.
  void validate() const;
};

// Distribution of symbol pairs over the N = min(|w1|, |w2|) aligned positions.
struct AlignedJointDistribution {
  std::map<std::pair<Symbol, Symbol>, double> joint;
  std::map<Symbol, double> marginal1;
  std::map<Symbol, double> marginal2;
  std::size_t positions = 0;

  double jointAt(Symbol c1, Symbol c2) const;
};

// Throws std::invalid_argument when either string is empty.
AlignedJointDistribution alignedJoint(const SymbolString& w1, const SymbolString& w2,
                                      CoOccurrence mode = CoOccurrence::AllAlignedPairs);

double mi(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg = {});
// mi(w1, shift(w2, d))
double miShifted(const SymbolString& w1, const SymbolString& w2, std::size_t d,
                 const MiConfig& cfg = {});
// Sum of miShifted over d = 0 .. |w2| - 1.
double miShiftSum(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg = {});
// Weighted MI with the longer string (w2 on ties) rotated by d.
double pwmi(const SymbolString& w1, const SymbolString& w2, std::size_t d, const MiConfig& cfg = {});
// Sum of pwmi over d = 0 .. max(|w1|, |w2|) - 1.
double pwmis(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg = {});

}  // namespace simstring
