#pragma once

#include <cstddef>
#include <vector>

#include "simstring/symbol_string.hpp"

namespace simstring {

// Per-length occurrence counts: count(l) is the total number of (overlapping)
// occurrences in w2 of the distinct length-l substrings of w1, for 1 <= l <= |w1|.
class RlmVector {
 public:
  RlmVector(std::size_t len1, std::vector<std::size_t> counts);

  std::size_t len1() const { return len1_; }
  // 0 outside [1, |w1|].
  std::size_t count(std::size_t l) const;

 private:
  std::size_t len1_;
  std::vector<std::size_t> counts_;  // index l, counts_[0] unused
};

// Throws std::invalid_argument when w1 is empty.
RlmVector buildRlm(const SymbolString& w1, const SymbolString& w2);

std::size_t so(const RlmVector& rlm);
double wso(const RlmVector& rlm, double g = 1.0);
// Largest count; 0 for an all-zero vector.
std::size_t mo(const RlmVector& rlm);
// Smallest length attaining mo; 0 for an all-zero vector.
std::size_t morl(const RlmVector& rlm);
// count(l*) where l* maximises count(l) / (l^g + 1), smallest l on ties.
std::size_t moml(const RlmVector& rlm, double g = 1.0);
// Minimal length of maximal occurrences; same value as morl.
std::size_t mlmo(const RlmVector& rlm);
// Largest l with count(l) >= 1; 0 if none.
std::size_t rlmMclcs(const RlmVector& rlm);

}  // namespace simstring
