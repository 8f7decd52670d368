#pragma once

#include <cstddef>
#include <vector>

#include "simstring/symbol_string.hpp"

namespace simstring {

// Equal-symbol co-occurrence counts from w1 into w2 at forward displacement d:
//   count(c, d) = #{k : k + d < |w2|, w1[k] = c = w2[k + d]},  0 <= d < |w1|.
// The count for a position p of w1 depends only on the symbol w1[p], so the table
// is keyed by the distinct symbols of w1.
class ComTable {
 public:
  // Throws std::invalid_argument when w1 is empty.
  ComTable(const SymbolString& w1, const SymbolString& w2);

  std::size_t len1() const { return len1_; }
  std::size_t len2() const { return len2_; }

  // 0 for symbols absent from w1 and for d >= |w1|.
  std::size_t count(Symbol c, std::size_t d) const;
  // Σ_p comCount(p, d) over all positions p of w1; 0 for d >= |w1|.
  std::size_t positionTotal(std::size_t d) const;
  // Occurrences of c in w1.
  std::size_t occurrences(Symbol c) const;
  bool contains(Symbol c) const { return indexOf(c) != kAbsent; }

  // Distinct symbols of w1, ascending.
  const std::vector<Symbol>& symbols() const { return symbols_; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::size_t indexOf(Symbol c) const;

  std::size_t len1_;
  std::size_t len2_;
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> occurrences_;
  std::vector<std::size_t> counts_;  // [symbol index * len1 + d]
  std::vector<std::size_t> positionTotals_;
};

ComTable buildCom(const SymbolString& w1, const SymbolString& w2);

// count(w1[p], d). Throws std::out_of_range unless p < |w1| and d < |w1|.
std::size_t comCount(const ComTable& table, const SymbolString& w1, std::size_t p, std::size_t d);

// comCount / |w1|
double cop(const ComTable& table, const SymbolString& w1, std::size_t p, std::size_t d);
double cop(const SymbolString& w1, const SymbolString& w2, std::size_t p, std::size_t d);

// Σ_{d < |w1|} comCount(p, d) / |w1| (may exceed 1).
double acop(const ComTable& table, const SymbolString& w1, std::size_t p);
double acop(const SymbolString& w1, const SymbolString& w2, std::size_t p);

// Σ over positions of w2: cop of that symbol's first position in w1 if present, else -1.
double ps(const ComTable& table, const SymbolString& w2, std::size_t d);
double ps(const SymbolString& w1, const SymbolString& w2, std::size_t d);

// Σ_{d < |w2|} ps(d); distances d >= |w1| have zero counts but still pay penalties.
double tps(const ComTable& table, const SymbolString& w2);
double tps(const SymbolString& w1, const SymbolString& w2);

// Σ_{d < floor(|w1|/2)} (total(d) - total(d + ceil(|w1|/2)))^g; 0 when |w1| < 2.
double cod(const ComTable& table, double g = 1.0);
double cod(const SymbolString& w1, const SymbolString& w2, double g = 1.0);

}  // namespace simstring
