#include "simstring/com.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace simstring {

ComTable::ComTable(const SymbolString& w1, const SymbolString& w2)
    : len1_(w1.size()), len2_(w2.size()) {
  if (w1.empty()) throw std::invalid_argument("buildCom: w1 is empty");
  symbols_.assign(w1.begin(), w1.end());
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());

  std::vector<std::size_t> index1(len1_);
  occurrences_.assign(symbols_.size(), 0);
  for (std::size_t k = 0; k < len1_; ++k) {
    index1[k] = indexOf(w1[k]);
    ++occurrences_[index1[k]];
  }

  counts_.assign(symbols_.size() * len1_, 0);
  for (std::size_t d = 0; d < len1_ && d < len2_; ++d) {
    const std::size_t limit = std::min(len1_, len2_ - d);
    for (std::size_t k = 0; k < limit; ++k) {
      if (w1[k] == w2[k + d]) ++counts_[index1[k] * len1_ + d];
    }
  }

  positionTotals_.assign(len1_, 0);
  for (std::size_t s = 0; s < symbols_.size(); ++s) {
    for (std::size_t d = 0; d < len1_; ++d) {
      positionTotals_[d] += occurrences_[s] * counts_[s * len1_ + d];
    }
  }
}

std::size_t ComTable::indexOf(Symbol c) const {
  const auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
  if (it == symbols_.end() || *it != c) return kAbsent;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::size_t ComTable::count(Symbol c, std::size_t d) const {
  if (d >= len1_) return 0;
  const std::size_t s = indexOf(c);
  return s == kAbsent ? 0 : counts_[s * len1_ + d];
}

std::size_t ComTable::positionTotal(std::size_t d) const {
  return d < len1_ ? positionTotals_[d] : 0;
}

std::size_t ComTable::occurrences(Symbol c) const {
  const std::size_t s = indexOf(c);
  return s == kAbsent ? 0 : occurrences_[s];
}

ComTable buildCom(const SymbolString& w1, const SymbolString& w2) { return ComTable(w1, w2); }

std::size_t comCount(const ComTable& table, const SymbolString& w1, std::size_t p, std::size_t d) {
  if (p >= w1.size() || d >= w1.size()) {
    throw std::out_of_range("comCount: (p=" + std::to_string(p) + ", d=" + std::to_string(d) +
                            ") out of range for |w1| = " + std::to_string(w1.size()));
  }
  return table.count(w1[p], d);
}

double cop(const ComTable& table, const SymbolString& w1, std::size_t p, std::size_t d) {
  return static_cast<double>(comCount(table, w1, p, d)) / static_cast<double>(w1.size());
}

double cop(const SymbolString& w1, const SymbolString& w2, std::size_t p, std::size_t d) {
  return cop(ComTable(w1, w2), w1, p, d);
}

double acop(const ComTable& table, const SymbolString& w1, std::size_t p) {
  if (p >= w1.size()) {
    throw std::out_of_range("acop: p=" + std::to_string(p) + " out of range for |w1| = " +
                            std::to_string(w1.size()));
  }
  std::size_t sum = 0;
  for (std::size_t d = 0; d < w1.size(); ++d) sum += table.count(w1[p], d);
  return static_cast<double>(sum) / static_cast<double>(w1.size());
}

double acop(const SymbolString& w1, const SymbolString& w2, std::size_t p) {
  return acop(ComTable(w1, w2), w1, p);
}

double ps(const ComTable& table, const SymbolString& w2, std::size_t d) {
  const double len1 = static_cast<double>(table.len1());
  double score = 0.0;
  for (Symbol c : w2) {
    score += table.contains(c) ? static_cast<double>(table.count(c, d)) / len1 : -1.0;
  }
  return score;
}

double ps(const SymbolString& w1, const SymbolString& w2, std::size_t d) {
  return ps(ComTable(w1, w2), w2, d);
}

double tps(const ComTable& table, const SymbolString& w2) {
  // Group w2's positions by symbol once: per distance the score is
  //   Σ_c occ2(c) count(c, d) / |w1| - (#positions of w2 whose symbol is absent from w1).
  std::vector<std::size_t> occ2(table.symbols().size(), 0);
  std::size_t absent = 0;
  for (Symbol c : w2) {
    const auto& syms = table.symbols();
    const auto it = std::lower_bound(syms.begin(), syms.end(), c);
    if (it == syms.end() || *it != c) {
      ++absent;
    } else {
      ++occ2[static_cast<std::size_t>(it - syms.begin())];
    }
  }
  const double len1 = static_cast<double>(table.len1());
  double total = 0.0;
  for (std::size_t d = 0; d < w2.size(); ++d) {
    std::size_t matched = 0;
    if (d < table.len1()) {
      for (std::size_t s = 0; s < occ2.size(); ++s) {
        if (occ2[s] != 0) matched += occ2[s] * table.count(table.symbols()[s], d);
      }
    }
    total += static_cast<double>(matched) / len1 - static_cast<double>(absent);
  }
  return total;
}

double tps(const SymbolString& w1, const SymbolString& w2) { return tps(ComTable(w1, w2), w2); }

double cod(const ComTable& table, double g) {
  const std::size_t len1 = table.len1();
  if (len1 < 2) return 0.0;
  const std::size_t half = len1 / 2;
  const std::size_t upper = (len1 + 1) / 2;
  double total = 0.0;
  for (std::size_t d = 0; d < half; ++d) {
    const double diff = static_cast<double>(table.positionTotal(d)) -
                        static_cast<double>(table.positionTotal(d + upper));
    total += g == 1.0 ? diff : std::pow(diff, g);
  }
  return total;
}

double cod(const SymbolString& w1, const SymbolString& w2, double g) {
  if (w1.size() < 2) return 0.0;
  return cod(ComTable(w1, w2), g);
}

}  // namespace simstring
