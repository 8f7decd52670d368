#include "simstring/baseline.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace simstring {

namespace {

double normalizedSquare(std::size_t common, std::size_t len1, std::size_t len2) {
  if (len1 == 0 || len2 == 0) return 0.0;
  const double c = static_cast<double>(common);
  return c * c / (static_cast<double>(len1) * static_cast<double>(len2));
}

// Start position in w1 and length of the leftmost longest common substring.
std::pair<std::size_t, std::size_t> longestCommonSubstring(const SymbolString& w1,
                                                           const SymbolString& w2) {
  const std::size_t n = w1.size();
  const std::size_t m = w2.size();
  std::vector<std::size_t> prev(m + 1, 0);
  std::vector<std::size_t> curr(m + 1, 0);
  std::size_t bestLen = 0;
  std::size_t bestEnd = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      curr[j] = w1[i - 1] == w2[j - 1] ? prev[j - 1] + 1 : 0;
      if (curr[j] > bestLen) {
        bestLen = curr[j];
        bestEnd = i;
      }
    }
    std::swap(prev, curr);
  }
  return {bestEnd - bestLen, bestLen};
}

}  // namespace

LengthFeatures lengthFeatures(const SymbolString& w1, const SymbolString& w2) {
  LengthFeatures f;
  f.len1 = w1.size();
  f.len2 = w2.size();
  f.diff = static_cast<std::int64_t>(f.len2) - static_cast<std::int64_t>(f.len1);
  f.absDiff = f.len1 > f.len2 ? f.len1 - f.len2 : f.len2 - f.len1;
  return f;
}

SymbolString lcs(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t n = w1.size();
  const std::size_t m = w2.size();
  // table[i][j] = LCS length of w1[i..] and w2[j..]
  std::vector<std::size_t> table((n + 1) * (m + 1), 0);
  auto at = [m, &table](std::size_t i, std::size_t j) -> std::size_t& { return table[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = w1[i] == w2[j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  std::vector<Symbol> out;
  out.reserve(at(0, 0));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (w1[i] == w2[j]) {
      out.push_back(w1[i]);
      ++i;
      ++j;
    } else if (at(i + 1, j) >= at(i, j + 1)) {
      ++i;
    } else {
      ++j;
    }
  }
  return SymbolString(std::move(out));
}

std::size_t lcsLength(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t m = w2.size();
  std::vector<std::size_t> prev(m + 1, 0);
  std::vector<std::size_t> curr(m + 1, 0);
  for (std::size_t i = 1; i <= w1.size(); ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      curr[j] = w1[i - 1] == w2[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double nlcs(const SymbolString& w1, const SymbolString& w2) {
  return normalizedSquare(lcsLength(w1, w2), w1.size(), w2.size());
}

SymbolString mclcs(const SymbolString& w1, const SymbolString& w2, std::size_t n1, std::size_t n2) {
  if (n1 > w1.size() || n2 > w2.size()) {
    throw std::out_of_range("mclcs: offsets (" + std::to_string(n1) + ", " + std::to_string(n2) +
                            ") exceed lengths (" + std::to_string(w1.size()) + ", " +
                            std::to_string(w2.size()) + ")");
  }
  std::size_t len = 0;
  while (n1 + len < w1.size() && n2 + len < w2.size() && w1[n1 + len] == w2[n2 + len]) ++len;
  return substring(w1, n1, n1 + len);
}

SymbolString mclcsGlobal(const SymbolString& w1, const SymbolString& w2) {
  const auto [start, len] = longestCommonSubstring(w1, w2);
  return substring(w1, start, start + len);
}

std::size_t longestCommonSubstringLength(const SymbolString& w1, const SymbolString& w2) {
  return longestCommonSubstring(w1, w2).second;
}

double nmclcs(const SymbolString& w1, const SymbolString& w2, MclcsVariant variant) {
  if (w1.empty() || w2.empty()) return 0.0;
  std::size_t common = 0;
  switch (variant) {
    case MclcsVariant::Start:
      common = mclcs(w1, w2, 0, 0).size();
      break;
    case MclcsVariant::SkipFirstOfW2:
      common = mclcs(w1, w2, 0, 1).size();
      break;
    case MclcsVariant::Middle:
      common = mclcs(w1, w2, w1.size() / 2, w2.size() / 2).size();
      break;
    case MclcsVariant::Global:
      common = longestCommonSubstringLength(w1, w2);
      break;
  }
  return normalizedSquare(common, w1.size(), w2.size());
}

EditCost modHamming(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t shorter = std::min(w1.size(), w2.size());
  std::size_t same = 0;
  for (std::size_t p = 0; p < shorter; ++p) same += w1[p] == w2[p];
  return shorter - same;
}

EditCost levenshtein(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t m = w2.size();
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= w1.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t q = w1[i - 1] == w2[j - 1] ? 0 : 1;
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + q});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

EditCost damerau(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t n = w1.size();
  const std::size_t m = w2.size();
  // Three rolling rows: i-2, i-1, i.
  std::vector<std::size_t> before(m + 1, 0);
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t q = w1[i - 1] == w2[j - 1] ? 0 : 1;
      std::size_t best = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + q});
      if (i > 1 && j > 1 && w1[i - 1] == w2[j - 2] && w1[i - 2] == w2[j - 1]) {
        best = std::min(best, before[j - 2] + 1);
      }
      curr[j] = best;
    }
    std::swap(before, prev);
    std::swap(prev, curr);
  }
  return prev[m];
}

double dice(const SymbolString& w1, const SymbolString& w2) {
  const std::size_t total = w1.size() + w2.size();
  if (total == 0) return 1.0;
  return 2.0 * static_cast<double>(intersect(w1, w2).size()) / static_cast<double>(total);
}

}  // namespace simstring
