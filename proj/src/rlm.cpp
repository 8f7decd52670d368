#include "simstring/rlm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simstring {

RlmVector::RlmVector(std::size_t len1, std::vector<std::size_t> counts)
    : len1_(len1), counts_(std::move(counts)) {
  counts_.resize(len1_ + 1, 0);
}

std::size_t RlmVector::count(std::size_t l) const {
  return l >= 1 && l <= len1_ ? counts_[l] : 0;
}

RlmVector buildRlm(const SymbolString& w1, const SymbolString& w2) {
  if (w1.empty()) throw std::invalid_argument("buildRlm: w1 is empty");
  const std::size_t n = w1.size();
  const std::size_t m = w2.size();
  // Each occurrence in w2 of a distinct w1-substring s of length l is a start
  // position q with w2[q, q+l) == s, so count(l) = #{q : w2[q, q+l) occurs in w1}.
  // Occurrence is prefix-closed, so that holds exactly when l <= reach(q), the
  // longest prefix of w2[q..] occurring in w1 = max_k LCP(w1[k..], w2[q..]).
  std::vector<std::size_t> lcpNext(n + 1, 0);  // LCP(w1[k..], w2[q+1..])
  std::vector<std::size_t> lcpHere(n + 1, 0);
  std::vector<std::size_t> reachHistogram(n + 1, 0);
  for (std::size_t q = m; q-- > 0;) {
    std::size_t reach = 0;
    for (std::size_t k = 0; k < n; ++k) {
      lcpHere[k] = w1[k] == w2[q] ? lcpNext[k + 1] + 1 : 0;
      reach = std::max(reach, lcpHere[k]);
    }
    lcpHere[n] = 0;
    ++reachHistogram[reach];
    std::swap(lcpNext, lcpHere);
  }
  std::vector<std::size_t> counts(n + 1, 0);
  std::size_t atLeast = 0;
  for (std::size_t l = n; l >= 1; --l) {
    atLeast += reachHistogram[l];
    counts[l] = atLeast;
  }
  return RlmVector(n, std::move(counts));
}

std::size_t so(const RlmVector& rlm) {
  std::size_t total = 0;
  for (std::size_t l = 1; l <= rlm.len1(); ++l) total += rlm.count(l);
  return total;
}

double wso(const RlmVector& rlm, double g) {
  double total = 0.0;
  for (std::size_t l = 1; l <= rlm.len1(); ++l) {
    const double weight = g == 1.0 ? static_cast<double>(l) : std::pow(static_cast<double>(l), g);
    total += weight * static_cast<double>(rlm.count(l));
  }
  return total;
}

std::size_t mo(const RlmVector& rlm) {
  std::size_t best = 0;
  for (std::size_t l = 1; l <= rlm.len1(); ++l) best = std::max(best, rlm.count(l));
  return best;
}

std::size_t morl(const RlmVector& rlm) {
  const std::size_t best = mo(rlm);
  if (best == 0) return 0;
  for (std::size_t l = 1; l <= rlm.len1(); ++l) {
    if (rlm.count(l) == best) return l;
  }
  return 0;
}

std::size_t moml(const RlmVector& rlm, double g) {
  std::size_t bestLength = 0;
  double bestScore = -1.0;
  for (std::size_t l = 1; l <= rlm.len1(); ++l) {
    const double score = static_cast<double>(rlm.count(l)) /
                         (std::pow(static_cast<double>(l), g) + 1.0);
    if (score > bestScore) {
      bestScore = score;
      bestLength = l;
    }
  }
  return rlm.count(bestLength);
}

std::size_t mlmo(const RlmVector& rlm) {
  const std::size_t best = mo(rlm);
  if (best == 0) return 0;
  std::size_t length = 0;
  for (std::size_t l = rlm.len1(); l >= 1; --l) {
    if (rlm.count(l) == best) length = l;
  }
  return length;
}

std::size_t rlmMclcs(const RlmVector& rlm) {
  for (std::size_t l = rlm.len1(); l >= 1; --l) {
    if (rlm.count(l) >= 1) return l;
  }
  return 0;
}

}  // namespace simstring
