#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simstring {

class RandomSource;

// Opaque symbol identifier: a Unicode code point for character data, or a
// vocabulary id for word-tokenized text. Compared by identity only.
using Symbol = std::uint32_t;

// Immutable-by-convention sequence of symbols. All operators below return new
// values and never modify their arguments.
class SymbolString {
 public:
  using const_iterator = std::vector<Symbol>::const_iterator;

  SymbolString() = default;
  explicit SymbolString(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  SymbolString(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  template <typename It>
  SymbolString(It first, It last) : symbols_(first, last) {}

  // Decodes UTF-8 into code points. Throws std::invalid_argument on malformed input.
  static SymbolString fromUtf8(std::string_view text);
  // Encodes each symbol as a UTF-8 code point. Throws std::invalid_argument for
  // symbols outside the Unicode scalar range.
  std::string toUtf8() const;

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Symbol operator[](std::size_t p) const { return symbols_[p]; }
  // Bounds-checked access; throws std::out_of_range.
  Symbol at(std::size_t p) const;

  std::span<const Symbol> view() const { return symbols_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const_iterator begin() const { return symbols_.begin(); }
  const_iterator end() const { return symbols_.end(); }

  friend bool operator==(const SymbolString&, const SymbolString&) = default;
  friend auto operator<=>(const SymbolString&, const SymbolString&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Symbols sorted ascending; duplicates kept.
using SymbolMultiset = std::vector<Symbol>;

struct Removal {
  Symbol symbol;
  SymbolString rest;
};

// w[ki, kf)
SymbolString substring(const SymbolString& w, std::size_t ki, std::size_t kf);
// w[p]
Symbol charAt(const SymbolString& w, std::size_t p);
// Removes position p, returning the symbol and the remaining string.
Removal atr(const SymbolString& w, std::size_t p);
// Drops the last symbol.
SymbolString rem(const SymbolString& w);
SymbolString concat(const SymbolString& w1, const SymbolString& w2);
// Multiset intersection: each symbol min(count in w1, count in w2) times.
SymbolMultiset intersect(const SymbolString& w1, const SymbolString& w2);
// Overlapping occurrences of s in w. Throws std::invalid_argument when s is empty.
std::size_t qnt(const SymbolString& s, const SymbolString& w);
SymbolString rep(const SymbolString& w, std::size_t p, Symbol c);
// Prepends c.
SymbolString add(const SymbolString& w, Symbol c);
// Prepends or appends c with probability 1/2 each (one draw).
SymbolString addr(const SymbolString& w, Symbol c, RandomSource& rng);
// Left rotation: the first d mod |w| symbols move to the end.
SymbolString shift(const SymbolString& w, std::size_t d);

// UTF-8 when every symbol is a code point, otherwise the ids in brackets.
std::string displayString(const SymbolString& w);

}  // namespace simstring
