#include "simstring/symbol_string.hpp"

#include <algorithm>
#include <stdexcept>

#include "simstring/random.hpp"

namespace simstring {

namespace {

[[noreturn]] void outOfRange(const char* op, std::size_t index, std::size_t length) {
  throw std::out_of_range(std::string(op) + ": index " + std::to_string(index) +
                          " out of range for length " + std::to_string(length));
}

}  // namespace

SymbolString SymbolString::fromUtf8(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra;
    Symbol cp;
    if (lead < 0x80) {
      extra = 0;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (extra > 0 && i + extra >= text.size()) {
      throw std::invalid_argument("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw std::invalid_argument("invalid UTF-8 continuation byte at offset " +
                                    std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr Symbol kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw std::invalid_argument("invalid UTF-8 code point at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return SymbolString(std::move(out));
}

std::string SymbolString::toUtf8() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol cp : symbols_) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw std::invalid_argument("symbol " + std::to_string(cp) + " is not a Unicode scalar value");
    }
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

Symbol SymbolString::at(std::size_t p) const {
  if (p >= symbols_.size()) outOfRange("at", p, symbols_.size());
  return symbols_[p];
}

SymbolString substring(const SymbolString& w, std::size_t ki, std::size_t kf) {
  if (ki > kf || kf > w.size()) {
    throw std::out_of_range("substring: range [" + std::to_string(ki) + ", " + std::to_string(kf) +
                            ") invalid for length " + std::to_string(w.size()));
  }
  return SymbolString(w.begin() + static_cast<std::ptrdiff_t>(ki),
                      w.begin() + static_cast<std::ptrdiff_t>(kf));
}

Symbol charAt(const SymbolString& w, std::size_t p) { return w.at(p); }

Removal atr(const SymbolString& w, std::size_t p) {
  if (p >= w.size()) outOfRange("atr", p, w.size());
  std::vector<Symbol> rest;
  rest.reserve(w.size() - 1);
  rest.insert(rest.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
  return {w[p], SymbolString(std::move(rest))};
}

SymbolString rem(const SymbolString& w) {
  if (w.empty()) throw std::out_of_range("rem: empty string");
  return SymbolString(w.begin(), w.end() - 1);
}

SymbolString concat(const SymbolString& w1, const SymbolString& w2) {
  std::vector<Symbol> out;
  out.reserve(w1.size() + w2.size());
  out.insert(out.end(), w1.begin(), w1.end());
  out.insert(out.end(), w2.begin(), w2.end());
  return SymbolString(std::move(out));
}

SymbolMultiset intersect(const SymbolString& w1, const SymbolString& w2) {
  std::vector<Symbol> a(w1.begin(), w1.end());
  std::vector<Symbol> b(w2.begin(), w2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  SymbolMultiset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t qnt(const SymbolString& s, const SymbolString& w) {
  if (s.empty()) throw std::invalid_argument("qnt: empty pattern");
  if (s.size() > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t p = 0; p + s.size() <= w.size(); ++p) {
    if (std::equal(s.begin(), s.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) ++count;
  }
  return count;
}

SymbolString rep(const SymbolString& w, std::size_t p, Symbol c) {
  if (p >= w.size()) outOfRange("rep", p, w.size());
  std::vector<Symbol> out = w.symbols();
  out[p] = c;
  return SymbolString(std::move(out));
}

SymbolString add(const SymbolString& w, Symbol c) {
  std::vector<Symbol> out;
  out.reserve(w.size() + 1);
  out.push_back(c);
  out.insert(out.end(), w.begin(), w.end());
  return SymbolString(std::move(out));
}

SymbolString addr(const SymbolString& w, Symbol c, RandomSource& rng) {
  if (rng.real() < 0.5) return add(w, c);
  std::vector<Symbol> out = w.symbols();
  out.push_back(c);
  return SymbolString(std::move(out));
}

SymbolString shift(const SymbolString& w, std::size_t d) {
  if (w.empty()) return w;
  std::vector<Symbol> out = w.symbols();
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(d % out.size()), out.end());
  return SymbolString(std::move(out));
}

std::string displayString(const SymbolString& w) {
  try {
    return w.toUtf8();
  } catch (const std::invalid_argument&) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(w[i]);
    }
    return out + "]";
  }
}

}  // namespace simstring
