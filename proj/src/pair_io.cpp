#include "simstring/pair_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace simstring {

std::string escapeField(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    switch (ch) {
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        out.push_back(ch);
    }
  }
  return out;
}

std::string unescapeField(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '\\') {
      out.push_back(escaped[i]);
      continue;
    }
    if (++i == escaped.size()) throw std::invalid_argument("dangling backslash");
    switch (escaped[i]) {
      case 't':
        out.push_back('\t');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case '\\':
        out.push_back('\\');
        break;
      default:
        throw std::invalid_argument(std::string("unknown escape \\") + escaped[i]);
    }
  }
  return out;
}

void writePairs(std::ostream& out, const std::vector<ComparisonPair>& pairs) {
  out << kPairsHeader << '\n';
  for (const auto& pair : pairs) {
    out << escapeField(pair.w1.toUtf8()) << '\t' << escapeField(pair.w2.toUtf8()) << '\t'
        << escapeField(pair.label) << '\n';
  }
}

void writePairsFile(const std::string& path, const std::vector<ComparisonPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  writePairs(out, pairs);
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<PairRecord> readPairs(std::istream& in, const std::string& source) {
  std::vector<PairRecord> records;
  std::string line;
  std::size_t lineNo = 0;
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error(source + ":" + std::to_string(lineNo) + ": " + what);
  };
  if (!std::getline(in, line)) throw std::runtime_error(source + ": empty file, missing header");
  ++lineNo;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kPairsHeader) throw fail("expected header \"" + std::string(kPairsHeader) + "\"");
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t tab; (tab = rest.find('\t')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 3) {
      throw fail("expected 3 tab-separated fields, found " + std::to_string(fields.size()));
    }
    PairRecord record;
    record.line = lineNo;
    try {
      record.pair.w1 = SymbolString::fromUtf8(unescapeField(fields[0]));
      record.pair.w2 = SymbolString::fromUtf8(unescapeField(fields[1]));
      record.pair.label = unescapeField(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<PairRecord> readPairsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return readPairs(in, path);
}

}  // namespace simstring
