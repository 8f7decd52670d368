#include "simstring/text.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace simstring {

Symbol Vocabulary::intern(const std::string& word) {
  auto [it, inserted] = wordToSymbol_.try_emplace(word, nextId_);
  if (inserted) ++nextId_;
  return it->second;
}

Symbol Vocabulary::lookup(const std::string& word) const {
  auto it = wordToSymbol_.find(word);
  if (it == wordToSymbol_.end()) throw std::out_of_range("word \"" + word + "\" not in vocabulary");
  return it->second;
}

namespace {

std::vector<Symbol> decodeLenient(std::string_view raw) {
  try {
    return SymbolString::fromUtf8(raw).symbols();
  } catch (const std::invalid_argument&) {
    std::vector<Symbol> out;
    out.reserve(raw.size());
    for (unsigned char ch : raw) out.push_back(ch);
    return out;
  }
}

bool isSpace(Symbol c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == 0xA0;
}

// ASCII letters plus Latin-1 Supplement / Latin Extended-A/B letters.
bool isLetter(Symbol c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  return c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7;
}

Symbol toLower(Symbol c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  // Latin Extended-A alternates upper/lower in pairs.
  if ((c >= 0x100 && c <= 0x137) || (c >= 0x14A && c <= 0x177)) return c | 1u;
  if ((c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E)) return (c & 1u) ? c + 1 : c;
  return c;
}

void appendUtf8(std::string& out, Symbol c) {
  out += SymbolString({c}).toUtf8();
}

}  // namespace

std::vector<std::string> tokenizeText(std::string_view raw, const TextOptions& options) {
  std::vector<std::string> words;
  std::string current;
  for (Symbol c : decodeLenient(raw)) {
    if (isSpace(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else if (isLetter(c)) {
      const Symbol folded = options.keepCase ? c : toLower(c);
      if (folded < 0x80) {
        current.push_back(static_cast<char>(folded));
      } else {
        appendUtf8(current, folded);
      }
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

SymbolString preprocessText(std::string_view raw, Vocabulary& vocab, const TextOptions& options) {
  const auto words = tokenizeText(raw, options);
  if (words.empty()) throw std::invalid_argument("empty document");
  std::vector<Symbol> symbols;
  symbols.reserve(words.size());
  for (const auto& w : words) symbols.push_back(vocab.intern(w));
  return SymbolString(std::move(symbols));
}

PlagiarismLabel parsePlagiarismLabel(std::string_view text) {
  std::string word;
  std::size_t i = 0;
  while (i < text.size() && !std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  for (; i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])); ++i) {
    word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
  }
  if (word == "near" || word == "cut") return PlagiarismLabel::NearCopy;
  if (word == "light") return PlagiarismLabel::Light;
  if (word == "heavy") return PlagiarismLabel::Heavy;
  if (word == "non") return PlagiarismLabel::Non;
  throw std::invalid_argument("unknown plagiarism label \"" + std::string(text) +
                              "\" (expected near, light, heavy or non)");
}

std::string_view labelName(PlagiarismLabel label) {
  switch (label) {
    case PlagiarismLabel::NearCopy:
      return "NEAR_COPY";
    case PlagiarismLabel::Light:
      return "LIGHT";
    case PlagiarismLabel::Heavy:
      return "HEAVY";
    case PlagiarismLabel::Non:
      return "NON";
  }
  return "?";
}

namespace {

std::string readWholeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> splitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
    fields.push_back(line.substr(start, tab - start));
  }
  fields.push_back(line.substr(start));
  return fields;
}

}  // namespace

PlagiarismCorpus loadPlagiarismCorpus(const std::string& root, const std::string& index,
                                      const TextOptions& options) {
  namespace fs = std::filesystem;
  std::ifstream in(index, std::ios::binary);
  if (!in) {
    throw std::runtime_error(index +
                             ": cannot open corpus index (expected a tab-separated file with "
                             "answerPath, taskId, sourcePath, label per line)");
  }
  const fs::path base(root);
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base / path;
  };

  PlagiarismCorpus corpus;
  std::map<std::string, std::string> sourceText;
  std::size_t records = 0;
  std::string line;
  for (std::size_t lineNo = 1; std::getline(in, line); ++lineNo) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = splitTabs(line);
    if (records == 0 && corpus.errors.empty() && fields[0] == "answerPath") continue;
    ++records;
    try {
      if (fields.size() != 4) {
        throw std::runtime_error("expected 4 tab-separated fields, found " +
                                 std::to_string(fields.size()));
      }
      const PlagiarismLabel label = parsePlagiarismLabel(fields[3]);
      const std::string answerRaw = readWholeFile(resolve(fields[0]));
      auto cached = sourceText.find(fields[2]);
      if (cached == sourceText.end()) {
        cached = sourceText.emplace(fields[2], readWholeFile(resolve(fields[2]))).first;
      }
      // Tokenize both before interning so a failed record leaves the vocabulary untouched.
      const auto answerWords = tokenizeText(answerRaw, options);
      const auto sourceWords = tokenizeText(cached->second, options);
      if (answerWords.empty()) throw std::runtime_error(fields[0] + ": empty document");
      if (sourceWords.empty()) throw std::runtime_error(fields[2] + ": empty document");
      PlagiarismInstance inst;
      std::vector<Symbol> a, s;
      for (const auto& w : answerWords) a.push_back(corpus.vocabulary.intern(w));
      for (const auto& w : sourceWords) s.push_back(corpus.vocabulary.intern(w));
      inst.answer = SymbolString(std::move(a));
      inst.source = SymbolString(std::move(s));
      inst.label = label;
      inst.taskId = fields[1];
      inst.answerPath = fields[0];
      corpus.instances.push_back(std::move(inst));
    } catch (const std::exception& e) {
      corpus.errors.push_back({lineNo, e.what()});
    }
  }
  if (records == 0) throw std::runtime_error(index + ": no records");
  if (corpus.errors.size() * 10 > records) {
    std::string msg = index + ": " + std::to_string(corpus.errors.size()) + " of " +
                      std::to_string(records) + " records failed (limit 10%)";
    for (std::size_t i = 0; i < corpus.errors.size() && i < 5; ++i) {
      msg += "\n  line " + std::to_string(corpus.errors[i].line) + ": " + corpus.errors[i].message;
    }
    throw std::runtime_error(msg);
  }
  return corpus;
}

std::vector<ComparisonPair> toComparisonPairs(const std::vector<PlagiarismInstance>& instances) {
  std::vector<ComparisonPair> pairs;
  pairs.reserve(instances.size());
  for (const auto& inst : instances) {
    pairs.push_back({inst.answer, inst.source, std::string(labelName(inst.label))});
  }
  return pairs;
}

}  // namespace simstring
