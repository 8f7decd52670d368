#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simstring/symbol_string.hpp"
#include "simstring/synth.hpp"

namespace simstring {

// Word → Symbol mapping. Ids are assigned densely from 0 in first-seen order.
class Vocabulary {
 public:
  Symbol intern(const std::string& word);
  // Throws std::out_of_range for unknown words.
  Symbol lookup(const std::string& word) const;
  bool contains(const std::string& word) const { return wordToSymbol_.count(word) != 0; }
  std::size_t size() const { return wordToSymbol_.size(); }
  Symbol nextId() const { return nextId_; }

 private:
  std::map<std::string, Symbol> wordToSymbol_;
  Symbol nextId_ = 0;
};

struct TextOptions {
  bool keepCase = false;
};

// Splits raw text into normalized words: characters that are neither letters nor
// whitespace are dropped, letters are lowercased unless keepCase is set. Input
// that is not valid UTF-8 is decoded byte-wise as Latin-1.
std::vector<std::string> tokenizeText(std::string_view raw, const TextOptions& options = {});

// Word-level SymbolString over `vocab`. Throws std::invalid_argument
// ("empty document") when no words remain.
SymbolString preprocessText(std::string_view raw, Vocabulary& vocab, const TextOptions& options = {});

enum class PlagiarismLabel { NearCopy, Light, Heavy, Non };

// Case-insensitive, keyed on the first word: near/cut, light, heavy, non.
// Throws std::invalid_argument for anything else.
PlagiarismLabel parsePlagiarismLabel(std::string_view text);
std::string_view labelName(PlagiarismLabel label);  // NEAR_COPY, LIGHT, HEAVY, NON

struct PlagiarismInstance {
  SymbolString answer;
  SymbolString source;
  PlagiarismLabel label;
  std::string taskId;
  std::string answerPath;
};

struct CorpusRecordError {
  std::size_t line;
  std::string message;
};

struct PlagiarismCorpus {
  std::vector<PlagiarismInstance> instances;
  std::vector<CorpusRecordError> errors;
  Vocabulary vocabulary;
};

// Index: tab-separated answerPath, taskId, sourcePath, label; paths are relative
// to `root` unless absolute. Blank lines, '#' comments and a header row starting
// with "answerPath" are ignored. Bad records are collected in `errors`; throws
// std::runtime_error when the index is unreadable, has no records, or more than
// 10% of records fail.
PlagiarismCorpus loadPlagiarismCorpus(const std::string& root, const std::string& index,
                                      const TextOptions& options = {});

// answer → w1, source → w2, label name as the class.
std::vector<ComparisonPair> toComparisonPairs(const std::vector<PlagiarismInstance>& instances);

}  // namespace simstring
