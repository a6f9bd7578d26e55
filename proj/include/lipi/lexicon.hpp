#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lipi/phonemics.hpp"
#include "lipi/script.hpp"

namespace lipi {

enum class SourceTag { Native, Foreign };

std::string_view to_string(SourceTag t);

struct Pronunciation {
  PhonemeSeq phonemes;
  SourceTag source = SourceTag::Native;
  friend bool operator==(const Pronunciation&, const Pronunciation&) = default;
};

struct LexiconEntry {
  std::u32string headword;  // NFC, as written
  ScriptTag script = ScriptTag::Other;
  SourceTag source = SourceTag::Native;  // tag of the first row seen
  std::vector<Pronunciation> pronunciations;  // file order; empty for a stub
  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Word -> pronunciations. Indic headwords match exactly; Latin headwords
/// match case-insensitively.
class Lexicon {
 public:
  /// Adds a row. An empty `phonemes` registers a headword-only stub.
  /// Identical (word, pronunciation) pairs are kept once.
  void add(std::u32string_view word, PhonemeSeq phonemes, SourceTag source);

  const LexiconEntry* find(std::u32string_view word) const;
  /// Possibly empty.
  const std::vector<Pronunciation>& lookup(std::u32string_view word) const;
  bool contains(std::u32string_view word) const { return !lookup(word).empty(); }

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// `word \t phoneme-ids \t native|foreign`, one row per pronunciation.
  std::string to_tsv() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

 private:
  static std::u32string key_of(std::u32string_view word);

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::u32string, std::size_t> index_;
};

/// Throws TableError (naming `name`:line) for malformed rows or unknown phonemes.
Lexicon parse_lexicon(std::string_view text, std::string_view name, const MappingTables& tables);
Lexicon load_lexicon(const std::filesystem::path& path, const MappingTables& tables);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

struct CorpusLexicon {
  Lexicon lexicon;                        // sorted by headword
  std::vector<std::u32string> foreign;    // Latin headwords awaiting pronunciations
  std::vector<std::u32string> unmappable; // tokens rule G2P could not convert
};

/// Indic tokens of `script` get rule-G2P pronunciations tagged native; Latin
/// tokens become headword-only foreign stubs. Independent of line order.
CorpusLexicon build_from_corpus(std::span<const std::u32string> lines, ScriptTag script,
                                const MappingTables& tables);

}  // namespace lipi
