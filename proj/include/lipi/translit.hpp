#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lipi/lexicon.hpp"
#include "lipi/metrics.hpp"
#include "lipi/phonemics.hpp"
#include "lipi/script.hpp"

namespace lipi {

/// Devanagari dependent vowel sign <-> independent vowel letter.
namespace matra {
std::optional<char32_t> to_independent(char32_t sign);
std::optional<char32_t> to_dependent(char32_t letter);
/// All (sign, letter) pairs.
const std::vector<std::pair<char32_t, char32_t>>& pairs();
}  // namespace matra

struct TokenRef {
  std::u32string token;
  std::size_t line = 0;   // 1-based in corpus drivers, 0 for single calls
  std::size_t index = 0;  // token index within the line
  std::string reason;
};

struct TranslitReport {
  std::size_t words_total = 0;
  std::size_t words_converted = 0;
  std::vector<TokenRef> unmapped;
  std::vector<TokenRef> passthrough;
  MergeCounts merges_applied;
  std::size_t compounds_split = 0;
  std::size_t lexicon_hits = 0;
  // Stage-2 bookkeeping.
  std::size_t matras_rewritten = 0;
  std::size_t orphan_matras = 0;
  std::size_t collisions = 0;  // consonant+virama+vowel triples already in the input
  // Inverse bookkeeping.
  std::vector<TokenRef> ambiguous;
  std::size_t noncanonical = 0;
  InventoryReport inventory_before;
  InventoryReport inventory_after;

  /// Appends `other`; callers merge in input order.
  TranslitReport& operator+=(const TranslitReport& other);
};

enum class WordStatus { Converted, Passthrough, Unmapped };

struct Stage1Word {
  std::u32string text;
  WordStatus status = WordStatus::Converted;
  std::string reason;
  MergeCounts merges;
  std::size_t parts = 1;
  bool from_lexicon = false;
};

struct SplitResult {
  std::vector<std::u32string> parts;
  bool oov = false;
};

/// Minimum number of aksharas in each compound part.
inline constexpr std::size_t kMinCompoundPart = 2;

/// Fewest lexicon parts, each at least kMinCompoundPart aksharas; ties go to
/// the longest first part. A lexicon word or an unsplittable word comes back
/// whole, the latter flagged oov.
SplitResult split_compounds(std::u32string_view word, const Lexicon& lexicon);

/// One whitespace-free token into Devanagari. In strict mode unmappable
/// graphemes throw UnmappedGrapheme; otherwise the token is returned verbatim
/// with status Unmapped.
Stage1Word stage1_word(std::u32string_view word, ScriptTag script, const MappingTables& tables,
                       const Lexicon& lexicon, bool strict = false);

struct Stage2Result {
  std::u32string text;
  std::size_t rewritten = 0;
  std::size_t orphans = 0;
  std::size_t collisions = 0;
};

/// Rewrites consonant + matra as consonant + virama + independent vowel. An
/// orphan matra becomes its independent vowel.
Stage2Result stage2(std::u32string_view text);

struct InverseStage2Result {
  std::u32string text;
  std::size_t rewritten = 0;
  std::size_t flagged = 0;  // non-canonical sequences seen in the input
};

InverseStage2Result inverse_stage2(std::u32string_view text);

struct FullResult {
  std::u32string text;
  TranslitReport report;
};

/// stage2 of token-wise stage1; whitespace runs collapse to single spaces.
FullResult full_transliterate(std::u32string_view text, ScriptTag script, const MappingTables& tables,
                              const Lexicon& lexicon, bool strict = false);

/// Stage-1 text of one line: token-wise stage1_word, single-space joined.
FullResult stage1_line(std::u32string_view text, ScriptTag script, const MappingTables& tables,
                       const Lexicon& lexicon, bool strict = false);

/// Lexicon headwords indexed by their Stage-1 (Devanagari) forms, one key per
/// pronunciation.
class ReverseLexicon {
 public:
  ReverseLexicon() = default;
  ReverseLexicon(const Lexicon& lexicon, const MappingTables& tables);
  const std::vector<const LexiconEntry*>& find(std::u32string_view stage1_form) const;

 private:
  std::unordered_map<std::u32string, std::vector<const LexiconEntry*>> index_;
};

struct InverseResult {
  std::u32string text;
  bool ambiguous = false;
  bool from_lexicon = false;
};

/// Devanagari Stage-1 word back into `target`. Throws NoPreimage.
InverseResult inverse_stage1(std::u32string_view word, ScriptTag target, const MappingTables& tables,
                             const ReverseLexicon& lexicon);
/// Convenience overload; indexes `lexicon` on every call.
InverseResult inverse_stage1(std::u32string_view word, ScriptTag target, const MappingTables& tables,
                             const Lexicon& lexicon);

/// inverse_stage2 then token-wise inverse_stage1. Tokens without a preimage
/// are kept verbatim and reported as unmapped.
FullResult invert_line(std::u32string_view text, ScriptTag target, const MappingTables& tables,
                       const ReverseLexicon& lexicon, bool strict = false);

}  // namespace lipi
