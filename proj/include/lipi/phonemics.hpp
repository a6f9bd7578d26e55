#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lipi/script.hpp"

namespace lipi {

enum class PhonemeKind { Vowel, Consonant, Modifier };

struct Phoneme {
  std::string id;
  PhonemeKind kind = PhonemeKind::Consonant;
  std::vector<std::string> attributes;
  bool join_control = false;
};

/// One word's phonemes, by id. The inherent vowel is explicit.
using PhonemeSeq = std::vector<std::string>;

struct GraphemeForms {
  std::u32string independent;
  std::u32string dependent;  // empty when the phoneme has no dependent form
};

/// Per-script grapheme <-> phoneme rows.
struct ScriptTables {
  std::unordered_map<std::u32string, PhonemeSeq> g2p;
  std::unordered_map<std::string, GraphemeForms> p2g;
};

/// Intermediate phoneme reached from more than one source phoneme.
struct Merge {
  std::string intermediate;
  std::vector<std::string> sources;  // table order
};

/// Raw table texts plus a display name for diagnostics.
struct TableSource {
  std::string name;
  std::string text;
};

struct TableSet {
  TableSource phonemes;
  TableSource g2p_devanagari;
  TableSource g2p_telugu_patch;
  TableSource crossmap;
  TableSource p2g_devanagari;
  TableSource p2g_telugu_patch;
};

/// Immutable, validated table set. Build with load_tables().
class MappingTables {
 public:
  const Phoneme* phoneme(std::string_view id) const;
  bool supports(ScriptTag s) const { return s == ScriptTag::Devanagari || s == ScriptTag::Telugu; }
  /// Throws std::invalid_argument for scripts without tables.
  const ScriptTables& script(ScriptTag s) const;

  const std::string& inherent_vowel() const { return inherent_; }
  const std::map<std::string, std::string>& crossmap() const { return crossmap_; }
  /// Source phonemes mapping onto `intermediate`, in table order.
  const std::vector<std::string>& preimages(std::string_view intermediate) const;
  /// The source phoneme chosen when a merged intermediate phoneme is inverted.
  const std::string& default_preimage(std::string_view intermediate) const;
  bool is_merged(std::string_view intermediate) const;
  const std::vector<Merge>& merges() const { return merges_; }

  /// Sorted ids in the range of the crossmap.
  std::vector<std::string> intermediate_inventory() const;
  const std::vector<Phoneme>& inventory() const { return inventory_; }

 private:
  friend MappingTables load_tables(const TableSet&);

  std::vector<Phoneme> inventory_;
  std::unordered_map<std::string, std::size_t> index_;
  ScriptTables devanagari_;
  ScriptTables telugu_;
  std::map<std::string, std::string> crossmap_;
  std::map<std::string, std::vector<std::string>, std::less<>> reverse_;
  std::vector<Merge> merges_;
  std::string inherent_;
};

/// Validates totality and form invariants; throws TableError naming file:line.
MappingTables load_tables(const TableSet& sources);
MappingTables load_tables(const std::filesystem::path& dir);

/// Table files read from `dir`; the two Telugu patch files are optional.
TableSet read_table_dir(const std::filesystem::path& dir);
/// The tables compiled into the library.
TableSet embedded_table_set();
/// Embedded tables, loaded once.
const MappingTables& default_tables();

/// Parses a grapheme cell: either UTF-8 text or space-separated U+XXXX tokens.
std::u32string parse_grapheme_cell(std::string_view cell);

/// Rule G2P over aksharas. Throws UnmappedGrapheme.
PhonemeSeq g2p(std::u32string_view word, ScriptTag script, const MappingTables& tables);

/// Counts of (source, intermediate) substitutions where the two differ.
using MergeCounts = std::map<std::pair<std::string, std::string>, std::size_t>;

PhonemeSeq cross_map(const PhonemeSeq& seq, const MappingTables& tables,
                     MergeCounts* merges = nullptr);

/// Composes a word from phonemes. Throws UnknownPhoneme for ids without a
/// form in `script`.
std::u32string p2g(const PhonemeSeq& seq, const MappingTables& tables,
                   ScriptTag script = ScriptTag::Devanagari);

std::string join_phonemes(const PhonemeSeq& seq);
PhonemeSeq split_phonemes(std::string_view text);

}  // namespace lipi
