#include "lipi/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lipi/error.hpp"
#include "lipi/unicode.hpp"
#include "tsv.hpp"

namespace lipi {

std::string_view to_string(SourceTag t) { return t == SourceTag::Native ? "native" : "foreign"; }

std::u32string Lexicon::key_of(std::u32string_view word) {
  if (dominant_script(word) == ScriptTag::Latin) return to_u32(case_fold(to_utf8(word)));
  return std::u32string(word);
}

void Lexicon::add(std::u32string_view word, PhonemeSeq phonemes, SourceTag source) {
  const std::u32string key = key_of(word);
  auto it = index_.find(key);
  if (it == index_.end()) {
    it = index_.emplace(key, entries_.size()).first;
    entries_.push_back(LexiconEntry{std::u32string(word), dominant_script(word), source, {}});
  }
  if (phonemes.empty()) return;
  auto& prons = entries_[it->second].pronunciations;
  Pronunciation p{std::move(phonemes), source};
  if (std::find(prons.begin(), prons.end(), p) == prons.end()) prons.push_back(std::move(p));
}

const LexiconEntry* Lexicon::find(std::u32string_view word) const {
  const auto it = index_.find(key_of(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const std::vector<Pronunciation>& Lexicon::lookup(std::u32string_view word) const {
  static const std::vector<Pronunciation> kNone;
  const LexiconEntry* e = find(word);
  return e ? e->pronunciations : kNone;
}

std::string Lexicon::to_tsv() const {
  std::string out;
  for (const auto& e : entries_) {
    const std::string word = to_utf8(e.headword);
    if (e.pronunciations.empty()) {
      out += word + "\t\t" + std::string(to_string(e.source)) + "\n";
      continue;
    }
    for (const auto& p : e.pronunciations)
      out += word + "\t" + join_phonemes(p.phonemes) + "\t" + std::string(to_string(p.source)) + "\n";
  }
  return out;
}

Lexicon parse_lexicon(std::string_view text, std::string_view name, const MappingTables& tables) {
  Lexicon lex;
  auto fail = [&](std::size_t line, const std::string& msg) {
    throw TableError(std::string(name) + ":" + std::to_string(line) + ": " + msg);
  };
  for (const auto& row : detail::parse_tsv(text)) {
    if (row.cells.size() != 3) fail(row.line, "malformed row: expected word, phonemes, native|foreign");
    const std::string word = nfc(detail::trim(row.cells[0]));
    if (word.empty()) fail(row.line, "empty headword");
    const std::string tag = detail::trim(row.cells[2]);
    SourceTag source;
    if (tag == "native") source = SourceTag::Native;
    else if (tag == "foreign") source = SourceTag::Foreign;
    else fail(row.line, "invalid source tag '" + tag + "'");
    PhonemeSeq phonemes = split_phonemes(row.cells[1]);
    for (const auto& id : phonemes)
      if (!tables.phoneme(id)) fail(row.line, "invalid phoneme id '" + id + "'");
    lex.add(to_u32(word), std::move(phonemes), source);
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path, const MappingTables& tables) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lexicon(ss.str(), path.string(), tables);
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << lexicon.to_tsv();
  if (!out) throw IoError("write failed: " + path.string());
}

CorpusLexicon build_from_corpus(std::span<const std::u32string> lines, ScriptTag script,
                                const MappingTables& tables) {
  std::set<std::u32string> indic, latin, unmappable;
  for (const auto& line : lines) {
    for (const auto& token : split_tokens(line)) {
      std::u32string core = split_affixes(token).core;
      if (core.empty()) continue;
      const ScriptTag s = dominant_script(core);
      if (s == ScriptTag::Latin) latin.insert(std::move(core));
      else if (s == script) indic.insert(std::move(core));
      else unmappable.insert(std::move(core));
    }
  }

  CorpusLexicon out;
  // Sorted insertion keeps the result independent of corpus order.
  std::map<std::u32string, std::pair<PhonemeSeq, SourceTag>> rows;
  for (const auto& w : indic) {
    try {
      rows.emplace(w, std::pair{g2p(w, script, tables), SourceTag::Native});
    } catch (const UnmappedGrapheme&) {
      unmappable.insert(w);
    }
  }
  std::set<std::u32string> seen_latin;
  for (const auto& w : latin) {
    const std::u32string folded = to_u32(case_fold(to_utf8(w)));
    if (!seen_latin.insert(folded).second) continue;
    rows.emplace(folded, std::pair{PhonemeSeq{}, SourceTag::Foreign});
    out.foreign.push_back(folded);
  }
  for (auto& [w, row] : rows) out.lexicon.add(w, std::move(row.first), row.second);
  out.unmappable.assign(unmappable.begin(), unmappable.end());
  return out;
}

}  // namespace lipi
