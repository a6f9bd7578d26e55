#include "lipi/translit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lipi/error.hpp"
#include "lipi/unicode.hpp"

namespace lipi {

namespace matra {
namespace {
constexpr std::pair<char32_t, char32_t> kPairs[] = {
    {0x093A, 0x0973}, {0x093B, 0x0974}, {0x093E, 0x0906}, {0x093F, 0x0907}, {0x0940, 0x0908},
    {0x0941, 0x0909}, {0x0942, 0x090A}, {0x0943, 0x090B}, {0x0944, 0x0960}, {0x0945, 0x090D},
    {0x0946, 0x090E}, {0x0947, 0x090F}, {0x0948, 0x0910}, {0x0949, 0x0911}, {0x094A, 0x0912},
    {0x094B, 0x0913}, {0x094C, 0x0914}, {0x094F, 0x0975}, {0x0956, 0x0976}, {0x0957, 0x0977},
    {0x0962, 0x090C}, {0x0963, 0x0961},
};
}  // namespace

std::optional<char32_t> to_independent(char32_t sign) {
  for (const auto& [s, l] : kPairs)
    if (s == sign) return l;
  return std::nullopt;
}

std::optional<char32_t> to_dependent(char32_t letter) {
  for (const auto& [s, l] : kPairs)
    if (l == letter) return s;
  return std::nullopt;
}

const std::vector<std::pair<char32_t, char32_t>>& pairs() {
  static const std::vector<std::pair<char32_t, char32_t>> v(std::begin(kPairs), std::end(kPairs));
  return v;
}
}  // namespace matra

TranslitReport& TranslitReport::operator+=(const TranslitReport& o) {
  words_total += o.words_total;
  words_converted += o.words_converted;
  unmapped.insert(unmapped.end(), o.unmapped.begin(), o.unmapped.end());
  passthrough.insert(passthrough.end(), o.passthrough.begin(), o.passthrough.end());
  for (const auto& [k, n] : o.merges_applied) merges_applied[k] += n;
  compounds_split += o.compounds_split;
  lexicon_hits += o.lexicon_hits;
  matras_rewritten += o.matras_rewritten;
  orphan_matras += o.orphan_matras;
  collisions += o.collisions;
  ambiguous.insert(ambiguous.end(), o.ambiguous.begin(), o.ambiguous.end());
  noncanonical += o.noncanonical;
  inventory_before += o.inventory_before;
  inventory_after += o.inventory_after;
  return *this;
}

namespace {

bool is_dev(char32_t cp, CharClass c) {
  const auto info = classify(cp);
  return info.script == ScriptTag::Devanagari && info.cls == c;
}

bool is_separator(char32_t cp) {
  const auto c = classify(cp).cls;
  return c == CharClass::Punctuation || c == CharClass::Digit;
}

// Alternating runs of letters and of punctuation / digits.
struct Run {
  std::u32string text;
  bool letters;
};

std::vector<Run> runs_of(std::u32string_view core) {
  std::vector<Run> runs;
  for (char32_t cp : core) {
    const bool letters = !is_separator(cp);
    if (runs.empty() || runs.back().letters != letters) runs.push_back({{}, letters});
    runs.back().text.push_back(cp);
  }
  return runs;
}

// First code point in a letter run that belongs neither to `script` nor to
// the join controls.
std::optional<std::size_t> foreign_position(std::u32string_view run, ScriptTag script) {
  for (std::size_t i = 0; i < run.size(); ++i) {
    const auto info = classify(run[i]);
    if (info.script != script && info.cls != CharClass::JoinControl) return i;
  }
  return std::nullopt;
}

std::u32string join(const std::vector<std::u32string>& parts, char32_t sep) {
  std::u32string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back(sep);
    out += p;
  }
  return out;
}

// Position of the consonant that a virama at `i` follows, skipping join
// controls and a nukta; npos if there is none.
std::size_t consonant_before(std::u32string_view text, std::size_t i) {
  std::size_t k = i;
  while (k > 0 && classify(text[k - 1]).cls == CharClass::JoinControl) --k;
  if (k > 0 && is_dev(text[k - 1], CharClass::Nukta)) --k;
  if (k > 0 && is_dev(text[k - 1], CharClass::Consonant)) return k - 1;
  return std::u32string_view::npos;
}

}  // namespace

SplitResult split_compounds(std::u32string_view word, const Lexicon& lexicon) {
  if (word.empty() || lexicon.contains(word)) return {{std::u32string(word)}, false};

  const auto aks = segment_aksharas(word);
  const std::size_t n = aks.size();
  std::vector<std::size_t> bound(n + 1);
  for (std::size_t i = 0; i < n; ++i) bound[i] = aks[i].begin;
  bound[n] = word.size();

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  auto part = [&](std::size_t i, std::size_t j) { return word.substr(bound[i], bound[j] - bound[i]); };
  // best[i]: fewest parts covering aksharas [i, n).
  std::vector<std::size_t> best(n + 1, kInf);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + kMinCompoundPart; j <= n; ++j) {
      if (best[j] == kInf || !lexicon.contains(part(i, j))) continue;
      best[i] = std::min(best[i], best[j] + 1);
    }
  }
  if (best[0] == kInf || best[0] < 2) return {{std::u32string(word)}, true};

  SplitResult r;
  std::size_t i = 0;
  while (i < n) {
    for (std::size_t j = n; j >= i + kMinCompoundPart; --j) {
      if (best[j] != kInf && best[j] + 1 == best[i] && lexicon.contains(part(i, j))) {
        r.parts.emplace_back(part(i, j));
        i = j;
        break;
      }
    }
  }
  return r;
}

Stage1Word stage1_word(std::u32string_view word, ScriptTag script, const MappingTables& tables,
                       const Lexicon& lexicon, bool strict) {
  Stage1Word r;
  const TokenParts parts = split_affixes(word);
  auto verbatim = [&](WordStatus status, std::string reason) {
    r.text = std::u32string(word);
    r.status = status;
    r.reason = std::move(reason);
    r.merges.clear();
    r.parts = 1;
    r.from_lexicon = false;
    return r;
  };
  auto convert = [&](const PhonemeSeq& seq) { return p2g(cross_map(seq, tables, &r.merges), tables); };

  if (parts.core.empty()) return verbatim(WordStatus::Passthrough, "no letters");

  // Whole-token lexicon entry first: covers foreign words and overrides.
  if (const auto& prons = lexicon.lookup(parts.core); !prons.empty()) {
    r.text = parts.prefix + convert(prons.front().phonemes) + parts.suffix;
    r.from_lexicon = true;
    return r;
  }

  ScriptTag ts = dominant_script(parts.core);
  if (ts == ScriptTag::Latin) return verbatim(WordStatus::Passthrough, "foreign word not in lexicon");
  if (ts != ScriptTag::Devanagari && ts != ScriptTag::Telugu) {
    if (strict) throw UnmappedGrapheme(parts.core.front(), parts.prefix.size());
    return verbatim(WordStatus::Unmapped, "unsupported script");
  }
  std::u32string out = parts.prefix;
  std::size_t offset = parts.prefix.size();
  try {
    for (const Run& run : runs_of(parts.core)) {
      if (!run.letters) {
        out += run.text;
        offset += run.text.size();
        continue;
      }
      if (const auto bad = foreign_position(run.text, ts)) {
        if (strict) throw UnmappedGrapheme(run.text[*bad], offset + *bad);
        return verbatim(WordStatus::Unmapped, "mixed-script token");
      }
      std::vector<std::u32string> pieces{run.text};
      // Compound splitting applies to Devanagari-script (Nepali) input only.
      if (ts == ScriptTag::Devanagari && script == ScriptTag::Devanagari)
        pieces = split_compounds(run.text, lexicon).parts;
      std::vector<std::u32string> converted;
      for (const auto& piece : pieces) {
        const auto& prons = lexicon.lookup(piece);
        if (!prons.empty()) {
          r.from_lexicon = true;
          converted.push_back(convert(prons.front().phonemes));
        } else {
          converted.push_back(convert(g2p(piece, ts, tables)));
        }
      }
      r.parts += pieces.size() - 1;
      out += join(converted, U' ');
      offset += run.text.size();
    }
  } catch (const UnmappedGrapheme& e) {
    if (strict) throw;
    return verbatim(WordStatus::Unmapped, "unmapped grapheme " + cp_label(e.code_point()));
  }
  r.text = out + parts.suffix;
  return r;
}

Stage2Result stage2(std::u32string_view text) {
  Stage2Result r;
  r.text.reserve(text.size() + text.size() / 2);

  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == kDevanagariVirama && matra::to_dependent(text[i + 1]) &&
        consonant_before(text, i) != std::u32string_view::npos)
      ++r.collisions;
  }

  for (const Akshara& a : segment_aksharas(text)) {
    const auto span = text.substr(a.begin, a.end - a.begin);
    if (a.kind == AksharaKind::Cluster && a.vowel_sign) {
      const auto indep = matra::to_independent(a.vowel_sign);
      if (indep) {
        std::size_t vs = 0;
        for (std::size_t k = 0; k < a.consonants.size(); ++k)
          vs += a.consonants[k].size() + a.joiners[k].size();
        if (is_dev(a.consonants.back().front(), CharClass::Consonant)) {
          r.text += span.substr(0, vs);
          r.text.push_back(kDevanagariVirama);
          r.text.push_back(*indep);
          ++r.rewritten;
        } else {
          // Devanagari sign on a foreign base: treated as an orphan.
          r.text += span.substr(0, vs);
          r.text.push_back(*indep);
          ++r.orphans;
        }
        r.text += span.substr(vs + 1);
        continue;
      }
    }
    if (a.kind == AksharaKind::Orphan) {
      if (const auto indep = matra::to_independent(a.unit)) {
        r.text.push_back(*indep);
        r.text += span.substr(1);
        ++r.orphans;
        continue;
      }
    }
    r.text += span;
  }
  return r;
}

InverseStage2Result inverse_stage2(std::u32string_view text) {
  InverseStage2Result r;
  r.text.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t cp = text[i];
    if (is_dev(cp, CharClass::DependentVowelSign)) ++r.flagged;
    if (cp == kDevanagariVirama && i + 1 < text.size() &&
        consonant_before(text, i) != std::u32string_view::npos) {
      if (const auto dep = matra::to_dependent(text[i + 1])) {
        r.text.push_back(*dep);
        ++r.rewritten;
        ++i;
        continue;
      }
      if (is_dev(text[i + 1], CharClass::IndependentVowel)) ++r.flagged;
    }
    r.text.push_back(cp);
  }
  return r;
}

FullResult stage1_line(std::u32string_view text, ScriptTag script, const MappingTables& tables,
                       const Lexicon& lexicon, bool strict) {
  FullResult out;
  auto& rep = out.report;
  rep.inventory_before.add(text);
  const auto tokens = split_tokens(text);
  std::vector<std::u32string> words;
  words.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Stage1Word w = stage1_word(tokens[i], script, tables, lexicon, strict);
    ++rep.words_total;
    switch (w.status) {
      case WordStatus::Converted:
        ++rep.words_converted;
        break;
      case WordStatus::Passthrough:
        rep.passthrough.push_back({tokens[i], 0, i, w.reason});
        break;
      case WordStatus::Unmapped:
        rep.unmapped.push_back({tokens[i], 0, i, w.reason});
        break;
    }
    for (const auto& [k, n] : w.merges) rep.merges_applied[k] += n;
    if (w.parts > 1) ++rep.compounds_split;
    if (w.from_lexicon) ++rep.lexicon_hits;
    words.push_back(std::move(w.text));
  }
  out.text = join(words, U' ');
  rep.inventory_after.add(out.text);
  return out;
}

FullResult full_transliterate(std::u32string_view text, ScriptTag script, const MappingTables& tables,
                              const Lexicon& lexicon, bool strict) {
  FullResult out = stage1_line(text, script, tables, lexicon, strict);
  Stage2Result s2 = stage2(out.text);
  out.text = std::move(s2.text);
  out.report.matras_rewritten = s2.rewritten;
  out.report.orphan_matras = s2.orphans;
  out.report.collisions = s2.collisions;
  out.report.inventory_after = InventoryReport{};
  out.report.inventory_after.add(out.text);
  return out;
}

ReverseLexicon::ReverseLexicon(const Lexicon& lexicon, const MappingTables& tables) {
  for (const LexiconEntry& e : lexicon.entries()) {
    for (const Pronunciation& p : e.pronunciations) {
      std::u32string form;
      try {
        form = p2g(cross_map(p.phonemes, tables), tables);
      } catch (const UnknownPhoneme&) {
        continue;
      }
      auto& v = index_[form];
      if (std::find(v.begin(), v.end(), &e) == v.end()) v.push_back(&e);
    }
  }
}

const std::vector<const LexiconEntry*>& ReverseLexicon::find(std::u32string_view form) const {
  static const std::vector<const LexiconEntry*> kNone;
  const auto it = index_.find(std::u32string(form));
  return it == index_.end() ? kNone : it->second;
}

namespace {

InverseResult invert_run(std::u32string_view run, ScriptTag target, const MappingTables& tables) {
  PhonemeSeq ph;
  try {
    ph = g2p(run, ScriptTag::Devanagari, tables);
  } catch (const UnmappedGrapheme& e) {
    throw NoPreimage("no preimage for '" + to_utf8(run) + "': " + e.what());
  }
  InverseResult r;
  PhonemeSeq src;
  src.reserve(ph.size());
  for (const auto& id : ph) {
    const auto& pre = tables.preimages(id);
    if (pre.empty())
      throw NoPreimage("no preimage for '" + to_utf8(run) + "': phoneme '" + id +
                       "' is not in the intermediate inventory");
    if (pre.size() > 1) r.ambiguous = true;
    src.push_back(tables.default_preimage(id));
  }
  try {
    r.text = p2g(src, tables, target);
  } catch (const UnknownPhoneme& e) {
    throw NoPreimage("no preimage for '" + to_utf8(run) + "' in " + std::string(to_string(target)) +
                     ": " + e.what());
  }
  return r;
}

}  // namespace

InverseResult inverse_stage1(std::u32string_view word, ScriptTag target, const MappingTables& tables,
                             const ReverseLexicon& lexicon) {
  if (!tables.supports(target))
    throw std::invalid_argument("cannot invert into " + std::string(to_string(target)));
  const TokenParts parts = split_affixes(word);
  InverseResult r;
  if (parts.core.empty()) {
    r.text = std::u32string(word);
    return r;
  }

  const auto& cands = lexicon.find(parts.core);
  if (!cands.empty()) {
    std::vector<const LexiconEntry*> in_target;
    for (const auto* e : cands)
      if (e->script == target) in_target.push_back(e);
    const auto& pool = in_target.empty() ? cands : in_target;
    r.text = parts.prefix + pool.front()->headword + parts.suffix;
    r.ambiguous = pool.size() > 1;
    r.from_lexicon = true;
    return r;
  }

  if (dominant_script(parts.core) != ScriptTag::Devanagari)
    throw NoPreimage("no preimage for '" + to_utf8(word) + "': not a Devanagari word");

  r.text = parts.prefix;
  for (const Run& run : runs_of(parts.core)) {
    if (!run.letters) {
      r.text += run.text;
      continue;
    }
    if (foreign_position(run.text, ScriptTag::Devanagari))
      throw NoPreimage("no preimage for '" + to_utf8(word) + "': mixed-script token");
    const InverseResult part = invert_run(run.text, target, tables);
    r.text += part.text;
    r.ambiguous = r.ambiguous || part.ambiguous;
  }
  r.text += parts.suffix;
  return r;
}

InverseResult inverse_stage1(std::u32string_view word, ScriptTag target, const MappingTables& tables,
                             const Lexicon& lexicon) {
  return inverse_stage1(word, target, tables, ReverseLexicon(lexicon, tables));
}

FullResult invert_line(std::u32string_view text, ScriptTag target, const MappingTables& tables,
                       const ReverseLexicon& lexicon, bool strict) {
  FullResult out;
  auto& rep = out.report;
  rep.inventory_before.add(text);
  const InverseStage2Result s2 = inverse_stage2(text);
  rep.noncanonical = s2.flagged;
  rep.matras_rewritten = s2.rewritten;

  const auto tokens = split_tokens(s2.text);
  std::vector<std::u32string> words;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ++rep.words_total;
    const std::u32string core = split_affixes(tokens[i]).core;
    const bool devanagari = dominant_script(core) == ScriptTag::Devanagari;
    if (core.empty() || (!devanagari && lexicon.find(core).empty())) {
      rep.passthrough.push_back({tokens[i], 0, i, core.empty() ? "no letters" : "not Devanagari"});
      words.push_back(tokens[i]);
      continue;
    }
    try {
      InverseResult r = inverse_stage1(tokens[i], target, tables, lexicon);
      ++rep.words_converted;
      if (r.ambiguous) rep.ambiguous.push_back({tokens[i], 0, i, "merged phoneme"});
      words.push_back(std::move(r.text));
    } catch (const NoPreimage& e) {
      if (strict) throw;
      rep.unmapped.push_back({tokens[i], 0, i, e.what()});
      words.push_back(tokens[i]);
    }
  }
  out.text = join(words, U' ');
  rep.inventory_after.add(out.text);
  return out;
}

}  // namespace lipi
