#include "lipi/phonemics.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "embedded_tables.hpp"
#include "lipi/error.hpp"
#include "lipi/unicode.hpp"
#include "tsv.hpp"

namespace lipi {

UnmappedGrapheme::UnmappedGrapheme(char32_t cp, std::size_t position)
    : Error("unmapped grapheme " + cp_label(cp) + " at position " + std::to_string(position)),
      cp_(cp),
      position_(position) {}

UnknownPhoneme::UnknownPhoneme(std::string id)
    : Error("unknown phoneme '" + id + "'"), id_(std::move(id)) {}

namespace {

using detail::TsvRow;

[[noreturn]] void fail(const TableSource& src, std::size_t line, const std::string& msg) {
  throw TableError(src.name + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail(const TableSource& src, const std::string& msg) {
  throw TableError(src.name + ": " + msg);
}

std::vector<TsvRow> rows_of(const TableSource& src, std::size_t min_cells, bool allow_empty) {
  auto rows = detail::parse_tsv(src.text);
  if (rows.empty() && !allow_empty) fail(src, "empty table");
  for (const auto& r : rows)
    if (r.cells.size() < min_cells)
      fail(src, r.line, "malformed line: expected " + std::to_string(min_cells) + " tab-separated fields");
  return rows;
}

PhonemeKind kind_for_class(CharClass c) {
  switch (c) {
    case CharClass::Consonant: return PhonemeKind::Consonant;
    case CharClass::IndependentVowel:
    case CharClass::DependentVowelSign: return PhonemeKind::Vowel;
    default: return PhonemeKind::Modifier;
  }
}

// The Telugu counterpart of a Devanagari string by the +0x0300 layout offset,
// or empty if some code point has no same-named, same-class counterpart.
std::u32string telugu_counterpart(std::u32string_view dev) {
  std::u32string out;
  for (char32_t cp : dev) {
    if (cp < 0x0900 || cp > 0x097F) {
      out.push_back(cp);
      continue;
    }
    const char32_t tel = cp + kDevanagariToTelugu;
    const auto di = classify(cp), ti = classify(tel);
    if (ti.script != ScriptTag::Telugu || ti.cls != di.cls) return {};
    std::string dname = char_name(cp);
    const std::string tname = char_name(tel);
    if (dname.rfind("DEVANAGARI ", 0) != 0) return {};
    if ("TELUGU " + dname.substr(11) != tname) return {};
    out.push_back(tel);
  }
  return out;
}

void read_g2p(const TableSource& src, const MappingTables& tables, ScriptTables& into,
              bool allow_empty, bool override_existing) {
  std::set<std::u32string> seen;
  for (const auto& r : rows_of(src, 2, allow_empty)) {
    const std::u32string key = parse_grapheme_cell(r.cells[0]);
    if (key.empty()) fail(src, r.line, "empty grapheme");
    if (!seen.insert(key).second) fail(src, r.line, "duplicate key '" + to_utf8(key) + "'");
    if (!override_existing && into.g2p.count(key))
      fail(src, r.line, "duplicate key '" + to_utf8(key) + "'");
    PhonemeSeq ids = split_phonemes(r.cells[1]);
    if (ids.empty()) fail(src, r.line, "no phoneme ids");
    const PhonemeKind expect = kind_for_class(classify(key.front()).cls);
    for (const auto& id : ids) {
      const Phoneme* p = tables.phoneme(id);
      if (!p) fail(src, r.line, "unknown phoneme '" + id + "'");
      if (ids.size() == 1 && p->kind != expect)
        fail(src, r.line, "phoneme '" + id + "' kind does not match grapheme class");
    }
    into.g2p[key] = std::move(ids);
  }
}

void read_p2g(const TableSource& src, const MappingTables& tables, ScriptTables& into,
              bool allow_empty) {
  std::set<std::string> seen;
  for (const auto& r : rows_of(src, 3, allow_empty)) {
    const std::string id = detail::trim(r.cells[0]);
    const Phoneme* p = tables.phoneme(id);
    if (!p) fail(src, r.line, "unknown phoneme '" + id + "'");
    if (!seen.insert(id).second) fail(src, r.line, "duplicate key '" + id + "'");
    GraphemeForms forms;
    forms.independent = parse_grapheme_cell(r.cells[1]);
    if (forms.independent.empty()) fail(src, r.line, "empty independent form");
    const std::string dep = detail::trim(r.cells[2]);
    if (dep != "-") forms.dependent = parse_grapheme_cell(dep);
    if (p->kind != PhonemeKind::Vowel && !forms.dependent.empty())
      fail(src, r.line, "only vowels take a dependent form");
    into.p2g[id] = std::move(forms);
  }
}

}  // namespace

std::u32string parse_grapheme_cell(std::string_view cell) {
  const auto tokens = detail::split_ws(cell);
  const bool hex = !tokens.empty() && std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    return t.size() >= 6 && t.size() <= 8 && t[0] == 'U' && t[1] == '+' &&
           std::all_of(t.begin() + 2, t.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
  });
  if (hex) {
    std::u32string out;
    for (const auto& t : tokens) out.push_back(static_cast<char32_t>(std::stoul(t.substr(2), nullptr, 16)));
    return out;
  }
  return to_u32(detail::trim(cell));
}

const Phoneme* MappingTables::phoneme(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &inventory_[it->second];
}

const ScriptTables& MappingTables::script(ScriptTag s) const {
  if (s == ScriptTag::Devanagari) return devanagari_;
  if (s == ScriptTag::Telugu) return telugu_;
  throw std::invalid_argument("no tables for script " + std::string(to_string(s)));
}

const std::vector<std::string>& MappingTables::preimages(std::string_view intermediate) const {
  static const std::vector<std::string> kNone;
  const auto it = reverse_.find(intermediate);
  return it == reverse_.end() ? kNone : it->second;
}

const std::string& MappingTables::default_preimage(std::string_view intermediate) const {
  const auto& pre = preimages(intermediate);
  if (pre.empty()) throw UnknownPhoneme(std::string(intermediate));
  for (const auto& s : pre)
    if (s == intermediate) return s;
  return pre.front();
}

bool MappingTables::is_merged(std::string_view intermediate) const {
  return preimages(intermediate).size() > 1;
}

std::vector<std::string> MappingTables::intermediate_inventory() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : reverse_) out.push_back(id);
  return out;
}

MappingTables load_tables(const TableSet& sources) {
  MappingTables t;

  for (const auto& r : rows_of(sources.phonemes, 2, false)) {
    Phoneme p;
    p.id = detail::trim(r.cells[0]);
    if (p.id.empty() || p.id.find(' ') != std::string::npos)
      fail(sources.phonemes, r.line, "invalid phoneme id");
    const std::string kind = detail::trim(r.cells[1]);
    if (kind == "Vowel") p.kind = PhonemeKind::Vowel;
    else if (kind == "Consonant") p.kind = PhonemeKind::Consonant;
    else if (kind == "Modifier") p.kind = PhonemeKind::Modifier;
    else fail(sources.phonemes, r.line, "unknown phoneme kind '" + kind + "'");
    if (r.cells.size() > 2) p.attributes = detail::split_ws(r.cells[2]);
    if (t.index_.count(p.id)) fail(sources.phonemes, r.line, "duplicate key '" + p.id + "'");
    t.index_[p.id] = t.inventory_.size();
    t.inventory_.push_back(std::move(p));
  }

  read_g2p(sources.g2p_devanagari, t, t.devanagari_, false, false);
  read_p2g(sources.p2g_devanagari, t, t.devanagari_, false);

  for (auto& [key, forms] : t.devanagari_.p2g) {
    auto& p = t.inventory_[t.index_.at(key)];
    p.join_control = forms.independent.size() == 1 &&
                     classify(forms.independent.front()).cls == CharClass::JoinControl;
  }

  // Telugu: offset-derived rows, then the patch rows on top.
  for (const auto& [key, ids] : t.devanagari_.g2p) {
    auto tel = telugu_counterpart(key);
    if (!tel.empty()) t.telugu_.g2p.emplace(std::move(tel), ids);
  }
  for (const auto& [id, forms] : t.devanagari_.p2g) {
    GraphemeForms tf{telugu_counterpart(forms.independent), {}};
    if (tf.independent.empty()) continue;
    if (!forms.dependent.empty()) {
      tf.dependent = telugu_counterpart(forms.dependent);
      if (tf.dependent.empty()) continue;
    }
    t.telugu_.p2g.emplace(id, std::move(tf));
  }
  read_g2p(sources.g2p_telugu_patch, t, t.telugu_, true, true);
  read_p2g(sources.p2g_telugu_patch, t, t.telugu_, true);

  // Inherent vowel: the one vowel without a dependent form.
  for (const ScriptTables* st : {&t.devanagari_, &t.telugu_}) {
    const TableSource& src = st == &t.devanagari_ ? sources.p2g_devanagari : sources.p2g_telugu_patch;
    std::vector<std::string> bare;
    for (const auto& [id, forms] : st->p2g)
      if (t.phoneme(id)->kind == PhonemeKind::Vowel && forms.dependent.empty()) bare.push_back(id);
    std::sort(bare.begin(), bare.end());
    if (st == &t.devanagari_) {
      if (bare.size() != 1)
        fail(src, "exactly one vowel (the inherent vowel) may lack a dependent form; found " +
                      std::to_string(bare.size()));
      t.inherent_ = bare.front();
    } else if (!(bare.empty() || (bare.size() == 1 && bare.front() == t.inherent_))) {
      fail(src, "vowel '" + (bare.front() == t.inherent_ ? bare.back() : bare.front()) +
                    "' lacks a dependent form");
    }
  }

  std::map<std::string, std::size_t> cross_line;
  for (const auto& r : rows_of(sources.crossmap, 2, false)) {
    const std::string src = detail::trim(r.cells[0]);
    const std::string dst = detail::trim(r.cells[1]);
    const Phoneme* ps = t.phoneme(src);
    const Phoneme* pd = t.phoneme(dst);
    if (!ps) fail(sources.crossmap, r.line, "unknown phoneme '" + src + "'");
    if (!pd) fail(sources.crossmap, r.line, "unknown phoneme '" + dst + "'");
    if (ps->kind != pd->kind)
      fail(sources.crossmap, r.line, "crossmap changes phoneme kind: '" + src + "' -> '" + dst + "'");
    if (!t.crossmap_.emplace(src, dst).second)
      fail(sources.crossmap, r.line, "duplicate key '" + src + "'");
    t.reverse_[dst].push_back(src);
    cross_line[dst] = r.line;
  }

  for (const auto& [script, st, src] :
       {std::tuple{"g2p_devanagari", &t.devanagari_, &sources.g2p_devanagari},
        std::tuple{"g2p_telugu", &t.telugu_, &sources.g2p_telugu_patch}}) {
    std::set<std::string> produced;
    for (const auto& [key, ids] : st->g2p) produced.insert(ids.begin(), ids.end());
    produced.insert(t.inherent_);
    for (const auto& id : produced)
      if (!t.crossmap_.count(id))
        fail(sources.crossmap, "crossmap has no entry for phoneme '" + id + "' (produced by " +
                                   script + ")");
  }

  for (const auto& [dst, line] : cross_line)
    if (!t.devanagari_.p2g.count(dst))
      fail(sources.p2g_devanagari, "no Devanagari form for intermediate phoneme '" + dst + "'");

  for (const auto& [dst, srcs] : t.reverse_)
    if (srcs.size() > 1) t.merges_.push_back({dst, srcs});

  return t;
}

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TableSet read_table_dir(const std::filesystem::path& dir) {
  auto req = [&](const char* name) { return TableSource{(dir / name).string(), slurp(dir / name)}; };
  auto opt = [&](const char* name) {
    const auto p = dir / name;
    return std::filesystem::exists(p) ? TableSource{p.string(), slurp(p)} : TableSource{p.string(), {}};
  };
  return TableSet{req("phonemes.tsv"),  req("g2p_devanagari.tsv"), opt("g2p_telugu_patch.tsv"),
                  req("crossmap.tsv"),  req("p2g_devanagari.tsv"), opt("p2g_telugu_patch.tsv")};
}

MappingTables load_tables(const std::filesystem::path& dir) { return load_tables(read_table_dir(dir)); }

TableSet embedded_table_set() {
  using namespace detail::embedded;
  return TableSet{{"phonemes.tsv", std::string(phonemes)},
                  {"g2p_devanagari.tsv", std::string(g2p_devanagari)},
                  {"g2p_telugu_patch.tsv", std::string(g2p_telugu_patch)},
                  {"crossmap.tsv", std::string(crossmap)},
                  {"p2g_devanagari.tsv", std::string(p2g_devanagari)},
                  {"p2g_telugu_patch.tsv", std::string(p2g_telugu_patch)}};
}

const MappingTables& default_tables() {
  static const MappingTables tables = load_tables(embedded_table_set());
  return tables;
}

PhonemeSeq g2p(std::u32string_view word, ScriptTag script, const MappingTables& tables) {
  const ScriptTables& st = tables.script(script);
  PhonemeSeq out;
  auto emit = [&](std::u32string_view key, std::size_t pos) {
    const auto it = st.g2p.find(std::u32string(key));
    if (it == st.g2p.end()) throw UnmappedGrapheme(key.front(), pos);
    out.insert(out.end(), it->second.begin(), it->second.end());
  };
  auto emit_marks = [&](std::u32string_view marks, std::size_t pos) {
    for (std::size_t k = 0; k < marks.size(); ++k) {
      if (classify(marks[k]).cls != CharClass::Virama) emit(marks.substr(k, 1), pos + k);
    }
  };

  for (const Akshara& a : segment_aksharas(word)) {
    std::size_t pos = a.begin;
    switch (a.kind) {
      case AksharaKind::Cluster:
        for (std::size_t i = 0; i < a.consonants.size(); ++i) {
          emit(a.consonants[i], pos);
          pos += a.consonants[i].size();
          emit_marks(a.joiners[i], pos);
          pos += a.joiners[i].size();
        }
        if (a.vowel_sign) {
          emit(std::u32string_view(&a.vowel_sign, 1), pos);
          ++pos;
        } else if (!a.has_trailing_virama()) {
          out.push_back(tables.inherent_vowel());
        }
        emit_marks(a.modifiers, pos);
        break;
      case AksharaKind::Vowel:
      case AksharaKind::Orphan:
        if (classify(a.unit).cls == CharClass::Virama || classify(a.unit).cls == CharClass::Nukta)
          throw UnmappedGrapheme(a.unit, pos);
        emit(std::u32string_view(&a.unit, 1), pos);
        emit_marks(a.modifiers, pos + 1);
        break;
      default:
        throw UnmappedGrapheme(a.unit, pos);
    }
  }
  return out;
}

PhonemeSeq cross_map(const PhonemeSeq& seq, const MappingTables& tables, MergeCounts* merges) {
  PhonemeSeq out;
  out.reserve(seq.size());
  const auto& cm = tables.crossmap();
  for (const auto& id : seq) {
    const auto it = cm.find(id);
    if (it == cm.end()) throw UnknownPhoneme(id);
    if (merges && it->second != id) ++(*merges)[{id, it->second}];
    out.push_back(it->second);
  }
  return out;
}

std::u32string p2g(const PhonemeSeq& seq, const MappingTables& tables, ScriptTag script) {
  const ScriptTables& st = tables.script(script);
  const char32_t virama = virama_of(script);
  std::vector<const Phoneme*> ph(seq.size());
  std::vector<const GraphemeForms*> forms(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ph[i] = tables.phoneme(seq[i]);
    const auto it = st.p2g.find(seq[i]);
    if (!ph[i] || it == st.p2g.end()) throw UnknownPhoneme(seq[i]);
    forms[i] = &it->second;
  }

  std::u32string out;
  bool after_consonant = false;  // previous non-joiner phoneme was a consonant
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Phoneme& p = *ph[i];
    if (p.join_control) {
      out += forms[i]->independent;
      continue;
    }
    switch (p.kind) {
      case PhonemeKind::Consonant: {
        out += forms[i]->independent;
        std::size_t j = i + 1;
        while (j < seq.size() && ph[j]->join_control) ++j;
        if (j == seq.size() || ph[j]->kind != PhonemeKind::Vowel) out.push_back(virama);
        after_consonant = true;
        break;
      }
      case PhonemeKind::Vowel:
        if (!after_consonant) out += forms[i]->independent;
        else if (p.id != tables.inherent_vowel()) out += forms[i]->dependent;
        after_consonant = false;
        break;
      case PhonemeKind::Modifier:
        out += forms[i]->independent;
        after_consonant = false;
        break;
    }
  }
  return out;
}

std::string join_phonemes(const PhonemeSeq& seq) {
  std::string out;
  for (const auto& id : seq) {
    if (!out.empty()) out.push_back(' ');
    out += id;
  }
  return out;
}

PhonemeSeq split_phonemes(std::string_view text) { return detail::split_ws(text); }

}  // namespace lipi
