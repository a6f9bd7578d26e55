#include "lipi/script.hpp"

#include <array>

namespace lipi {
namespace {

struct TableRow {
  char32_t cp;
  ScriptTag script;
  CharClass cls;
};

constexpr TableRow kRows[] = {
#include "script_table.inc"
};

struct BlockTable {
  std::array<CharClass, 0x80> dev{};
  std::array<CharClass, 0x80> tel{};
  constexpr BlockTable() {
    dev.fill(CharClass::Unknown);
    tel.fill(CharClass::Unknown);
    for (const auto& r : kRows) {
      if (r.script == ScriptTag::Devanagari) dev[r.cp - 0x0900] = r.cls;
      else tel[r.cp - 0x0C00] = r.cls;
    }
  }
};

constexpr BlockTable kBlocks{};

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_latin_letter(char32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return cp >= 0x1E00 && cp <= 0x1EFF;
}

bool is_common_punct(char32_t cp) {
  if (cp >= 0x21 && cp <= 0x7E) return true;  // letters and digits are tested first
  if (cp >= 0xA1 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
}

bool is_letter_class(CharClass c) {
  return c == CharClass::Consonant || c == CharClass::IndependentVowel ||
         c == CharClass::DependentVowelSign;
}

}  // namespace

CharInfo classify(char32_t cp) {
  if (cp >= 0x0900 && cp <= 0x097F) {
    const CharClass c = kBlocks.dev[cp - 0x0900];
    return {c == CharClass::Unknown ? ScriptTag::Other : ScriptTag::Devanagari, c};
  }
  if (cp >= 0x0C00 && cp <= 0x0C7F) {
    const CharClass c = kBlocks.tel[cp - 0x0C00];
    return {c == CharClass::Unknown ? ScriptTag::Other : ScriptTag::Telugu, c};
  }
  if (cp == kZwj || cp == kZwnj) return {ScriptTag::Common, CharClass::JoinControl};
  if (is_space(cp)) return {ScriptTag::Common, CharClass::Whitespace};
  if (cp >= '0' && cp <= '9') return {ScriptTag::Common, CharClass::Digit};
  if (is_latin_letter(cp)) return {ScriptTag::Latin, CharClass::Unknown};
  if (is_common_punct(cp)) return {ScriptTag::Common, CharClass::Punctuation};
  return {ScriptTag::Other, CharClass::Unknown};
}

std::string_view to_string(ScriptTag s) {
  switch (s) {
    case ScriptTag::Devanagari: return "Devanagari";
    case ScriptTag::Telugu: return "Telugu";
    case ScriptTag::Latin: return "Latin";
    case ScriptTag::Common: return "Common";
    case ScriptTag::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(CharClass c) {
  switch (c) {
    case CharClass::Consonant: return "Consonant";
    case CharClass::IndependentVowel: return "IndependentVowel";
    case CharClass::DependentVowelSign: return "DependentVowelSign";
    case CharClass::Virama: return "Virama";
    case CharClass::Nukta: return "Nukta";
    case CharClass::Modifier: return "Modifier";
    case CharClass::Digit: return "Digit";
    case CharClass::Whitespace: return "Whitespace";
    case CharClass::Punctuation: return "Punctuation";
    case CharClass::JoinControl: return "JoinControl";
    case CharClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<ScriptTag> parse_script_tag(std::string_view name) {
  for (auto s : {ScriptTag::Devanagari, ScriptTag::Telugu, ScriptTag::Latin, ScriptTag::Common,
                 ScriptTag::Other})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::optional<CharClass> parse_char_class(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(CharClass::Unknown); ++i) {
    const auto c = static_cast<CharClass>(i);
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

char32_t virama_of(ScriptTag s) {
  switch (s) {
    case ScriptTag::Devanagari: return kDevanagariVirama;
    case ScriptTag::Telugu: return kTeluguVirama;
    default: return 0;
  }
}

bool Akshara::has_trailing_virama() const {
  if (kind != AksharaKind::Cluster || joiners.empty()) return false;
  for (char32_t cp : joiners.back())
    if (classify(cp).cls == CharClass::Virama) return true;
  return false;
}

std::vector<Akshara> segment_aksharas(std::u32string_view text) {
  std::vector<Akshara> out;
  Akshara* cur = nullptr;

  auto start = [&](AksharaKind kind, std::size_t pos) -> Akshara& {
    out.push_back(Akshara{});
    cur = &out.back();
    cur->kind = kind;
    cur->begin = pos;
    cur->end = pos + 1;
    return *cur;
  };
  auto degenerate = [&](AksharaKind kind, char32_t cp, std::size_t pos) {
    start(kind, pos).unit = cp;
  };
  // A cluster still accepting signs on its last consonant.
  auto open_cluster = [&]() {
    return cur && cur->kind == AksharaKind::Cluster && cur->vowel_sign == 0 &&
           cur->modifiers.empty();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t cp = text[i];
    const CharClass cls = classify(cp).cls;
    switch (cls) {
      case CharClass::Consonant: {
        bool fuse = false;
        if (open_cluster()) {
          const auto& j = cur->joiners.back();
          bool virama = false, zwnj = false;
          for (char32_t c : j) {
            if (classify(c).cls == CharClass::Virama) virama = true;
            if (c == kZwnj) zwnj = true;
          }
          fuse = virama && !zwnj;
        }
        if (fuse) {
          cur->consonants.emplace_back(1, cp);
          cur->joiners.emplace_back();
          cur->end = i + 1;
        } else {
          auto& a = start(AksharaKind::Cluster, i);
          a.consonants.emplace_back(1, cp);
          a.joiners.emplace_back();
        }
        break;
      }
      case CharClass::Nukta: {
        if (open_cluster() && cur->joiners.back().empty() && cur->consonants.back().size() == 1) {
          cur->consonants.back().push_back(cp);
          cur->end = i + 1;
        } else {
          degenerate(AksharaKind::Orphan, cp, i);
        }
        break;
      }
      case CharClass::Virama: {
        if (open_cluster() && !cur->has_trailing_virama()) {
          cur->joiners.back().push_back(cp);
          cur->end = i + 1;
        } else {
          degenerate(AksharaKind::Orphan, cp, i);
        }
        break;
      }
      case CharClass::DependentVowelSign: {
        if (open_cluster() && !cur->has_trailing_virama()) {
          cur->vowel_sign = cp;
          cur->end = i + 1;
        } else {
          degenerate(AksharaKind::Orphan, cp, i);
        }
        break;
      }
      case CharClass::JoinControl: {
        if (!cur) {
          degenerate(AksharaKind::Orphan, cp, i);
        } else {
          if (open_cluster()) cur->joiners.back().push_back(cp);
          else cur->modifiers.push_back(cp);
          cur->end = i + 1;
        }
        break;
      }
      case CharClass::Modifier: {
        if (cur && (cur->kind == AksharaKind::Cluster || cur->kind == AksharaKind::Vowel ||
                    cur->kind == AksharaKind::Orphan)) {
          cur->modifiers.push_back(cp);
          cur->end = i + 1;
        } else {
          degenerate(AksharaKind::Orphan, cp, i);
        }
        break;
      }
      case CharClass::IndependentVowel: degenerate(AksharaKind::Vowel, cp, i); break;
      case CharClass::Digit: degenerate(AksharaKind::Digit, cp, i); break;
      case CharClass::Whitespace: degenerate(AksharaKind::Whitespace, cp, i); break;
      case CharClass::Punctuation: degenerate(AksharaKind::Punctuation, cp, i); break;
      case CharClass::Unknown: degenerate(AksharaKind::Unknown, cp, i); break;
    }
  }
  return out;
}

std::map<ScriptTag, std::size_t> detect_script(std::u32string_view text) {
  std::map<ScriptTag, std::size_t> hist;
  for (char32_t cp : text) ++hist[classify(cp).script];
  return hist;
}

ScriptTag dominant_script(std::u32string_view text) {
  std::size_t dev = 0, tel = 0, latin = 0, common = 0, other = 0;
  for (char32_t cp : text) {
    const auto info = classify(cp);
    switch (info.script) {
      case ScriptTag::Devanagari: dev += is_letter_class(info.cls); break;
      case ScriptTag::Telugu: tel += is_letter_class(info.cls); break;
      case ScriptTag::Latin: ++latin; break;
      case ScriptTag::Common: ++common; break;
      case ScriptTag::Other: ++other; break;
    }
  }
  if (dev || tel) return tel > dev ? ScriptTag::Telugu : ScriptTag::Devanagari;
  if (latin) return ScriptTag::Latin;
  if (other) return ScriptTag::Other;
  return ScriptTag::Common;
}

std::vector<std::u32string> split_tokens(std::u32string_view text) {
  std::vector<std::u32string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && classify(text[i]).cls == CharClass::Whitespace) ++i;
    std::size_t j = i;
    while (j < text.size() && classify(text[j]).cls != CharClass::Whitespace) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

TokenParts split_affixes(std::u32string_view token) {
  auto edge = [](char32_t cp) {
    const auto c = classify(cp).cls;
    return c == CharClass::Punctuation || c == CharClass::Digit;
  };
  std::size_t b = 0, e = token.size();
  while (b < e && edge(token[b])) ++b;
  while (e > b && edge(token[e - 1])) --e;
  return {std::u32string(token.substr(0, b)), std::u32string(token.substr(b, e - b)),
          std::u32string(token.substr(e))};
}

}  // namespace lipi
