#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lipi {

enum class ScriptTag { Devanagari, Telugu, Latin, Common, Other };

enum class CharClass {
  Consonant,
  IndependentVowel,
  DependentVowelSign,
  Virama,
  Nukta,
  Modifier,
  Digit,
  Whitespace,
  Punctuation,
  JoinControl,
  Unknown,
};

struct CharInfo {
  ScriptTag script;
  CharClass cls;
  friend bool operator==(const CharInfo&, const CharInfo&) = default;
};

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kDevanagariVirama = 0x094D;
inline constexpr char32_t kTeluguVirama = 0x0C4D;
inline constexpr char32_t kDevanagariToTelugu = 0x0300;

/// Total over all code points; never fails.
CharInfo classify(char32_t cp);

std::string_view to_string(ScriptTag s);
std::string_view to_string(CharClass c);
std::optional<ScriptTag> parse_script_tag(std::string_view name);
std::optional<CharClass> parse_char_class(std::string_view name);

/// Virama code point of an Indic script, 0 for anything else.
char32_t virama_of(ScriptTag s);

/// Kind of unit an akshara holds. Everything but Cluster is a degenerate
/// single-slot unit stored in `unit`.
enum class AksharaKind { Cluster, Vowel, Digit, Whitespace, Punctuation, Orphan, Unknown };

/// One orthographic syllable. `joiners[i]` holds the virama / ZWJ / ZWNJ code
/// points that follow `consonants[i]`; `modifiers` holds modifier and
/// join-control code points that follow the vowel part.
struct Akshara {
  AksharaKind kind = AksharaKind::Unknown;
  std::vector<std::u32string> consonants;  // consonant [+ nukta]
  std::vector<std::u32string> joiners;
  char32_t vowel_sign = 0;  // 0 when absent
  std::u32string modifiers;
  char32_t unit = 0;
  std::size_t begin = 0;  // code-point span [begin, end) into the source
  std::size_t end = 0;

  bool has_trailing_virama() const;
  bool is_degenerate() const { return kind != AksharaKind::Cluster; }
  friend bool operator==(const Akshara&, const Akshara&) = default;
};

/// Lossless segmentation: the spans tile [0, text.size()).
std::vector<Akshara> segment_aksharas(std::u32string_view text);

/// Code-point histogram by script.
std::map<ScriptTag, std::size_t> detect_script(std::u32string_view text);

/// The Indic script (Devanagari or Telugu) holding most letters of `text`,
/// or Latin / Common / Other when no Indic letter occurs.
ScriptTag dominant_script(std::u32string_view text);

/// Whitespace-separated tokens.
std::vector<std::u32string> split_tokens(std::u32string_view text);

/// A token with its leading and trailing punctuation / digits split off.
struct TokenParts {
  std::u32string prefix;
  std::u32string core;
  std::u32string suffix;
};
TokenParts split_affixes(std::u32string_view token);

}  // namespace lipi
