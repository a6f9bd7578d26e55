#pragma once

#include <string>
#include <string_view>

namespace lipi {

/// UTF-8 -> code points. Ill-formed sequences decode to U+FFFD, one per bad byte.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

/// Canonical composition (NFC), via ICU.
std::string nfc(std::string_view utf8);

/// Full Unicode case folding, via ICU.
std::string case_fold(std::string_view utf8);

/// UCD character name, or "" if unassigned.
std::string char_name(char32_t cp);

/// "U+0915" style label.
std::string cp_label(char32_t cp);

}  // namespace lipi
