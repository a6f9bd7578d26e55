#pragma once

// Generators and brute-force oracles shared by the unit tests and the
// acceptance runner. Nothing here calls into the code under test except to
// read table contents.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lipi/phonemics.hpp"

namespace lipi::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Minimum unit-cost edit distance by enumerating every monotone matching
// between positions of `a` and `b`. Matched pairs cost 0 or 1, unmatched
// positions cost 1 each. Lengths up to 12.
template <typename T>
std::size_t brute_force_edit_cost(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::size_t best = n + m;
  std::vector<std::size_t> ia, ib;
  for (std::uint32_t ma = 0; ma < (1u << n); ++ma) {
    const auto k = static_cast<std::size_t>(std::popcount(ma));
    if (k > m) continue;
    ia.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (ma >> i & 1u) ia.push_back(i);
    for (std::uint32_t mb = 0; mb < (1u << m); ++mb) {
      if (static_cast<std::size_t>(std::popcount(mb)) != k) continue;
      ib.clear();
      for (std::size_t j = 0; j < m; ++j)
        if (mb >> j & 1u) ib.push_back(j);
      std::size_t cost = (n - k) + (m - k);
      for (std::size_t t = 0; t < k; ++t) cost += a[ia[t]] == b[ib[t]] ? 0 : 1;
      best = std::min(best, cost);
    }
  }
  return best;
}

// Phoneme ids of a given kind.
inline std::vector<std::string> ids_of(const MappingTables& t, PhonemeKind kind, bool join_controls = false) {
  std::vector<std::string> out;
  for (const auto& p : t.inventory())
    if (p.kind == kind && p.join_control == join_controls) out.push_back(p.id);
  return out;
}

// Source phonemes whose intermediate image has no other preimage and which
// `script` can spell.
inline std::vector<std::string> one_to_one(const MappingTables& t, ScriptTag script, PhonemeKind kind) {
  std::vector<std::string> out;
  const auto& p2g = t.script(script).p2g;
  for (const auto& id : ids_of(t, kind)) {
    if (!p2g.contains(id)) continue;
    const auto it = t.crossmap().find(id);
    if (it == t.crossmap().end() || t.is_merged(it->second)) continue;
    out.push_back(id);
  }
  return out;
}

inline std::vector<std::string> merged_sources(const MappingTables& t, ScriptTag script) {
  std::vector<std::string> out;
  const auto& p2g = t.script(script).p2g;
  for (const auto& m : t.merges())
    for (const auto& s : m.sources)
      if (p2g.contains(s)) out.push_back(s);
  return out;
}

struct PhonemePools {
  std::vector<std::string> consonants;
  std::vector<std::string> vowels;  // without the inherent vowel
  std::vector<std::string> modifiers;
};

// A pronounceable word: syllables of (C (C)) V (M), optional final consonant.
inline PhonemeSeq random_word(Rng& rng, const PhonemePools& pools, const std::string& inherent,
                              std::size_t max_syllables = 4) {
  PhonemeSeq seq;
  const std::size_t syllables = 1 + pick(rng, max_syllables);
  for (std::size_t s = 0; s < syllables; ++s) {
    const bool onset = s > 0 || coin(rng, 0.85);
    if (onset) {
      seq.push_back(pick(rng, pools.consonants));
      if (coin(rng, 0.15)) seq.push_back(pick(rng, pools.consonants));
    }
    if (!onset || coin(rng, 0.5) || pools.vowels.empty()) seq.push_back(inherent);
    else seq.push_back(pick(rng, pools.vowels));
    if (!pools.modifiers.empty() && coin(rng, 0.1)) seq.push_back(pick(rng, pools.modifiers));
  }
  if (coin(rng, 0.15)) seq.push_back(pick(rng, pools.consonants));
  return seq;
}

inline PhonemePools pools_for(const MappingTables& t, ScriptTag script, bool one_to_one_only) {
  PhonemePools p;
  auto take = [&](PhonemeKind k) {
    if (one_to_one_only) return one_to_one(t, script, k);
    std::vector<std::string> out;
    for (const auto& id : ids_of(t, k))
      if (t.script(script).p2g.contains(id)) out.push_back(id);
    return out;
  };
  p.consonants = take(PhonemeKind::Consonant);
  p.vowels = take(PhonemeKind::Vowel);
  std::erase(p.vowels, t.inherent_vowel());
  p.modifiers = take(PhonemeKind::Modifier);
  return p;
}

// False when a join control follows a consonant's inherent vowel. Such a
// control can only be written before the vowel, so the sequence has no
// spelling of its own.
inline bool spellable(const PhonemeSeq& seq, const MappingTables& t) {
  auto kind = [&](std::size_t i) { return t.phoneme(seq[i]); };
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!kind(i)->join_control || seq[i - 1] != t.inherent_vowel()) continue;
    std::size_t j = i - 1;
    while (j > 0 && kind(j - 1)->join_control) --j;
    if (j > 0 && kind(j - 1)->kind == PhonemeKind::Consonant) return false;
  }
  return true;
}

// Any spellable sequence over `inventory`, join controls included.
inline PhonemeSeq random_sequence(Rng& rng, const std::vector<std::string>& inventory, std::size_t max_len,
                                  const MappingTables& t) {
  for (;;) {
    PhonemeSeq seq(pick(rng, max_len + 1));
    for (auto& id : seq) id = pick(rng, inventory);
    if (spellable(seq, t)) return seq;
  }
}

// Mixed-script noise for segmentation: Indic letters and signs, Latin,
// digits, spaces, punctuation and join controls.
inline std::u32string random_mixed_text(Rng& rng, std::size_t max_len) {
  static const std::vector<std::pair<char32_t, char32_t>> ranges = {
      {0x0900, 0x097F}, {0x0C00, 0x0C7F}, {U'a', U'z'}, {U'A', U'Z'}, {U'0', U'9'},
      {0x200C, 0x200D}, {U' ', U' '},     {U'.', U'.'}, {U',', U','}, {0x0964, 0x0965},
  };
  std::u32string s(pick(rng, max_len + 1), U' ');
  for (auto& c : s) {
    const auto& [lo, hi] = pick(rng, ranges);
    c = lo + static_cast<char32_t>(pick(rng, hi - lo + 1));
  }
  return s;
}

}  // namespace lipi::testing
