#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lipi/script.hpp"

namespace lipi {

struct Alignment {
  std::size_t hits = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_len = 0;

  std::size_t cost() const { return substitutions + deletions + insertions; }
  Alignment& operator+=(const Alignment& o) {
    hits += o.hits;
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    ref_len += o.ref_len;
    return *this;
  }
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Unit-cost Levenshtein alignment. On equal cost the backtrace prefers
/// substitution (or hit), then insertion, then deletion.
template <typename T>
Alignment align(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1), at(i, j - 1) + 1,
                           at(i - 1, j) + 1});

  Alignment a;
  a.ref_len = n;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        ++(same ? a.hits : a.substitutions);
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      ++a.insertions;
      --j;
    } else {
      ++a.deletions;
      --i;
    }
  }
  return a;
}

template <typename T>
Alignment align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return align(std::span<const T>(ref), std::span<const T>(hyp));
}

/// Error rate of an alignment. An empty reference yields the insertion count.
double error_rate(const Alignment& a);

std::vector<std::string> word_tokens(std::string_view text);
/// Code points with whitespace runs collapsed to one space and ends trimmed.
std::u32string cer_units(std::string_view text);

Alignment align_words(std::string_view ref, std::string_view hyp);
Alignment align_chars(std::string_view ref, std::string_view hyp);
double wer(std::string_view ref, std::string_view hyp);
double cer(std::string_view ref, std::string_view hyp);

/// (base - improved) / base. Throws std::invalid_argument unless base > 0.
double relative_reduction(double base, double improved);

struct UtteranceScore {
  std::string id;
  Alignment words;
  Alignment chars;
  double wer = 0.0;
  double cer = 0.0;
  bool missing_hyp = false;
};

struct EvalReport {
  std::vector<UtteranceScore> utterances;  // reference order
  Alignment words;  // summed
  Alignment chars;
  double wer = 0.0;  // ratio of sums
  double cer = 0.0;
  std::vector<std::string> missing_hyp;
  std::vector<std::string> extra_hyp;
};

struct Utterance {
  std::string id;
  std::string text;
};

/// Pairs hypotheses with references by id; a missing hypothesis scores as empty.
EvalReport score(std::span<const Utterance> refs, std::span<const Utterance> hyps);

struct InventoryReport {
  std::map<char32_t, std::size_t> counts;  // non-whitespace code points
  std::size_t matras = 0;      // distinct dependent vowel signs
  std::size_t consonants = 0;  // distinct consonants
  std::size_t vowels = 0;      // distinct independent vowels
  std::size_t other = 0;       // everything else

  std::size_t distinct() const { return counts.size(); }
  void add(std::u32string_view text);
  InventoryReport& operator+=(const InventoryReport& o);
};

InventoryReport grapheme_inventory(std::span<const std::u32string> lines);

struct ReductionSummary {
  std::size_t before = 0;
  std::size_t after = 0;
  long delta = 0;  // after - before
  double relative = 0.0;  // (before - after) / before, 0 when before is 0
  std::size_t matras_before = 0;
  std::size_t matras_after = 0;
};

ReductionSummary compare_inventories(const InventoryReport& before, const InventoryReport& after);

}  // namespace lipi
