#include "lipi/metrics.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lipi/unicode.hpp"

namespace lipi {

double error_rate(const Alignment& a) {
  if (a.ref_len == 0) return static_cast<double>(a.insertions);
  return static_cast<double>(a.cost()) / static_cast<double>(a.ref_len);
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : split_tokens(to_u32(text))) out.push_back(to_utf8(t));
  return out;
}

std::u32string cer_units(std::string_view text) {
  std::u32string out;
  for (const auto& t : split_tokens(to_u32(text))) {
    if (!out.empty()) out.push_back(U' ');
    out += t;
  }
  return out;
}

Alignment align_words(std::string_view ref, std::string_view hyp) {
  return align(word_tokens(ref), word_tokens(hyp));
}

Alignment align_chars(std::string_view ref, std::string_view hyp) {
  const std::u32string r = cer_units(ref), h = cer_units(hyp);
  return align(std::span<const char32_t>(r), std::span<const char32_t>(h));
}

double wer(std::string_view ref, std::string_view hyp) { return error_rate(align_words(ref, hyp)); }
double cer(std::string_view ref, std::string_view hyp) { return error_rate(align_chars(ref, hyp)); }

double relative_reduction(double base, double improved) {
  if (!(base > 0.0)) throw std::invalid_argument("relative_reduction: base must be > 0");
  return (base - improved) / base;
}

EvalReport score(std::span<const Utterance> refs, std::span<const Utterance> hyps) {
  std::unordered_map<std::string, const Utterance*> by_id;
  for (const auto& h : hyps) by_id.emplace(h.id, &h);

  EvalReport report;
  std::unordered_set<std::string> ref_ids;
  for (const auto& r : refs) {
    ref_ids.insert(r.id);
    UtteranceScore s;
    s.id = r.id;
    const auto it = by_id.find(r.id);
    const std::string_view hyp = it == by_id.end() ? std::string_view{} : it->second->text;
    if (it == by_id.end()) {
      s.missing_hyp = true;
      report.missing_hyp.push_back(r.id);
    }
    s.words = align_words(r.text, hyp);
    s.chars = align_chars(r.text, hyp);
    s.wer = error_rate(s.words);
    s.cer = error_rate(s.chars);
    report.words += s.words;
    report.chars += s.chars;
    report.utterances.push_back(std::move(s));
  }
  for (const auto& h : hyps)
    if (!ref_ids.count(h.id)) report.extra_hyp.push_back(h.id);
  report.wer = error_rate(report.words);
  report.cer = error_rate(report.chars);
  return report;
}

void InventoryReport::add(std::u32string_view text) {
  for (char32_t cp : text) {
    const CharClass c = classify(cp).cls;
    if (c == CharClass::Whitespace) continue;
    if (counts[cp]++ != 0) continue;
    switch (c) {
      case CharClass::DependentVowelSign: ++matras; break;
      case CharClass::Consonant: ++consonants; break;
      case CharClass::IndependentVowel: ++vowels; break;
      default: ++other; break;
    }
  }
}

InventoryReport& InventoryReport::operator+=(const InventoryReport& o) {
  for (const auto& [cp, n] : o.counts) {
    if (counts[cp] == 0) {
      switch (classify(cp).cls) {
        case CharClass::DependentVowelSign: ++matras; break;
        case CharClass::Consonant: ++consonants; break;
        case CharClass::IndependentVowel: ++vowels; break;
        default: ++other; break;
      }
    }
    counts[cp] += n;
  }
  return *this;
}

InventoryReport grapheme_inventory(std::span<const std::u32string> lines) {
  InventoryReport r;
  for (const auto& l : lines) r.add(l);
  return r;
}

ReductionSummary compare_inventories(const InventoryReport& before, const InventoryReport& after) {
  ReductionSummary s;
  s.before = before.distinct();
  s.after = after.distinct();
  s.delta = static_cast<long>(s.after) - static_cast<long>(s.before);
  s.relative = s.before == 0 ? 0.0
                             : (static_cast<double>(s.before) - static_cast<double>(s.after)) /
                                   static_cast<double>(s.before);
  s.matras_before = before.matras;
  s.matras_after = after.matras;
  return s;
}

}  // namespace lipi
