#include <doctest.h>

#include <filesystem>
#include <optional>
#include <set>

#include "lipi/error.hpp"
#include "lipi/translit.hpp"
#include "lipi/unicode.hpp"
#include "support.hpp"

using namespace lipi;

namespace {

const MappingTables& T() { return default_tables(); }

const Lexicon& test_lexicon() {
  static const Lexicon lex =
      load_lexicon(std::filesystem::path(LIPI_TEST_DATA) / "test_lexicon.tsv", default_tables());
  return lex;
}

std::u32string s1(std::u32string_view w, ScriptTag s, const Lexicon& lex = Lexicon{}) {
  return stage1_word(w, s, T(), lex).text;
}

bool has_matra(std::u32string_view s) {
  for (char32_t c : s)
    if (classify(c).cls == CharClass::DependentVowelSign) return true;
  return false;
}

// Every split of `word` on akshara boundaries into lexicon parts of at least
// two aksharas; keeps the fewest parts, then the longest leading parts.
std::optional<std::vector<std::u32string>> oracle_split(std::u32string_view word, const Lexicon& lex) {
  const auto ak = segment_aksharas(word);
  const std::size_t n = ak.size();
  if (n == 0) return std::nullopt;
  std::optional<std::vector<std::size_t>> best_lengths;
  std::vector<std::u32string> best;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::size_t> lengths;
    std::vector<std::u32string> parts;
    std::size_t start = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i + 1 < n && !(mask >> i & 1u)) continue;
      const std::size_t len = i + 1 - start;
      const std::u32string part(word.substr(ak[start].begin, ak[i].end - ak[start].begin));
      ok = len >= kMinCompoundPart && lex.contains(part);
      lengths.push_back(len);
      parts.push_back(part);
      start = i + 1;
    }
    if (!ok) continue;
    const bool better = !best_lengths || lengths.size() < best_lengths->size() ||
                        (lengths.size() == best_lengths->size() && lengths > *best_lengths);
    if (better) {
      best_lengths = lengths;
      best = parts;
    }
  }
  if (!best_lengths) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("stage1 examples") {
  CHECK(s1(U"కల", ScriptTag::Telugu) == U"कल");
  CHECK(s1(U"కి", ScriptTag::Telugu) == U"कि");
  CHECK(s1(U"क", ScriptTag::Devanagari) == U"क");
  CHECK(s1(U"తెలుగు", ScriptTag::Telugu) == U"तेलुगु");

  const Stage1Word hello = stage1_word(U"hello", ScriptTag::Devanagari, T(), Lexicon{});
  CHECK(hello.text == U"hello");
  CHECK(hello.status == WordStatus::Passthrough);

  const Stage1Word known = stage1_word(U"Hello", ScriptTag::Devanagari, T(), test_lexicon());
  CHECK(known.text == U"हेलो");
  CHECK(known.from_lexicon);

  CHECK(s1(U"(కల),", ScriptTag::Telugu) == U"(कल),");
  CHECK(s1(U"123", ScriptTag::Telugu) == U"123");
  CHECK(s1(U"౧౨", ScriptTag::Telugu) == U"౧౨");
}

TEST_CASE("stage1 unmapped handling") {
  const Stage1Word w = stage1_word(U"कab", ScriptTag::Devanagari, T(), Lexicon{});
  CHECK(w.status == WordStatus::Unmapped);
  CHECK(w.text == U"कab");
  CHECK_THROWS_AS(stage1_word(U"कab", ScriptTag::Devanagari, T(), Lexicon{}, true), UnmappedGrapheme);
  const Stage1Word orphan = stage1_word(U"्क", ScriptTag::Devanagari, T(), Lexicon{});
  CHECK(orphan.status == WordStatus::Unmapped);
  CHECK_THROWS_AS(stage1_word(U"中文", ScriptTag::Devanagari, T(), Lexicon{}, true), UnmappedGrapheme);
}

TEST_CASE("stage1 output stays in Devanagari and Common") {
  testing::Rng rng(5);
  const auto pools = testing::pools_for(T(), ScriptTag::Telugu, false);
  for (int n = 0; n < 500; ++n) {
    const std::u32string w = p2g(testing::random_word(rng, pools, "a"), T(), ScriptTag::Telugu);
    const Stage1Word out = stage1_word(w, ScriptTag::Telugu, T(), Lexicon{});
    REQUIRE(out.status == WordStatus::Converted);
    for (char32_t c : out.text) {
      const ScriptTag s = classify(c).script;
      REQUIRE((s == ScriptTag::Devanagari || s == ScriptTag::Common));
    }
  }
}

TEST_CASE("stage2 examples") {
  CHECK(stage2(U"कि").text == U"क्इ");
  CHECK(stage2(U"कल").text == U"कल");
  CHECK(stage2(U"गिरि").text == U"ग्इर्इ");
  CHECK(stage2(U"गिरि").rewritten == 2);
  const Stage2Result orphan = stage2(U"ि");
  CHECK(orphan.text == U"इ");
  CHECK(orphan.orphans == 1);
  CHECK(stage2(U"क्इ").collisions == 1);
  CHECK(stage2(U"hello కి").text == U"hello కి");
}

TEST_CASE("stage2 over every matra and consonant") {
  for (char32_t sign = 0x0900; sign <= 0x097F; ++sign) {
    if (classify(sign).cls != CharClass::DependentVowelSign) continue;
    const auto letter = matra::to_independent(sign);
    REQUIRE(letter.has_value());
    for (char32_t c = 0x0915; c <= 0x0939; ++c) {
      const std::u32string in{c, sign};
      const Stage2Result r = stage2(in);
      CHECK(r.text == std::u32string{c, kDevanagariVirama, *letter});
      CHECK_FALSE(has_matra(r.text));
      CHECK(stage2(r.text).text == r.text);
      CHECK(inverse_stage2(r.text).text == in);
      // the phonemic reading does not change
      if (T().script(ScriptTag::Devanagari).g2p.contains(std::u32string(1, sign)))
        CHECK(g2p(r.text, ScriptTag::Devanagari, T()) == g2p(in, ScriptTag::Devanagari, T()));
    }
  }
}

TEST_CASE("matra map is a bijection between the two classes") {
  std::set<char32_t> signs, letters;
  for (const auto& [s, l] : matra::pairs()) {
    CHECK(classify(s).cls == CharClass::DependentVowelSign);
    CHECK(classify(l).cls == CharClass::IndependentVowel);
    CHECK(matra::to_dependent(l) == s);
    signs.insert(s);
    letters.insert(l);
  }
  CHECK(signs.size() == matra::pairs().size());
  CHECK(letters.size() == matra::pairs().size());
  CHECK(signs.size() >= 10);
}

TEST_CASE("inverse_stage2") {
  CHECK(inverse_stage2(U"क्इ").text == U"कि");
  CHECK(inverse_stage2(U"कल").text == U"कल");
  CHECK(inverse_stage2(U"क्ष").text == U"क्ष");
  CHECK(inverse_stage2(U"कि").flagged == 1);
  for (std::u32string t : {U"गिरि नेपाल", U"किताब, हिमाल", U"क़ि", U"क्‍षि", U"ि"}) {
    if (stage2(t).collisions || stage2(t).orphans) continue;
    CHECK(inverse_stage2(stage2(t).text).text == t);
  }
}

TEST_CASE("full_transliterate") {
  CHECK(full_transliterate(U"కి", ScriptTag::Telugu, T(), Lexicon{}).text == U"क्इ");
  CHECK(full_transliterate(U"", ScriptTag::Telugu, T(), Lexicon{}).text.empty());
  const FullResult mixed = full_transliterate(U"కల   hello", ScriptTag::Telugu, T(), Lexicon{});
  CHECK(mixed.text == U"कल hello");
  CHECK(mixed.report.passthrough.size() == 1);
  CHECK(mixed.report.words_total == 2);
  CHECK(mixed.report.words_converted + mixed.report.passthrough.size() + mixed.report.unmapped.size() ==
        mixed.report.words_total);
  CHECK(mixed.report.inventory_after.matras == 0);
}

TEST_CASE("inverse_stage1") {
  CHECK(inverse_stage1(U"कल", ScriptTag::Telugu, T(), Lexicon{}).text == U"కల");
  const InverseResult merged = inverse_stage1(U"तेलुगु", ScriptTag::Telugu, T(), Lexicon{});
  CHECK(merged.ambiguous);
  CHECK(merged.text == U"తేలుగు");
  const InverseResult known = inverse_stage1(U"तेलुगु", ScriptTag::Telugu, T(), test_lexicon());
  CHECK(known.text == U"తెలుగు");
  CHECK(known.from_lexicon);
  CHECK_FALSE(known.ambiguous);
  CHECK_THROWS_AS(inverse_stage1(U"hello", ScriptTag::Telugu, T(), Lexicon{}), NoPreimage);
}

TEST_CASE("round trip through both stages for lexicon words") {
  const ReverseLexicon rev(test_lexicon(), T());
  for (const auto& e : test_lexicon().entries()) {
    if (e.script != ScriptTag::Devanagari && e.script != ScriptTag::Telugu) continue;
    bool merged = false;
    for (const auto& p : e.pronunciations[0].phonemes)
      merged = merged || T().is_merged(T().crossmap().at(p));
    const FullResult f = full_transliterate(e.headword, e.script, T(), test_lexicon());
    const FullResult back = invert_line(f.text, e.script, T(), rev);
    CAPTURE(to_utf8(e.headword));
    CHECK(back.text == e.headword);
    if (!merged) CHECK(back.report.ambiguous.empty());
    // without the lexicon a merged word must come back flagged
    const FullResult blind = invert_line(f.text, e.script, T(), ReverseLexicon{});
    if (merged) CHECK(blind.report.ambiguous.size() == 1);
    else CHECK(blind.text == e.headword);
  }
}

TEST_CASE("split_compounds") {
  const Lexicon& lex = test_lexicon();
  CHECK(split_compounds(U"हिमाल", lex).parts == std::vector<std::u32string>{U"हिमाल"});
  const SplitResult two = split_compounds(U"हिमालचुली", lex);
  CHECK(two.parts == std::vector<std::u32string>{U"हिमाल", U"चुली"});
  CHECK_FALSE(two.oov);
  const SplitResult none = split_compounds(U"क्षत्रिय", lex);
  CHECK(none.parts == std::vector<std::u32string>{U"क्षत्रिय"});
  CHECK(none.oov);
  CHECK(stage1_word(U"हिमालचुली", ScriptTag::Devanagari, T(), lex).text == U"हिमाल चुली");
  CHECK(stage1_word(U"హిమాలచులీ", ScriptTag::Telugu, T(), lex).parts == 1);
}

TEST_CASE("split_compounds matches exhaustive search") {
  testing::Rng rng(9);
  const auto pools = testing::pools_for(T(), ScriptTag::Devanagari, false);
  // short words so that concatenations collide with other splits
  Lexicon lex;
  std::vector<std::u32string> words;
  for (int i = 0; i < 25; ++i) {
    PhonemeSeq p = testing::random_word(rng, pools, "a", 2);
    const std::u32string w = p2g(p, T());
    lex.add(w, p, SourceTag::Native);
    words.push_back(w);
  }
  for (int n = 0; n < 3000; ++n) {
    std::u32string w;
    const std::size_t k = 1 + testing::pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) w += testing::pick(rng, words);
    if (testing::coin(rng, 0.1)) w += U"ट";
    const SplitResult got = split_compounds(w, lex);
    CAPTURE(to_utf8(w));
    if (lex.contains(w)) {
      CHECK(got.parts == std::vector<std::u32string>{w});
      CHECK_FALSE(got.oov);
      continue;
    }
    const auto expect = oracle_split(w, lex);
    if (!expect) {
      CHECK(got.oov);
      CHECK(got.parts == std::vector<std::u32string>{w});
    } else {
      CHECK_FALSE(got.oov);
      CHECK(got.parts == *expect);
    }
  }
}

TEST_CASE("stage2 is idempotent and shrinks the inventory") {
  testing::Rng rng(21);
  const auto te = testing::pools_for(T(), ScriptTag::Telugu, false);
  const auto ne = testing::pools_for(T(), ScriptTag::Devanagari, false);
  InventoryReport before, after;
  for (int line = 0; line < 200; ++line) {
    std::u32string text;
    const bool telugu = line % 2 == 0;
    for (int w = 0; w < 6; ++w) {
      if (w) text += U' ';
      text += telugu ? p2g(testing::random_word(rng, te, "a"), T(), ScriptTag::Telugu)
                     : p2g(testing::random_word(rng, ne, "a"), T());
    }
    const FullResult s1 = stage1_line(text, telugu ? ScriptTag::Telugu : ScriptTag::Devanagari, T(), Lexicon{});
    const Stage2Result s2 = stage2(s1.text);
    REQUIRE_FALSE(has_matra(s2.text));
    REQUIRE(stage2(s2.text).text == s2.text);
    before.add(s1.text);
    after.add(s2.text);
  }
  CHECK(after.matras == 0);
  CHECK(after.distinct() <= before.distinct() + 1);
}
