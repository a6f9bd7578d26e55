#include <doctest.h>

#include <stdexcept>

#include "lipi/metrics.hpp"
#include "lipi/unicode.hpp"
#include "support.hpp"

using namespace lipi;

namespace {

std::vector<char32_t> cps(std::u32string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("align examples") {
  using V = std::vector<std::string>;
  CHECK(align(V{"a", "b", "c"}, V{"a", "b", "c"}) == Alignment{3, 0, 0, 0, 3});
  CHECK(align(V{"a", "b", "c"}, V{"a", "x", "c"}) == Alignment{2, 1, 0, 0, 3});
  CHECK(align(V{"a", "b"}, V{}) == Alignment{0, 0, 2, 0, 2});
  CHECK(align(V{}, V{"a"}) == Alignment{0, 0, 0, 1, 0});
  // equal cost: substitution wins over an insertion/deletion pair
  CHECK(align(V{"a"}, V{"b"}) == Alignment{0, 1, 0, 0, 1});
}

TEST_CASE("align agrees with exhaustive search") {
  testing::Rng rng(3);
  for (int n = 0; n < 3000; ++n) {
    std::vector<int> a(testing::pick(rng, 9)), b(testing::pick(rng, 9));
    for (auto& x : a) x = static_cast<int>(testing::pick(rng, 4));
    for (auto& x : b) x = static_cast<int>(testing::pick(rng, 4));
    const Alignment al = align(a, b);
    const Alignment back = align(b, a);
    REQUIRE(al.cost() == testing::brute_force_edit_cost(a, b));
    REQUIRE(al.hits + al.substitutions + al.deletions == a.size());
    REQUIRE(al.hits + al.substitutions + al.insertions == b.size());
    REQUIRE(back.cost() == al.cost());
  }
}

TEST_CASE("wer and cer") {
  CHECK(wer("a b c", "a b c") == 0.0);
  CHECK(wer("a b c", "a x c") == doctest::Approx(1.0 / 3.0));
  CHECK(wer("a b", "") == 1.0);
  CHECK(wer("", "") == 0.0);
  CHECK(wer("", "a b") == 2.0);
  CHECK(wer("  a   b ", "a b") == 0.0);

  CHECK(cer("कल", "कल") == 0.0);
  const double expected = static_cast<double>(testing::brute_force_edit_cost(cps(U"कल"), cps(U"कि"))) / 2.0;
  CHECK(cer("कल", "कि") == doctest::Approx(expected));
  CHECK(cer("क", "") == 1.0);
  CHECK(cer_units("  a \t b  ") == U"a b");
  // the space between words counts
  CHECK(cer("a b", "ab") == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("relative reduction") {
  CHECK(relative_reduction(39.8, 31.6) == doctest::Approx((39.8 - 31.6) / 39.8));
  CHECK(relative_reduction(0.5, 0.5) == 0.0);
  CHECK_THROWS_AS(relative_reduction(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(relative_reduction(-1.0, 0.1), std::invalid_argument);
}

TEST_CASE("corpus score is a ratio of sums") {
  const std::vector<Utterance> refs = {{"u1", "a b c d"}, {"u2", "e"}, {"u3", "f g"}};
  const std::vector<Utterance> hyps = {{"u2", "x"}, {"u1", "a b c d"}, {"u9", "z"}};
  const EvalReport r = score(refs, hyps);
  REQUIRE(r.utterances.size() == 3);
  CHECK(r.utterances[0].id == "u1");
  CHECK(r.words.ref_len == 7);
  CHECK(r.words.cost() == 3);
  CHECK(r.wer == doctest::Approx(3.0 / 7.0));
  CHECK(r.utterances[2].missing_hyp);
  CHECK(r.missing_hyp == std::vector<std::string>{"u3"});
  CHECK(r.extra_hyp == std::vector<std::string>{"u9"});

  std::vector<Utterance> shuffled = {refs[2], refs[0], refs[1]};
  CHECK(score(shuffled, hyps).wer == doctest::Approx(r.wer));
  CHECK(score(refs, refs).wer == 0.0);
  CHECK(score(refs, refs).cer == 0.0);
}

TEST_CASE("grapheme inventory") {
  const std::vector<std::u32string> lines = {U"कल कल"};
  const InventoryReport inv = grapheme_inventory(lines);
  CHECK(inv.distinct() == 2);
  CHECK(inv.counts.at(U'क') == 2);
  CHECK(inv.counts.at(U'ल') == 2);
  CHECK(inv.consonants == 2);
  CHECK(grapheme_inventory(std::vector<std::u32string>{U""}).distinct() == 0);

  const std::vector<std::u32string> mixed = {U"किताब, 12 hello इ"};
  const InventoryReport m = grapheme_inventory(mixed);
  CHECK(m.matras + m.consonants + m.vowels + m.other == m.distinct());
  CHECK(m.matras == 2);
  CHECK(m.vowels == 1);

  const ReductionSummary s = compare_inventories(m, inv);
  CHECK(s.before == m.distinct());
  CHECK(s.after == 2);
  CHECK(s.delta == 2 - static_cast<long>(m.distinct()));
  CHECK(s.matras_after == 0);
}
