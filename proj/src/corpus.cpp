#include "lipi/corpus.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "lipi/error.hpp"
#include "lipi/unicode.hpp"

namespace lipi {

TranscriptLine parse_transcript_line(std::string_view line) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) return {std::nullopt, std::string(line)};
  return {std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
}

std::string format_transcript_line(const TranscriptLine& line) {
  return line.id ? *line.id + "\t" + line.text : line.text;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  const std::string data = ss.str();

  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < data.size()) {
    auto nl = data.find('\n', pos);
    if (nl == std::string::npos) nl = data.size();
    std::string line = data.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl + 1;
  }
  return lines;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed: " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place: " + path.string());
  }
}

std::vector<Utterance> read_utterances(const std::filesystem::path& path) {
  std::vector<Utterance> out;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    TranscriptLine t = parse_transcript_line(nfc(lines[i]));
    out.push_back({t.id ? *t.id : std::to_string(i + 1), std::move(t.text)});
  }
  return out;
}

Json to_json(const InventoryReport& r) {
  Json graphemes = Json::array();
  for (const auto& [cp, n] : r.counts) {
    Json g;
    g["char"] = to_utf8(std::u32string(1, cp));
    g["codepoint"] = cp_label(cp);
    g["class"] = std::string(to_string(classify(cp).cls));
    g["count"] = n;
    graphemes.push_back(std::move(g));
  }
  Json j;
  j["distinct"] = r.distinct();
  j["subtotals"] = {{"matras", r.matras}, {"consonants", r.consonants}, {"vowels", r.vowels},
                    {"other", r.other}};
  j["graphemes"] = std::move(graphemes);
  return j;
}

Json to_json(const ReductionSummary& r) {
  Json j;
  j["distinct_before"] = r.before;
  j["distinct_after"] = r.after;
  j["delta"] = r.delta;
  j["relative_reduction"] = r.relative;
  j["matras_before"] = r.matras_before;
  j["matras_after"] = r.matras_after;
  return j;
}

namespace {

Json refs_json(const std::vector<TokenRef>& refs) {
  Json a = Json::array();
  for (const auto& t : refs)
    a.push_back({{"token", to_utf8(t.token)}, {"line", t.line}, {"index", t.index}, {"reason", t.reason}});
  return a;
}

}  // namespace

Json to_json(const TranslitReport& r) {
  Json j;
  j["words_total"] = r.words_total;
  j["words_converted"] = r.words_converted;
  j["words_passthrough"] = r.passthrough.size();
  j["words_unmapped"] = r.unmapped.size();
  j["unmapped"] = refs_json(r.unmapped);
  j["passthrough"] = refs_json(r.passthrough);
  Json merges = Json::array();
  for (const auto& [k, n] : r.merges_applied)
    merges.push_back({{"source", k.first}, {"intermediate", k.second}, {"count", n}});
  j["merges_applied"] = std::move(merges);
  j["compounds_split"] = r.compounds_split;
  j["lexicon_hits"] = r.lexicon_hits;
  j["stage2"] = {{"matras_rewritten", r.matras_rewritten},
                 {"orphan_matras", r.orphan_matras},
                 {"collisions", r.collisions}};
  j["inverse"] = {{"ambiguous", refs_json(r.ambiguous)}, {"noncanonical", r.noncanonical}};
  j["inventory_before"] = to_json(r.inventory_before);
  j["inventory_after"] = to_json(r.inventory_after);
  return j;
}

Json to_json(const Alignment& a) {
  return {{"hits", a.hits},          {"substitutions", a.substitutions}, {"deletions", a.deletions},
          {"insertions", a.insertions}, {"ref_len", a.ref_len}};
}

Json to_json(const EvalReport& r) {
  Json j;
  j["wer"] = r.wer;
  j["cer"] = r.cer;
  j["words"] = to_json(r.words);
  j["chars"] = to_json(r.chars);
  j["missing_hyp"] = r.missing_hyp;
  j["extra_hyp"] = r.extra_hyp;
  Json utts = Json::array();
  for (const auto& u : r.utterances)
    utts.push_back({{"id", u.id},
                    {"wer", u.wer},
                    {"cer", u.cer},
                    {"words", to_json(u.words)},
                    {"chars", to_json(u.chars)}});
  j["utterances"] = std::move(utts);
  return j;
}

}  // namespace lipi
