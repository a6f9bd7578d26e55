#include "lipi/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "lipi/corpus.hpp"
#include "lipi/error.hpp"
#include "lipi/lexicon.hpp"
#include "lipi/metrics.hpp"
#include "lipi/phonemics.hpp"
#include "lipi/translit.hpp"
#include "lipi/unicode.hpp"

namespace lipi::cli {
namespace {

// A failure tied to one input line, reported as exit status 3.
class LineFailure : public Error {
 public:
  using Error::Error;
};

const std::map<std::string, ScriptTag> kScriptNames = {
    {"telugu", ScriptTag::Telugu},
    {"nepali", ScriptTag::Devanagari},
    {"devanagari", ScriptTag::Devanagari},
};

MappingTables resolve_tables(const RunConfig& cfg) {
  if (cfg.tables) return load_tables(*cfg.tables);
  if (const char* env = std::getenv(kTableDirEnv); env && *env) return load_tables(std::filesystem::path(env));
  return load_tables(embedded_table_set());
}

void stamp_line(std::vector<TokenRef>& refs, std::size_t line) {
  for (auto& r : refs) r.line = line;
}

struct LineResult {
  std::string text;
  TranslitReport report;
};

int run_transform(const RunConfig& cfg, std::ostream& err) {
  const MappingTables tables = resolve_tables(cfg);
  const Lexicon lexicon = cfg.lexicon ? load_lexicon(*cfg.lexicon, tables) : Lexicon{};
  const ReverseLexicon reverse =
      cfg.command == "invert" ? ReverseLexicon(lexicon, tables) : ReverseLexicon{};
  const auto& in = cfg.inputs.front();
  const std::vector<std::string> lines = read_lines(in);
  const ScriptTag script = cfg.script.value_or(ScriptTag::Devanagari);

  auto apply = [&](std::u32string_view text) -> FullResult {
    if (cfg.command == "stage1") return stage1_line(text, script, tables, lexicon, cfg.strict);
    if (cfg.command == "full") return full_transliterate(text, script, tables, lexicon, cfg.strict);
    if (cfg.command == "invert") {
      if (!cfg.stage2_only) return invert_line(text, script, tables, reverse, cfg.strict);
      FullResult r;
      r.report.inventory_before.add(text);
      InverseStage2Result inv = inverse_stage2(text);
      r.text = std::move(inv.text);
      r.report.matras_rewritten = inv.rewritten;
      r.report.noncanonical = inv.flagged;
      r.report.inventory_after.add(r.text);
      return r;
    }
    // stage2
    FullResult r;
    r.report.inventory_before.add(text);
    const auto tokens = split_tokens(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      ++r.report.words_total;
      if (dominant_script(tokens[i]) == ScriptTag::Devanagari) ++r.report.words_converted;
      else r.report.passthrough.push_back({tokens[i], 0, i, "not Devanagari"});
    }
    Stage2Result s2 = stage2(text);
    r.text = std::move(s2.text);
    r.report.matras_rewritten = s2.rewritten;
    r.report.orphan_matras = s2.orphans;
    r.report.collisions = s2.collisions;
    r.report.inventory_after.add(r.text);
    return r;
  };

  const auto results = parallel_map(lines.size(), cfg.jobs, [&](std::size_t i) {
    TranscriptLine t = parse_transcript_line(nfc(lines[i]));
    FullResult r;
    try {
      r = apply(to_u32(t.text));
    } catch (const UnmappedGrapheme& e) {
      throw LineFailure(in.string() + ":" + std::to_string(i + 1) + ": " + e.what());
    } catch (const NoPreimage& e) {
      throw LineFailure(in.string() + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    for (auto* refs : {&r.report.unmapped, &r.report.passthrough, &r.report.ambiguous})
      stamp_line(*refs, i + 1);
    t.text = to_utf8(r.text);
    return LineResult{format_transcript_line(t), std::move(r.report)};
  });

  std::string output;
  TranslitReport report;
  for (const auto& r : results) {
    output += r.text;
    output += '\n';
    report += r.report;
  }

  Json j;
  j["command"] = cfg.command;
  j["input"] = in.string();
  j["output"] = cfg.output.string();
  if (cfg.script) j["script"] = std::string(to_string(*cfg.script));
  j["lines"] = lines.size();
  j["strict"] = cfg.strict;
  const Json body = to_json(report);
  for (const auto& [k, v] : body.items()) j[k] = v;

  write_atomic(cfg.output, output);
  auto report_path = cfg.report;
  if (report_path.empty()) {
    report_path = cfg.output;
    report_path += ".report.json";
  }
  write_atomic(report_path, j.dump(2) + "\n");
  err << cfg.command << ": " << lines.size() << " lines, " << report.words_converted << "/"
      << report.words_total << " words converted, " << report.passthrough.size() << " passthrough, "
      << report.unmapped.size() << " unmapped\n";
  return kOk;
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.output.empty()) out << j.dump(2) << "\n";
  else write_atomic(cfg.output, j.dump(2) + "\n");
}

int run_analyze(const RunConfig& cfg, std::ostream& out) {
  Json j;
  Json inputs = Json::array();
  std::vector<InventoryReport> reports;
  for (const auto& path : cfg.inputs) {
    InventoryReport inv;
    for (const auto& line : read_lines(path)) inv.add(to_u32(parse_transcript_line(nfc(line)).text));
    inputs.push_back({{"path", path.string()}, {"inventory", to_json(inv)}});
    reports.push_back(std::move(inv));
  }
  j["inputs"] = std::move(inputs);
  if (reports.size() == 2) j["reduction"] = to_json(compare_inventories(reports[0], reports[1]));
  emit(cfg, j, out);
  return kOk;
}

int run_score(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto refs = read_utterances(cfg.ref);
  const auto hyps = read_utterances(cfg.hyp);
  const EvalReport report = score(refs, hyps);
  Json j;
  j["ref"] = cfg.ref.string();
  j["hyp"] = cfg.hyp.string();
  const Json body = to_json(report);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(cfg, j, out);
  err << "WER " << report.wer << " CER " << report.cer << " over " << report.utterances.size()
      << " utterances\n";
  return kOk;
}

int run_build_lexicon(const RunConfig& cfg, std::ostream& err) {
  const MappingTables tables = resolve_tables(cfg);
  std::vector<std::u32string> lines;
  for (const auto& path : cfg.inputs)
    for (const auto& line : read_lines(path)) lines.push_back(to_u32(parse_transcript_line(nfc(line)).text));
  const CorpusLexicon built = build_from_corpus(lines, *cfg.script, tables);

  std::string tsv = "# word\tphonemes\tnative|foreign\n";
  if (!built.foreign.empty()) tsv += "# foreign headwords below need pronunciations\n";
  tsv += built.lexicon.to_tsv();
  write_atomic(cfg.output, tsv);

  if (!cfg.report.empty()) {
    Json j;
    j["entries"] = built.lexicon.size();
    Json foreign = Json::array(), unmappable = Json::array();
    for (const auto& w : built.foreign) foreign.push_back(to_utf8(w));
    for (const auto& w : built.unmappable) unmappable.push_back(to_utf8(w));
    j["foreign_stubs"] = std::move(foreign);
    j["unmappable"] = std::move(unmappable);
    write_atomic(cfg.report, j.dump(2) + "\n");
  }
  err << "build-lexicon: " << built.lexicon.size() << " entries, " << built.foreign.size()
      << " foreign stubs, " << built.unmappable.size() << " unmappable\n";
  return kOk;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "analyze") return run_analyze(cfg, out);
    if (cfg.command == "score") return run_score(cfg, out, err);
    if (cfg.command == "build-lexicon") return run_build_lexicon(cfg, err);
    return run_transform(cfg, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const TableError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const LineFailure& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage transliteration of Telugu and Nepali text into a reduced Devanagari grapheme space"};
  app.name(args.empty() ? "lipi" : args.front());
  app.require_subcommand(1);

  RunConfig cfg;
  std::string script_name;
  std::string tables_dir, lexicon_path;

  auto common_transform = [&](CLI::App* sub, bool needs_script) {
    sub->add_option("--in", cfg.inputs, "Input transcript (UTF-8, optional id<TAB> prefix)")
        ->required()
        ->expected(1);
    sub->add_option("--out", cfg.output, "Output transcript")->required();
    sub->add_option("--report", cfg.report, "JSON report path (default: <out>.report.json)");
    sub->add_option("--tables", tables_dir, "Mapping table directory (default: $LIPI_TABLE_DIR, else built-in)");
    sub->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", cfg.strict, "Fail (exit 3) on unmapped graphemes instead of passing tokens through");
    auto* s = sub->add_option("--script", script_name, "telugu | nepali | devanagari")
                  ->check(CLI::IsMember({"telugu", "nepali", "devanagari"}));
    if (needs_script) s->required();
  };

  auto* stage1 = app.add_subcommand("stage1", "Lexical transformation into Devanagari");
  common_transform(stage1, true);
  stage1->add_option("--lexicon", lexicon_path, "Pronunciation lexicon TSV");
  auto* stage2_cmd = app.add_subcommand("stage2", "Rewrite matras as virama + independent vowel");
  common_transform(stage2_cmd, false);
  auto* full = app.add_subcommand("full", "stage1 followed by stage2");
  common_transform(full, true);
  full->add_option("--lexicon", lexicon_path, "Pronunciation lexicon TSV");
  auto* invert = app.add_subcommand("invert", "Map transliterated text back into --script");
  common_transform(invert, true);
  invert->add_option("--lexicon", lexicon_path, "Pronunciation lexicon TSV used to disambiguate merges");
  invert->add_flag("--stage2-only", cfg.stage2_only, "Only undo stage2");

  auto* analyze = app.add_subcommand("analyze", "Grapheme inventory of one corpus, or a before/after pair");
  analyze->add_option("--in", cfg.inputs, "Corpus (repeat once for a before/after comparison)")
      ->required()
      ->expected(1, 2)
      ->allow_extra_args(false);
  analyze->add_option("--out", cfg.output, "JSON output (default: stdout)");

  auto* score_cmd = app.add_subcommand(
      "score", "WER/CER of --hyp against --ref, paired by utterance id. CER collapses whitespace runs "
               "to one space, trims both ends, and counts the space between words.");
  score_cmd->add_option("--ref", cfg.ref, "Reference transcript")->required();
  score_cmd->add_option("--hyp", cfg.hyp, "Hypothesis transcript")->required();
  score_cmd->add_option("--out", cfg.output, "JSON output (default: stdout)");

  auto* build = app.add_subcommand("build-lexicon", "Emit a lexicon TSV stub from a corpus");
  build->add_option("--in", cfg.inputs, "Corpus")->required()->expected(1);
  build->add_option("--out", cfg.output, "Lexicon TSV")->required();
  build->add_option("--script", script_name, "telugu | nepali | devanagari")
      ->required()
      ->check(CLI::IsMember({"telugu", "nepali", "devanagari"}));
  build->add_option("--report", cfg.report, "JSON listing foreign stubs and unmappable tokens");
  build->add_option("--tables", tables_dir, "Mapping table directory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!script_name.empty()) cfg.script = kScriptNames.at(script_name);
  if (!tables_dir.empty()) cfg.tables = tables_dir;
  if (!lexicon_path.empty()) cfg.lexicon = lexicon_path;
  return execute(cfg, out, err);
}

}  // namespace lipi::cli
