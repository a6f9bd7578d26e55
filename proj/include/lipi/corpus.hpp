#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lipi/metrics.hpp"
#include "lipi/translit.hpp"

namespace lipi {

/// One transcript line: optional `id<TAB>` prefix, then the utterance.
struct TranscriptLine {
  std::optional<std::string> id;
  std::string text;
};

TranscriptLine parse_transcript_line(std::string_view line);
std::string format_transcript_line(const TranscriptLine& line);

/// Lines without their terminators; a final newline does not add a line.
std::vector<std::string> read_lines(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Utterances keyed by id; lines without an id take their 1-based line number.
std::vector<Utterance> read_utterances(const std::filesystem::path& path);

/// Applies `fn` to every index in [0, n) on up to `jobs` threads. Results come
/// back in index order; if any call throws, the exception from the lowest
/// index is rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t n, std::size_t jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(work, b, std::min(n, b + chunk));
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

using Json = nlohmann::ordered_json;

Json to_json(const InventoryReport& r);
Json to_json(const ReductionSummary& r);
Json to_json(const TranslitReport& r);
Json to_json(const Alignment& a);
Json to_json(const EvalReport& r);

}  // namespace lipi
