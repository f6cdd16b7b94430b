#include "khadeq/scanner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "khadeq/chord_diagram.hpp"
#include "khadeq/common.hpp"
#include "khadeq/graph.hpp"
#include "khadeq/simplicial.hpp"

namespace khadeq {

namespace {

constexpr int kMaxChords = 8;

// Depth-first generation of double-occurrence words in first-occurrence
// normal form; a word is kept when it equals its canonical form, so each
// diagram class is emitted exactly once. force_pos >= 0 restricts the
// branch to words whose second 0 sits exactly there, which partitions the
// space for parallel runs (chord 0 may not close earlier, and at force_pos
// closing chord 0 is the only move).
void generate(std::vector<uint8_t>& word, int next_new, std::vector<int>& open,
              int n, int force_pos, std::vector<std::vector<uint8_t>>& out) {
  const size_t total = 2 * static_cast<size_t>(n);
  if (word.size() == total) {
    if (canonical_form(word) == word) out.push_back(word);
    return;
  }
  const bool at_force =
      force_pos >= 0 && word.size() == static_cast<size_t>(force_pos);
  for (size_t i = 0; i < open.size(); ++i) {
    int c = open[i];
    if (force_pos >= 0 && word.size() <= static_cast<size_t>(force_pos) &&
        (c == 0) != at_force)
      continue;
    word.push_back(static_cast<uint8_t>(c));
    open.erase(open.begin() + static_cast<long>(i));
    generate(word, next_new, open, n, force_pos, out);
    open.insert(open.begin() + static_cast<long>(i), c);
    word.pop_back();
  }
  if (!at_force && next_new < n) {
    word.push_back(static_cast<uint8_t>(next_new));
    open.push_back(next_new);
    generate(word, next_new + 1, open, n, force_pos, out);
    open.pop_back();
    word.pop_back();
  }
}

void check_chord_count(int n) {
  if (n < 1 || n > kMaxChords)
    throw std::invalid_argument("chord count must be in 1.." +
                                std::to_string(kMaxChords));
}

// Builds the interlacement graph and its bipartite flag; homology only when
// the record will actually be scanned.
ScanRecord compute_record(const std::vector<uint8_t>& word,
                          bool bipartite_only) {
  auto t0 = std::chrono::steady_clock::now();
  ScanRecord r;
  r.word = word;
  ChordDiagram d;
  for (uint8_t s : word) d.word.push_back(std::to_string(int(s)));
  Graph g = interlacement(d);
  r.bipartite = is_bipartite(g).bipartite;
  if (!bipartite_only || r.bipartite) {
    r.homology = reduced_homology(independence_complex(g));
    r.torsion = !r.homology.torsion_free();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

std::string record_line(const ScanRecord& r) {
  nlohmann::ordered_json j = record_to_json(r);
  std::string body = j.dump();
  j["hash"] = hex64(fnv1a64(body));
  return j.dump();
}

ScanRecord record_from_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("checkpoint corruption: unparseable record line");
  }
  ScanRecord r;
  std::string stored;
  try {
    stored = j.at("hash").get<std::string>();
    r.word = symbols_from_string(j.at("word").get<std::string>());
    r.bipartite = j.at("bipartite").get<bool>();
    r.homology = sequence_from_json(j.at("homology"));
    r.torsion = j.at("torsion").get<bool>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("checkpoint corruption: malformed record fields");
  }
  if (hex64(fnv1a64(record_to_json(r).dump())) != stored)
    throw ParseError("checkpoint corruption: record hash mismatch");
  return r;
}

}  // namespace

std::vector<std::vector<uint8_t>> enumerate_chord_diagrams_serial(int n) {
  check_chord_count(n);
  std::vector<std::vector<uint8_t>> out;
  std::vector<uint8_t> word;
  std::vector<int> open;
  generate(word, 0, open, n, -1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<uint8_t>> enumerate_chord_diagrams(int n) {
  check_chord_count(n);
  if (n <= 4) return enumerate_chord_diagrams_serial(n);
  // in normal form the word starts with 0; partition by the position of the
  // second 0, which can be any of 1..2n-1
  std::vector<std::vector<std::vector<uint8_t>>> shards(
      static_cast<size_t>(2 * n));
#pragma omp parallel for schedule(dynamic)
  for (int j = 1; j <= 2 * n - 1; ++j) {
    std::vector<uint8_t> word{0};
    std::vector<int> open{0};
    generate(word, 1, open, n, j, shards[static_cast<size_t>(j)]);
  }
  std::vector<std::vector<uint8_t>> out;
  for (auto& s : shards) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::ordered_json record_to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["word"] = symbols_to_string(r.word);
  j["chords"] = r.word.size() / 2;
  j["bipartite"] = r.bipartite;
  j["homology"] = sequence_to_json(r.homology);
  j["torsion"] = r.torsion;
  return j;
}

ScanSummary torsion_scan(const ScanParams& params) {
  check_chord_count(params.max_chords);
  auto t0 = std::chrono::steady_clock::now();

  // resume: keep complete, hash-valid records; a trailing partial line is an
  // interrupted write and is truncated away before appending
  std::map<std::vector<uint8_t>, ScanRecord> done;
  bool have_header = false;
  if (!params.checkpoint.empty()) {
    std::ifstream in(params.checkpoint, std::ios::binary);
    if (in) {
      std::string content((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
      in.close();
      std::vector<std::string> complete;
      size_t consumed = 0;
      std::istringstream lines(content);
      std::string line;
      bool partial_tail = false;
      while (std::getline(lines, line)) {
        consumed += line.size() + 1;
        if (consumed > content.size()) {
          partial_tail = true;
          break;
        }
        if (!line.empty()) complete.push_back(line);
      }
      for (size_t i = 0; i < complete.size(); ++i) {
        if (i == 0) {
          nlohmann::json header;
          try {
            header = nlohmann::json::parse(complete[0]);
          } catch (const nlohmann::json::exception&) {
            throw ParseError("checkpoint corruption: unparseable header");
          }
          if (header.value("kind", "") != "scan-checkpoint")
            throw ParseError("not a scan checkpoint file");
          if (header.at("max_chords").get<int>() != params.max_chords ||
              header.at("bipartite_only").get<bool>() != params.bipartite_only)
            throw ParseError("checkpoint parameters do not match this scan");
          have_header = true;
          continue;
        }
        ScanRecord r = record_from_line(complete[i]);
        done[r.word] = std::move(r);
      }
      if (partial_tail) {
        std::ofstream rewrite(params.checkpoint,
                              std::ios::binary | std::ios::trunc);
        for (const auto& l : complete) rewrite << l << "\n";
      }
    }
  }

  std::ofstream out;
  if (!params.checkpoint.empty()) {
    out.open(params.checkpoint, std::ios::binary | std::ios::app);
    if (!out)
      throw std::runtime_error("cannot open checkpoint file " +
                               params.checkpoint);
    if (!have_header) {
      nlohmann::ordered_json header;
      header["schema"] = 1;
      header["kind"] = "scan-checkpoint";
      header["max_chords"] = params.max_chords;
      header["bipartite_only"] = params.bipartite_only;
      out << header.dump() << "\n";
      out.flush();
    }
  }

#ifdef _OPENMP
  int prev_threads = omp_get_max_threads();
  if (params.jobs > 0) omp_set_num_threads(params.jobs);
#endif

  ScanSummary summary;
  for (int n = 1; n <= params.max_chords; ++n) {
    auto words = enumerate_chord_diagrams(n);
    // 0 = resumed from checkpoint, 1 = computed and scanned, 2 = computed
    // flag only (filtered out by --bipartite-only before homology)
    std::vector<ScanRecord> fresh(words.size());
    std::vector<char> state(words.size(), 0);
    for (size_t i = 0; i < words.size(); ++i)
      if (!done.count(words[i])) state[i] = 1;

    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(words.size());
         ++i) {
      if (state[i] == 0) continue;
      try {
        auto& slot = fresh[static_cast<size_t>(i)];
        slot = compute_record(words[static_cast<size_t>(i)],
                              params.bipartite_only);
        if (params.bipartite_only && !slot.bipartite) state[i] = 2;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);

    auto& stats = summary.per_n[n];
    for (size_t i = 0; i < words.size(); ++i) {
      const ScanRecord* r =
          state[i] == 0 ? &done.at(words[i]) : &fresh[i];
      if (state[i] == 1) {
        ++summary.records_computed;
        if (out.is_open()) out << record_line(*r) << "\n";
      }
      ++stats.classes;
      if (r->bipartite) ++stats.bipartite;
      if (state[i] != 2 && r->torsion) {
        ++stats.torsion_hits;
        summary.findings.push_back(*r);
      }
    }
    if (out.is_open()) out.flush();
  }

#ifdef _OPENMP
  omp_set_num_threads(prev_threads);
#endif
  auto t1 = std::chrono::steady_clock::now();
  summary.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return summary;
}

nlohmann::ordered_json summary_to_json(const ScanSummary& s,
                                       const ScanParams& params) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["max_chords"] = params.max_chords;
  j["bipartite_only"] = params.bipartite_only;
  nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
  for (const auto& [n, stats] : s.per_n) {
    nlohmann::ordered_json e;
    e["classes"] = stats.classes;
    e["bipartite"] = stats.bipartite;
    e["torsion_hits"] = stats.torsion_hits;
    per_n[std::to_string(n)] = std::move(e);
  }
  j["per_n"] = std::move(per_n);
  auto findings = nlohmann::ordered_json::array();
  for (const auto& r : s.findings) findings.push_back(record_to_json(r));
  j["findings"] = std::move(findings);
  return j;
}

}  // namespace khadeq
