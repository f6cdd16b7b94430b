#ifndef KHADEQ_SCANNER_HPP
#define KHADEQ_SCANNER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "khadeq/homology.hpp"

namespace khadeq {

// All chord diagrams with n chords up to rotation, reflection, and
// relabeling, as canonical symbol words in lexicographic order. Capped at
// n = 8, where the matching space (2n-1)!! is ~2e6.
std::vector<std::vector<uint8_t>> enumerate_chord_diagrams(int n);
// Single-threaded reference enumeration (same output).
std::vector<std::vector<uint8_t>> enumerate_chord_diagrams_serial(int n);

struct ScanRecord {
  std::vector<uint8_t> word;  // canonical
  bool bipartite = false;
  AbelianGroupSequence homology;  // reduced homology of I(interlacement)
  bool torsion = false;
  double wall_ms = 0.0;  // measured, reported in aggregate only
};

struct ScanParams {
  int max_chords = 6;
  bool bipartite_only = false;
  std::string checkpoint;  // empty: in-memory only
  int jobs = 1;
};

struct ScanStats {
  long long classes = 0;
  long long bipartite = 0;
  long long torsion_hits = 0;
};

struct ScanSummary {
  std::map<int, ScanStats> per_n;
  std::vector<ScanRecord> findings;  // records with torsion
  long long records_computed = 0;    // fresh this run (not resumed)
  double wall_ms = 0.0;
};

// Scans all diagrams with 1..max_chords chords for torsion in the reduced
// homology of the independence complex of their interlacement graphs.
// The checkpoint file is line-delimited json, one record per line, hash-
// guarded, appended in canonical order; an interrupted run resumes from it
// (a trailing partial line is discarded as an incomplete write, a complete
// line with a wrong hash is corruption and raises ParseError).
ScanSummary torsion_scan(const ScanParams& params);

nlohmann::ordered_json record_to_json(const ScanRecord& r);  // without hash
nlohmann::ordered_json summary_to_json(const ScanSummary& s,
                                       const ScanParams& params);

}  // namespace khadeq

#endif
