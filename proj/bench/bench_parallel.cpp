// Timing comparison of the serial reference paths against the OpenMP ones:
// chord-diagram enumeration, the realization search, and batched homology.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "khadeq/chord_diagram.hpp"
#include "khadeq/homology.hpp"
#include "khadeq/jonsson.hpp"
#include "khadeq/scanner.hpp"
#include "khadeq/simplicial.hpp"

using namespace khadeq;

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    std::vector<std::vector<uint8_t>> a, b;
    double ts = time_ms([&] { a = enumerate_chord_diagrams_serial(7); });
    double tp = time_ms([&] { b = enumerate_chord_diagrams(7); });
    row("enumerate 7-chord classes", ts, tp);
    if (a != b) std::printf("  MISMATCH: enumeration outputs differ\n");
  }

  {
    // hard no-instance: exhaustive proof that the separation pattern is not
    // realizable as a chord diagram
    SimplicialComplex y = rp2_complex();
    Graph g = jonsson_graph(y);
    Graph sub = induced_subgraph(g, vsc_hint(*vsc_witness(y)));
    bool exhausted = false;
    std::optional<std::vector<std::string>> w;
    RecognitionResult r;
    double ts = time_ms(
        [&] { w = find_realization_serial(sub, 400'000'000, &exhausted); });
    RecognizeOptions opts;
    double tp = time_ms([&] { r = recognize_circle_graph(sub, opts); });
    row("unrealizability proof", ts, tp);
    if (w || !std::holds_alternative<NotCircleCertificate>(r))
      std::printf("  MISMATCH: expected an unrealizable subgraph\n");
  }

  {
    // homology of one larger complex: per-degree matrix reductions run in
    // parallel inside reduced_homology
    Graph g = jonsson_graph(rp2_complex());
    SimplicialComplex big = independence_complex(g);
    AbelianGroupSequence hs, hp;
#ifdef _OPENMP
    int prev = omp_get_max_threads();
    omp_set_num_threads(1);
    double ts = time_ms([&] { hs = reduced_homology(big); });
    omp_set_num_threads(prev);
#else
    double ts = time_ms([&] { hs = reduced_homology(big); });
#endif
    double tp = time_ms([&] { hp = reduced_homology(big); });
    row("suspension-graph homology", ts, tp);
    if (!(hs == hp)) std::printf("  MISMATCH: homology differs\n");
  }

  {
    ScanParams one, many;
    one.max_chords = many.max_chords = 6;
    one.jobs = 1;
    many.jobs = 0;
    ScanSummary ss, sp;
    double ts = time_ms([&] { ss = torsion_scan(one); });
    double tp = time_ms([&] { sp = torsion_scan(many); });
    row("6-chord torsion scan", ts, tp);
    if (summary_to_json(ss, one).dump() != summary_to_json(sp, many).dump())
      std::printf("  MISMATCH: scan summaries differ\n");
  }

  return 0;
}
