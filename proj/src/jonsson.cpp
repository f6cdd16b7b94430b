#include "khadeq/jonsson.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "khadeq/common.hpp"

namespace khadeq {

Graph jonsson_graph(const SimplicialComplex& y) {
  if (y.vertices().empty())
    throw std::invalid_argument("construction needs a complex with vertices");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : y.vertices()) verts.push_back("v:" + v);
  std::vector<std::string> facet_names;
  for (const auto& f : y.facets())
    facet_names.push_back("f:" + join_strings(f, ","));
  verts.insert(verts.end(), facet_names.begin(), facet_names.end());
  const auto& masks = y.facet_masks();
  for (size_t fi = 0; fi < masks.size(); ++fi)
    for (size_t vi = 0; vi < y.vertices().size(); ++vi)
      if (!((masks[fi] >> vi) & 1))
        edges.emplace_back("v:" + y.vertices()[vi], facet_names[fi]);
  return Graph(verts, edges);
}

std::optional<VSCWitness> vsc_witness(const SimplicialComplex& y) {
  const auto& masks = y.facet_masks();
  const size_t nf = masks.size();
  auto bits_of = [&](uint64_t m) {
    std::vector<size_t> out;
    while (m) {
      out.push_back(static_cast<size_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    return out;
  };
  for (size_t f1 = 0; f1 < nf; ++f1)
    for (size_t f2 = f1 + 1; f2 < nf; ++f2)
      for (size_t f3 = f2 + 1; f3 < nf; ++f3) {
        uint64_t others23 = masks[f2] | masks[f3];
        for (size_t a1 : bits_of(masks[f1] & ~others23))
          for (size_t a2 : bits_of(masks[f2] & ~(masks[f1] | masks[f3])))
            for (size_t a3 : bits_of(masks[f3] & ~(masks[f1] | masks[f2]))) {
              if (a1 == a2 || a1 == a3 || a2 == a3) continue;
              uint64_t amask = (uint64_t{1} << a1) | (uint64_t{1} << a2) |
                               (uint64_t{1} << a3);
              for (size_t f0 = 0; f0 < nf; ++f0) {
                if (f0 == f1 || f0 == f2 || f0 == f3) continue;
                if (masks[f0] & amask) continue;
                VSCWitness w;
                w.facets[0] = y.face_labels(masks[f0]);
                w.facets[1] = y.face_labels(masks[f1]);
                w.facets[2] = y.face_labels(masks[f2]);
                w.facets[3] = y.face_labels(masks[f3]);
                w.vertices[0] = y.vertices()[a1];
                w.vertices[1] = y.vertices()[a2];
                w.vertices[2] = y.vertices()[a3];
                return w;
              }
            }
      }
  return std::nullopt;
}

std::vector<std::string> vsc_hint(const VSCWitness& w) {
  std::vector<std::string> out;
  for (const auto& f : w.facets) out.push_back("f:" + join_strings(f, ","));
  for (const auto& v : w.vertices) out.push_back("v:" + v);
  return out;
}

namespace {

// Exhaustive search for a double-occurrence word whose interlacement graph
// equals the target adjacency exactly. Rotation symmetry is cut by pinning
// vertex 0's first endpoint to position 0, reflection symmetry by keeping
// its second endpoint in the first half.
struct WordSearch {
  int n = 0;
  int total = 0;
  std::vector<uint64_t> adj;
  uint64_t max_nodes = 0;
  uint64_t nodes = 0;
  bool exhausted = false;
  std::atomic<int>* cancel_above = nullptr;  // abort when own partition index exceeds this
  int partition = -1;

  std::vector<int> word;       // chord index per position, -1 while free
  std::vector<int> first_pos;  // first endpoint position per chord
  uint64_t opened = 0, closed = 0;
  std::vector<int> solution;
  // partner position for chord 0 when used as a partition key (-1: free)
  int forced_partner = -1;

  bool adjacent(int a, int b) const { return (adj[a] >> b) & 1; }

  bool close_consistent(int c, int pos) {
    // endpoints inside the open arc determine every interlacement with c
    int from = first_pos[c] + 1;
    std::array<int, 16> cnt{};
    for (int q = from; q < pos; ++q) cnt[static_cast<size_t>(word[q])]++;
    uint64_t inside_once = 0;
    for (int d = 0; d < n; ++d) {
      if (d == c) continue;
      if (cnt[static_cast<size_t>(d)] == 1) inside_once |= uint64_t{1} << d;
    }
    uint64_t others = (opened | closed) & ~(uint64_t{1} << c);
    if ((adj[c] & others) != (inside_once & others)) return false;
    // chords not opened yet can never reach into the arc
    uint64_t unopened = ~opened & ((uint64_t{1} << n) - 1);
    if (adj[c] & unopened) return false;
    return true;
  }

  bool dfs(int pos) {
    if (cancel_above && partition > cancel_above->load(std::memory_order_relaxed))
      return false;
    if (++nodes > max_nodes) {
      exhausted = true;
      return false;
    }
    if (pos == total) {
      solution.assign(word.begin(), word.end());
      return true;
    }
    int open_count = std::popcount(opened & ~closed);
    if (open_count > total - pos) return false;  // cannot close everything

    bool zero_open = (opened & ~closed) & 1;
    // chord 0's partner may not pass the reflection midpoint
    bool must_close_zero = zero_open && pos == total / 2 && forced_partner < 0;
    bool partner_now = forced_partner == pos;

    // close an open chord
    uint64_t closable = opened & ~closed;
    if (must_close_zero || partner_now) closable &= 1;
    if (forced_partner > pos) closable &= ~uint64_t{1};
    while (closable) {
      int c = std::countr_zero(closable);
      closable &= closable - 1;
      if (c == 0 && forced_partner < 0 && pos > total / 2) continue;
      if (close_consistent(c, pos)) {
        word[pos] = c;
        closed |= uint64_t{1} << c;
        if (dfs(pos + 1)) return true;
        closed &= ~(uint64_t{1} << c);
        word[pos] = -1;
      }
      if (exhausted) return false;
    }
    if (must_close_zero || partner_now) return false;

    // open a fresh chord
    uint64_t openable = ~opened & ((uint64_t{1} << n) - 1);
    while (openable) {
      int c = std::countr_zero(openable);
      openable &= openable - 1;
      word[pos] = c;
      opened |= uint64_t{1} << c;
      first_pos[static_cast<size_t>(c)] = pos;
      if (dfs(pos + 1)) return true;
      opened &= ~(uint64_t{1} << c);
      word[pos] = -1;
      if (exhausted) return false;
    }
    return false;
  }

  // search with chord 0 pinned at position 0; partner restricted to <= n
  // (or to exactly `partner` when partitioning).
  bool run(int partner) {
    word.assign(static_cast<size_t>(total), -1);
    first_pos.assign(static_cast<size_t>(n), -1);
    opened = closed = 0;
    forced_partner = partner;
    word[0] = 0;
    opened = 1;
    first_pos[0] = 0;
    return dfs(1);
  }
};

std::optional<std::vector<int>> search_graph(const Graph& g, uint64_t max_nodes,
                                             bool* out_exhausted, bool parallel) {
  const int n = static_cast<int>(g.vertex_count());
  if (out_exhausted) *out_exhausted = false;
  if (n == 0) return std::vector<int>{};
  std::vector<uint64_t> adj(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.adjacency_mask(static_cast<size_t>(v));

  const int total = 2 * n;
  bool exhausted_any = false;

  if (!parallel || n < 3) {
    WordSearch s;
    s.n = n;
    s.total = total;
    s.adj = adj;
    s.max_nodes = max_nodes;
    if (s.run(-1)) return s.solution;
    if (out_exhausted) *out_exhausted = s.exhausted;
    return std::nullopt;
  }

  // one partition per partner position of chord 0; deterministic winner is
  // the smallest partner with a solution, so later partitions may stop as
  // soon as an earlier one succeeds
  std::vector<std::optional<std::vector<int>>> results(static_cast<size_t>(n + 1));
  std::atomic<int> best_found{INT32_MAX};
  std::atomic<uint64_t> node_pool{0};
#pragma omp parallel for schedule(dynamic)
  for (int partner = 1; partner <= n; ++partner) {
    if (partner > best_found.load(std::memory_order_relaxed)) continue;
    WordSearch s;
    s.n = n;
    s.total = total;
    s.adj = adj;
    s.max_nodes = max_nodes / static_cast<uint64_t>(n);
    s.cancel_above = &best_found;
    s.partition = partner;
    if (s.run(partner)) {
      results[static_cast<size_t>(partner)] = s.solution;
      int cur = best_found.load();
      while (partner < cur && !best_found.compare_exchange_weak(cur, partner)) {
      }
    }
    if (s.exhausted) {
#pragma omp critical
      exhausted_any = true;
    }
    node_pool += s.nodes;
  }
  for (int partner = 1; partner <= n; ++partner)
    if (results[static_cast<size_t>(partner)])
      return results[static_cast<size_t>(partner)];
  if (out_exhausted) *out_exhausted = exhausted_any;
  return std::nullopt;
}

std::vector<std::string> symbols_to_labels(const Graph& g,
                                           const std::vector<int>& word) {
  std::vector<std::string> out;
  for (int c : word) out.push_back(g.vertices()[static_cast<size_t>(c)]);
  return out;
}

// Subsets matching the separation-pattern obstruction: three mutually
// nonadjacent vertices x1,x2,x3, one common neighbor y0, and y1,y2,y3 with
// y_i adjacent to exactly the two x_j, j != i (no edges within the y side).
std::vector<std::vector<std::string>> pattern_subsets(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  const int n = static_cast<int>(g.vertex_count());
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = x1 + 1; x2 < n; ++x2) {
      if (g.adjacency_mask(static_cast<size_t>(x1)) >> x2 & 1) continue;
      for (int x3 = x2 + 1; x3 < n; ++x3) {
        uint64_t xm = (uint64_t{1} << x1) | (uint64_t{1} << x2) | (uint64_t{1} << x3);
        if (g.adjacency_mask(static_cast<size_t>(x3)) & xm) continue;
        if (g.adjacency_mask(static_cast<size_t>(x2)) >> x3 & 1) continue;
        std::vector<int> want0, want1, want2, want3;
        for (int y = 0; y < n; ++y) {
          if ((uint64_t{1} << y) & xm) continue;
          uint64_t a = g.adjacency_mask(static_cast<size_t>(y)) & xm;
          uint64_t full = xm;
          if (a == full) want0.push_back(y);
          if (a == (full & ~(uint64_t{1} << x1))) want1.push_back(y);
          if (a == (full & ~(uint64_t{1} << x2))) want2.push_back(y);
          if (a == (full & ~(uint64_t{1} << x3))) want3.push_back(y);
        }
        for (int y0 : want0)
          for (int y1 : want1)
            for (int y2 : want2)
              for (int y3 : want3) {
                int ys[4] = {y0, y1, y2, y3};
                uint64_t ym = 0;
                bool distinct = true;
                for (int y : ys) {
                  if (ym & (uint64_t{1} << y)) distinct = false;
                  ym |= uint64_t{1} << y;
                }
                if (!distinct) continue;
                bool yedges = false;
                for (int y : ys)
                  if (g.adjacency_mask(static_cast<size_t>(y)) & ym) yedges = true;
                if (yedges) continue;
                out.push_back({g.vertices()[static_cast<size_t>(x1)],
                               g.vertices()[static_cast<size_t>(x2)],
                               g.vertices()[static_cast<size_t>(x3)],
                               g.vertices()[static_cast<size_t>(y0)],
                               g.vertices()[static_cast<size_t>(y1)],
                               g.vertices()[static_cast<size_t>(y2)],
                               g.vertices()[static_cast<size_t>(y3)]});
                if (out.size() >= 64) return out;  // plenty of candidates
              }
      }
    }
  return out;
}

void all_subsets(const std::vector<std::string>& verts, size_t k,
                 std::vector<std::vector<std::string>>& out) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > verts.size()) return;
  while (true) {
    std::vector<std::string> sub;
    for (size_t i : idx) sub.push_back(verts[i]);
    out.push_back(std::move(sub));
    size_t i = k;
    while (i > 0 && idx[i - 1] == verts.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<std::string>> find_realization_serial(
    const Graph& g, uint64_t max_nodes, bool* exhausted) {
  auto word = search_graph(g, max_nodes, exhausted, /*parallel=*/false);
  if (!word) return std::nullopt;
  return symbols_to_labels(g, *word);
}

RecognitionResult recognize_circle_graph(const Graph& g,
                                         const RecognizeOptions& opts) {
  const int n = static_cast<int>(g.vertex_count());
  if (n <= opts.budget) {
    bool exhausted = false;
    auto word = search_graph(g, opts.max_nodes, &exhausted, opts.parallel);
    if (word) return Realization{ChordDiagram{symbols_to_labels(g, *word)}};
    if (exhausted) return Unknown{"search node budget exhausted"};
    return NotCircleCertificate{g.vertices()};
  }

  // too large for a full decision: hunt for an unrealizable induced subgraph
  std::vector<std::vector<std::string>> candidates = opts.hints;
  for (auto& s : pattern_subsets(g)) candidates.push_back(std::move(s));
  for (size_t k :
       {static_cast<size_t>(std::min(opts.budget, 7)), size_t{6}, size_t{5}})
    all_subsets(g.vertices(), k, candidates);

  for (const auto& sub : candidates) {
    if (sub.size() > static_cast<size_t>(opts.budget)) continue;
    Graph h = induced_subgraph(g, sub);
    bool exhausted = false;
    auto word = search_graph(h, opts.max_nodes, &exhausted, opts.parallel);
    if (exhausted) return Unknown{"search node budget exhausted"};
    if (!word) {
      auto verts = h.vertices();
      return NotCircleCertificate{verts};
    }
  }
  return Unknown{"no certificate within budget " + std::to_string(opts.budget)};
}

SimplicialComplex rp2_complex() {
  return SimplicialComplex::from_facets({
      {"0", "1", "2"}, {"1", "2", "3"}, {"0", "2", "5"}, {"0", "1", "4"},
      {"2", "3", "4"}, {"2", "4", "5"}, {"0", "3", "5"}, {"0", "3", "4"},
      {"1", "4", "5"}, {"1", "3", "5"},
  });
}

nlohmann::ordered_json recognition_to_json(const RecognitionResult& r) {
  nlohmann::ordered_json j;
  if (std::holds_alternative<Realization>(r)) {
    j["kind"] = "realization";
    j["word"] = std::get<Realization>(r).word.word;
  } else if (std::holds_alternative<NotCircleCertificate>(r)) {
    j["kind"] = "not_circle";
    j["certificate"] = std::get<NotCircleCertificate>(r).vertices;
  } else {
    j["kind"] = "unknown";
    j["reason"] = std::get<Unknown>(r).reason;
  }
  return j;
}

nlohmann::ordered_json vsc_to_json(const std::optional<VSCWitness>& w) {
  if (!w) return nullptr;
  nlohmann::ordered_json j;
  j["facets"] = w->facets;
  j["vertices"] = w->vertices;
  return j;
}

}  // namespace khadeq
