#include "khadeq/families.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "khadeq/common.hpp"

namespace khadeq {

BraidWord torus_braid(int m, int n) {
  if (m < 2 || n < 1) throw std::invalid_argument("torus_braid needs m >= 2, n >= 1");
  BraidWord w;
  w.strands = m;
  for (int rep = 0; rep < n; ++rep)
    for (int k = m - 1; k >= 1; --k) w.letters.push_back(k);
  return w;
}

BraidWord negative_torus_braid(int r) {
  if (r < 1) throw std::invalid_argument("negative_torus_braid needs r >= 1");
  BraidWord w = torus_braid(3, r);
  for (int& letter : w.letters) letter = -letter;
  return w;
}

BraidWord twisted_word(int m, int n) {
  if (m < 6 || n < 1) throw std::invalid_argument("twisted_word needs m >= 6, n >= 1");
  BraidWord w = torus_braid(m, n);
  w.letters.push_back(2);
  w.letters.push_back(4);
  int last_odd = m % 2 == 0 ? m - 1 : m - 2;
  for (int k = 1; k <= last_odd; k += 2) w.letters.push_back(-k);
  w.letters.push_back(2);
  w.letters.push_back(4);
  return w;
}

BraidWord f_family(int s, int r) {
  if (s < 5 || s % 2 == 0 || r < 1)
    throw std::invalid_argument("f_family needs odd s >= 5 and r >= 1");
  BraidWord w;
  w.strands = s;
  for (int rep = 0; rep < r; ++rep) {
    w.letters.push_back(-1);
    for (int k = 3; k <= s - 2; k += 2)
      for (int t = 0; t < 3; ++t) w.letters.push_back(-k);
    w.letters.push_back(-2);
    for (int k = 4; k <= s - 1; k += 2)
      for (int t = 0; t < 3; ++t) w.letters.push_back(-k);
  }
  return w;
}

std::string cable_fixture_chd() {
  // Five state circles: the clasp merges two of the six cable circles into
  // one (m), on which the two clasp chords and two cable chords interlace in
  // a 4-cycle; every other chord joins two distinct circles.
  return
      "p=27 n=2\n"
      "circle m: h1 b1 r1 b2 r2 b3 h1 b4 h2 b5 r2 b6 r1 d1 h2 d2 d3 d4 d5 d6\n"
      "circle c1: a1 a2 a3 f1 f2 f3 f4\n"
      "circle c2: a1 f1 a2 f2 a3 f3 f4 b1 b2 b3 b4 b5 b6\n"
      "circle c3: d1 d2 d3 d4 d5 d6 e1 e2 e3 f5 f6 f7\n"
      "circle c4: e1 e2 e3 f5 f6 f7\n";
}

bool matches_pattern(const Graph& g, const LandoPattern& p) {
  auto degree = [&](size_t v) {
    return std::popcount(g.adjacency_mask(v));
  };
  switch (p.kind) {
    case LandoPattern::Empty:
      return g.vertex_count() == 0;
    case LandoPattern::Cycle: {
      size_t n = static_cast<size_t>(p.cycle_length);
      if (g.vertex_count() != n || g.edge_count() != n) return false;
      for (size_t v = 0; v < n; ++v)
        if (degree(v) != 2) return false;
      // connected 2-regular graph with n vertices and n edges is the n-cycle
      std::vector<bool> seen(n, false);
      std::vector<size_t> stack{0};
      seen[0] = true;
      size_t count = 1;
      while (!stack.empty()) {
        uint64_t m = g.adjacency_mask(stack.back());
        stack.pop_back();
        while (m) {
          size_t u = static_cast<size_t>(std::countr_zero(m));
          m &= m - 1;
          if (!seen[u]) {
            seen[u] = true;
            ++count;
            stack.push_back(u);
          }
        }
      }
      return count == n;
    }
    case LandoPattern::Stars: {
      size_t want_verts =
          static_cast<size_t>(p.star_count) * static_cast<size_t>(p.star_rays + 1);
      size_t want_edges =
          static_cast<size_t>(p.star_count) * static_cast<size_t>(p.star_rays);
      if (g.vertex_count() != want_verts || g.edge_count() != want_edges)
        return false;
      if (p.star_rays == 1) {
        // disjoint edges: everything has degree 1
        for (size_t v = 0; v < g.vertex_count(); ++v)
          if (degree(v) != 1) return false;
        return true;
      }
      int centers = 0, leaves = 0;
      for (size_t v = 0; v < g.vertex_count(); ++v) {
        int d = degree(v);
        if (d == p.star_rays) {
          ++centers;
        } else if (d == 1) {
          ++leaves;
          // each leaf hangs off a center
          size_t u = static_cast<size_t>(std::countr_zero(g.adjacency_mask(v)));
          if (degree(u) != p.star_rays) return false;
        } else {
          return false;
        }
      }
      return centers == p.star_count && leaves == p.star_count * p.star_rays;
    }
  }
  return false;
}

AbelianGroupSequence path_homology(int n) {
  if (n < 0) throw std::invalid_argument("path_homology needs n >= 0");
  AbelianGroupSequence h;
  if (n % 3 == 0) return h;          // contractible
  int k = n % 3 == 1 ? (n - 1) / 3 : (n - 2) / 3;
  h.set(k, AbelianGroup{1, {}});     // a single k-sphere
  return h;
}

AbelianGroupSequence cycle_homology(int n) {
  if (n < 3) throw std::invalid_argument("cycle_homology needs n >= 3");
  AbelianGroupSequence h;
  if (n % 3 == 0) {
    h.set(n / 3 - 1, AbelianGroup{2, {}});  // wedge of two spheres
  } else {
    int k = n % 3 == 1 ? (n - 1) / 3 : (n + 1) / 3;
    h.set(k - 1, AbelianGroup{1, {}});
  }
  return h;
}

FamilySpec family_spec(const std::string& name,
                       const std::map<std::string, int>& params) {
  auto need = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
      throw std::invalid_argument("family '" + name + "' needs parameter " + key);
    return it->second;
  };
  FamilySpec f;
  f.family = name;
  f.params = params;
  if (name == "torus") {
    int m = need("m"), n = need("n");
    f.word = torus_braid(m, n);
    f.lando.kind = LandoPattern::Empty;
    f.predicted_homology.set(-1, AbelianGroup{1, {}});  // (-1)-sphere
  } else if (name == "negative-torus") {
    int r = need("r");
    f.word = negative_torus_braid(r);
    f.lando.kind = LandoPattern::Cycle;
    f.lando.cycle_length = 2 * r;
    f.predicted_homology = cycle_homology(2 * r);
  } else if (name == "twisted") {
    int m = need("m"), n = need("n");
    f.word = twisted_word(m, n);
    f.lando.kind = LandoPattern::Stars;
    f.lando.star_count = m / 2;
    f.lando.star_rays = n;
    f.predicted_homology.set(m / 2 - 1, AbelianGroup{1, {}});
  } else if (name == "f") {
    int s = need("s"), r = need("r");
    f.word = f_family(s, r);
    f.lando.kind = LandoPattern::Cycle;
    f.lando.cycle_length = 2 * r;
    f.predicted_homology = cycle_homology(2 * r);
  } else if (name == "cable") {
    f.chd = cable_fixture_chd();
    f.lando.kind = LandoPattern::Cycle;
    f.lando.cycle_length = 4;
    f.predicted_homology = cycle_homology(4);
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  return f;
}

nlohmann::ordered_json family_to_json(const FamilySpec& f) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["family"] = f.family;
  j["params"] = f.params;
  if (f.word) j["brd"] = braid_to_string(*f.word);
  if (f.chd) j["chd"] = *f.chd;
  nlohmann::ordered_json lando;
  switch (f.lando.kind) {
    case LandoPattern::Empty:
      lando["pattern"] = "empty";
      break;
    case LandoPattern::Cycle:
      lando["pattern"] = "cycle";
      lando["length"] = f.lando.cycle_length;
      break;
    case LandoPattern::Stars:
      lando["pattern"] = "stars";
      lando["count"] = f.lando.star_count;
      lando["rays"] = f.lando.star_rays;
      break;
  }
  j["lando"] = std::move(lando);
  j["homology"] = sequence_to_json(f.predicted_homology);
  return j;
}

}  // namespace khadeq
