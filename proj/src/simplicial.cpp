#include "khadeq/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "khadeq/common.hpp"

namespace khadeq {

namespace {

// Maximal cliques of the mask graph `adj` via Bron-Kerbosch with pivoting.
void bron_kerbosch(uint64_t r, uint64_t p, uint64_t x,
                   const std::vector<uint64_t>& adj,
                   std::vector<uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  uint64_t px = p | x;
  int pivot = -1, best = -1;
  uint64_t scan = px;
  while (scan) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    int deg = std::popcount(p & adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  uint64_t cand = p & ~adj[pivot];
  while (cand) {
    int v = std::countr_zero(cand);
    uint64_t bit = uint64_t{1} << v;
    cand &= cand - 1;
    bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<uint64_t> reduce_to_antichain(std::vector<uint64_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<uint64_t> maximal;
  for (uint64_t f : faces) {
    bool contained = false;
    for (uint64_t g : faces)
      if (g != f && (f & g) == f) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(f);
  }
  return maximal;
}

}  // namespace

SimplicialComplex SimplicialComplex::empty_complex() {
  SimplicialComplex x;
  x.facets_ = {0};
  return x;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> verts;
  for (const auto& f : facets) verts.insert(f.begin(), f.end());
  return from_facets_on({verts.begin(), verts.end()}, facets);
}

SimplicialComplex SimplicialComplex::from_facets_on(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty())
    throw std::invalid_argument("void complex: a complex needs at least one face");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.size() > 64)
    throw std::invalid_argument("complex exceeds 64 vertices");
  SimplicialComplex x;
  x.vertices_ = std::move(vertices);
  auto index = [&](const std::string& v) {
    auto it = std::lower_bound(x.vertices_.begin(), x.vertices_.end(), v);
    if (it == x.vertices_.end() || *it != v)
      throw std::invalid_argument("facet vertex '" + v +
                                  "' missing from vertex set");
    return static_cast<size_t>(it - x.vertices_.begin());
  };
  std::vector<uint64_t> masks;
  for (const auto& f : facets) {
    uint64_t m = 0;
    for (const auto& v : f) m |= uint64_t{1} << index(v);
    masks.push_back(m);
  }
  x.facets_ = reduce_to_antichain(std::move(masks));
  return x;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
  std::vector<std::vector<std::string>> out;
  for (uint64_t m : facets_) out.push_back(face_labels(m));
  return out;
}

bool SimplicialComplex::is_empty_complex() const {
  return facets_.size() == 1 && facets_[0] == 0;
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (uint64_t m : facets_) dim = std::max(dim, std::popcount(m) - 1);
  return dim;
}

std::vector<std::vector<uint64_t>> SimplicialComplex::faces_by_dim() const {
  std::vector<std::set<uint64_t>> buckets(
      static_cast<size_t>(dimension() + 2));
  for (uint64_t facet : facets_) {
    uint64_t sub = facet;
    while (true) {
      buckets[static_cast<size_t>(std::popcount(sub))].insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  std::vector<std::vector<uint64_t>> out;
  for (auto& b : buckets) out.emplace_back(b.begin(), b.end());
  return out;
}

std::vector<std::string> SimplicialComplex::face_labels(uint64_t mask) const {
  std::vector<std::string> out;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out.push_back(vertices_[static_cast<size_t>(v)]);
  }
  return out;
}

SimplicialComplex independence_complex(const Graph& g) {
  if (g.vertex_count() == 0) return SimplicialComplex::empty_complex();
  size_t n = g.vertex_count();
  // maximal independent sets = maximal cliques of the complement
  std::vector<uint64_t> comp(n);
  uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (size_t v = 0; v < n; ++v)
    comp[v] = all & ~g.adjacency_mask(v) & ~(uint64_t{1} << v);
  std::vector<uint64_t> cliques;
  bron_kerbosch(0, all, 0, comp, cliques);
  std::sort(cliques.begin(), cliques.end());
  std::vector<std::vector<std::string>> facet_labels;
  for (uint64_t c : cliques) {
    std::vector<std::string> f;
    uint64_t m = c;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      f.push_back(g.vertices()[static_cast<size_t>(v)]);
    }
    facet_labels.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets_on(g.vertices(), facet_labels);
}

SimplicialComplex join(const SimplicialComplex& x,
                       const SimplicialComplex& y) {
  bool collide = false;
  for (const auto& v : x.vertices())
    if (std::binary_search(y.vertices().begin(), y.vertices().end(), v))
      collide = true;
  auto tag = [&](const SimplicialComplex& c, const std::string& prefix) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : c.facets()) {
      std::vector<std::string> g;
      for (const auto& v : f) g.push_back(collide ? prefix + v : v);
      out.push_back(std::move(g));
    }
    return out;
  };
  auto fx = tag(x, "l.");
  auto fy = tag(y, "r.");
  std::vector<std::vector<std::string>> joined;
  for (const auto& a : fx)
    for (const auto& b : fy) {
      std::vector<std::string> f = a;
      f.insert(f.end(), b.begin(), b.end());
      joined.push_back(std::move(f));
    }
  std::vector<std::string> verts;
  for (const auto& v : x.vertices()) verts.push_back(collide ? "l." + v : v);
  for (const auto& v : y.vertices()) verts.push_back(collide ? "r." + v : v);
  return SimplicialComplex::from_facets_on(verts, joined);
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  std::string north = "susp.n", south = "susp.s";
  auto taken = [&](const std::string& v) {
    return std::binary_search(x.vertices().begin(), x.vertices().end(), v);
  };
  while (taken(north)) north += "'";
  while (taken(south)) south += "'";
  auto poles = SimplicialComplex::from_facets({{north}, {south}});
  return join(x, poles);
}

SimplicialComplex parse_facets(const std::string& text) {
  std::istringstream iss(text);
  std::string line;
  std::vector<std::vector<std::string>> facets;
  int lineno = 0;
  while (std::getline(iss, line)) {
    ++lineno;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    facets.push_back(std::move(toks));
  }
  if (facets.empty())
    throw ParseError("no facets found: void complex is not accepted");
  return SimplicialComplex::from_facets(facets);
}

}  // namespace khadeq
