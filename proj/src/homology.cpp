#include "khadeq/homology.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "khadeq/common.hpp"

namespace khadeq {

namespace {

int64_t cadd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in matrix reduction");
  return r;
}

int64_t cmul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in matrix reduction");
  return r;
}

int64_t cneg(int64_t a) {
  if (a == std::numeric_limits<int64_t>::min())
    throw OverflowError("integer overflow in matrix reduction");
  return -a;
}

void row_axpy(IntMatrix& m, size_t dst, size_t src, int64_t q, size_t from) {
  // row[dst] -= q * row[src]
  for (size_t c = from; c < m.cols; ++c)
    m.at(dst, c) = cadd(m.at(dst, c), cneg(cmul(q, m.at(src, c))));
}

void col_axpy(IntMatrix& m, size_t dst, size_t src, int64_t q, size_t from) {
  for (size_t r = from; r < m.rows; ++r)
    m.at(r, dst) = cadd(m.at(r, dst), cneg(cmul(q, m.at(r, src))));
}

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

void negate_row(IntMatrix& m, size_t r) {
  for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = cneg(m.at(r, c));
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult out;
  size_t t = 0;
  const size_t lim = std::min(m.rows, m.cols);
  while (t < lim) {
    // smallest |nonzero| pivot keeps entry growth down
    size_t bi = 0, bj = 0;
    uint64_t best = 0;
    for (size_t i = t; i < m.rows; ++i)
      for (size_t j = t; j < m.cols; ++j) {
        int64_t v = m.at(i, j);
        if (v == 0) continue;
        uint64_t av = v < 0 ? -static_cast<uint64_t>(v) : static_cast<uint64_t>(v);
        if (best == 0 || av < best) {
          best = av;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) break;
    swap_rows(m, t, bi);
    swap_cols(m, t, bj);
    if (m.at(t, t) < 0) negate_row(m, t);

    while (true) {
      bool restart = false;
      for (size_t i = t + 1; i < m.rows && !restart; ++i) {
        if (m.at(i, t) == 0) continue;
        int64_t q = m.at(i, t) / m.at(t, t);
        row_axpy(m, i, t, q, t);
        if (m.at(i, t) != 0) {  // remainder became the smaller pivot
          swap_rows(m, t, i);
          if (m.at(t, t) < 0) negate_row(m, t);
          restart = true;
        }
      }
      if (restart) continue;
      for (size_t j = t + 1; j < m.cols && !restart; ++j) {
        if (m.at(t, j) == 0) continue;
        int64_t q = m.at(t, j) / m.at(t, t);
        col_axpy(m, j, t, q, t);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          if (m.at(t, t) < 0) negate_row(m, t);
          restart = true;
        }
      }
      if (restart) continue;
      // row and column t are clear; enforce divisibility of the rest
      int64_t d = m.at(t, t);
      bool fixed = false;
      for (size_t i = t + 1; i < m.rows && !fixed; ++i)
        for (size_t j = t + 1; j < m.cols && !fixed; ++j)
          if (m.at(i, j) % d != 0) {
            for (size_t c = t; c < m.cols; ++c)
              m.at(t, c) = cadd(m.at(t, c), m.at(i, c));
            fixed = true;
          }
      if (!fixed) break;
    }
    out.factors.push_back(m.at(t, t));
    ++t;
  }
  out.rank = out.factors.size();
  return out;
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& x) {
  auto faces = x.faces_by_dim();  // faces[k+1] = k-faces
  const int top = x.dimension();
  std::vector<IntMatrix> out;
  // d_0 always exists: the augmentation row onto the empty face
  for (int k = 0; k <= std::max(top, 0); ++k) {
    const auto& lower = faces[static_cast<size_t>(k)];      // (k-1)-faces
    const auto& upper = static_cast<size_t>(k + 1) < faces.size()
                            ? faces[static_cast<size_t>(k + 1)]
                            : std::vector<uint64_t>{};
    IntMatrix d(lower.size(), upper.size());
    for (size_t c = 0; c < upper.size(); ++c) {
      uint64_t face = upper[c];
      int sign = 1;
      uint64_t m = face;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t sub = face & ~(uint64_t{1} << v);
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        d.at(static_cast<size_t>(it - lower.begin()), c) = sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

AbelianGroupSequence reduced_homology(const SimplicialComplex& x) {
  auto faces = x.faces_by_dim();
  auto mats = boundary_matrices(x);
  const int top = x.dimension();
  // rank and invariant factors of each d_k; degrees are independent
  std::vector<SmithResult> snf(mats.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (size_t k = 0; k < mats.size(); ++k) {
    try {
      snf[k] = smith_normal_form(mats[k]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  AbelianGroupSequence h;
  for (int k = -1; k <= top; ++k) {
    size_t nk = static_cast<size_t>(k + 1) < faces.size()
                    ? faces[static_cast<size_t>(k + 1)].size()
                    : 0;
    size_t rk = k >= 0 && static_cast<size_t>(k) < snf.size()
                    ? snf[static_cast<size_t>(k)].rank
                    : 0;  // d_{-1} = 0
    size_t rk1 = static_cast<size_t>(k + 1) < snf.size()
                     ? snf[static_cast<size_t>(k + 1)].rank
                     : 0;
    AbelianGroup g;
    g.rank = static_cast<int>(static_cast<long long>(nk) -
                              static_cast<long long>(rk) -
                              static_cast<long long>(rk1));
    if (static_cast<size_t>(k + 1) < snf.size())
      for (int64_t d : snf[static_cast<size_t>(k + 1)].factors)
        if (d > 1) g.torsion.push_back(d);
    h.set(k, std::move(g));
  }
  return h;
}

AbelianGroupSequence cohomology_from_homology(const AbelianGroupSequence& h) {
  AbelianGroupSequence out;
  std::vector<int> degrees;
  for (const auto& [k, g] : h.nontrivial()) {
    degrees.push_back(k);
    degrees.push_back(k + 1);
  }
  for (int k : degrees) {
    AbelianGroup g;
    g.rank = h.at(k).rank;
    g.torsion = h.at(k - 1).torsion;
    out.set(k, std::move(g));
  }
  return out;
}

AbelianGroupSequence reduced_cohomology(const SimplicialComplex& x) {
  return cohomology_from_homology(reduced_homology(x));
}

namespace {

// Renormalize a torsion multiset to the divisibility chain d1 | d2 | ...:
// replace non-dividing pairs by (gcd, lcm) until stable. The product is
// invariant and the multiset of prime powers is preserved, so this yields
// the invariant factors.
std::vector<int64_t> invariant_chain(std::vector<int64_t> t) {
  t.erase(std::remove(t.begin(), t.end(), 1), t.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = i + 1; j < t.size(); ++j) {
        if (t[j] % t[i] == 0) continue;
        int64_t g = std::gcd(t[i], t[j]);
        t[j] = cmul(t[i] / g, t[j]);
        t[i] = g;
        changed = true;
      }
    t.erase(std::remove(t.begin(), t.end(), 1), t.end());
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

AbelianGroup tensor_product(const AbelianGroup& g, const AbelianGroup& h) {
  AbelianGroup out;
  out.rank = g.rank * h.rank;
  for (int64_t d : g.torsion)
    for (int r = 0; r < h.rank; ++r) out.torsion.push_back(d);
  for (int64_t e : h.torsion)
    for (int r = 0; r < g.rank; ++r) out.torsion.push_back(e);
  for (int64_t d : g.torsion)
    for (int64_t e : h.torsion) out.torsion.push_back(std::gcd(d, e));
  out.torsion = invariant_chain(std::move(out.torsion));
  return out;
}

AbelianGroup torsion_product(const AbelianGroup& g, const AbelianGroup& h) {
  AbelianGroup out;
  for (int64_t d : g.torsion)
    for (int64_t e : h.torsion) out.torsion.push_back(std::gcd(d, e));
  out.torsion = invariant_chain(std::move(out.torsion));
  return out;
}

AbelianGroupSequence join_homology(const AbelianGroupSequence& x,
                                   const AbelianGroupSequence& y) {
  std::map<int, AbelianGroup> acc;
  auto add = [&](int degree, AbelianGroup g) {
    if (g.trivial()) return;
    AbelianGroup& slot = acc[degree];
    slot.rank += g.rank;
    slot.torsion.insert(slot.torsion.end(), g.torsion.begin(),
                        g.torsion.end());
  };
  for (const auto& [i, gi] : x.nontrivial())
    for (const auto& [j, gj] : y.nontrivial()) {
      add(i + j + 1, tensor_product(gi, gj));
      add(i + j + 2, torsion_product(gi, gj));
    }
  AbelianGroupSequence out;
  for (auto& [degree, g] : acc) {
    g.torsion = invariant_chain(std::move(g.torsion));
    out.set(degree, std::move(g));
  }
  return out;
}

AbelianGroupSequence independence_homology(const Graph& g) {
  AbelianGroupSequence h;
  h.set(-1, AbelianGroup{1, {}});  // independence complex of no vertices
  for (const Graph& comp : connected_components(g))
    h = join_homology(h, reduced_homology(independence_complex(comp)));
  return h;
}

std::optional<std::vector<int>> wedge_profile(const AbelianGroupSequence& h) {
  if (!h.torsion_free()) return std::nullopt;
  std::vector<int> dims;
  for (const auto& [k, g] : h.nontrivial())
    for (int i = 0; i < g.rank; ++i) dims.push_back(k);
  return dims;
}

long long reduced_euler_characteristic(const SimplicialComplex& x) {
  auto faces = x.faces_by_dim();
  long long chi = 0;
  for (size_t k = 0; k < faces.size(); ++k) {
    long long contribution = static_cast<long long>(faces[k].size());
    // index k holds (k-1)-faces
    chi += (k % 2 == 0) ? -contribution : contribution;
  }
  return chi;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (int64_t d : torsion) parts.push_back("Z/" + std::to_string(d));
  return join_strings(parts, " ⊕ ");
}

const AbelianGroup& AbelianGroupSequence::at(int degree) const {
  static const AbelianGroup trivial_group;
  auto it = groups_.find(degree);
  return it == groups_.end() ? trivial_group : it->second;
}

void AbelianGroupSequence::set(int degree, AbelianGroup g) {
  if (g.trivial())
    groups_.erase(degree);
  else
    groups_[degree] = std::move(g);
}

bool AbelianGroupSequence::torsion_free() const {
  for (const auto& [k, g] : groups_)
    if (!g.torsion_free()) return false;
  return true;
}

nlohmann::ordered_json group_to_json(const AbelianGroup& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank;
  j["torsion"] = g.torsion;
  return j;
}

AbelianGroup group_from_json(const nlohmann::json& j) {
  AbelianGroup g;
  g.rank = j.at("rank").get<int>();
  g.torsion = j.at("torsion").get<std::vector<int64_t>>();
  return g;
}

nlohmann::ordered_json sequence_to_json(const AbelianGroupSequence& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, g] : h.nontrivial())
    j[std::to_string(k)] = group_to_json(g);
  return j;
}

AbelianGroupSequence sequence_from_json(const nlohmann::json& j) {
  AbelianGroupSequence h;
  for (auto it = j.begin(); it != j.end(); ++it)
    h.set(std::stoi(it.key()), group_from_json(it.value()));
  return h;
}

}  // namespace khadeq
