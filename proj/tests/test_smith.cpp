// Integer matrix reduction against hand values and a minor-gcd oracle. The
// oracle computes the product d1*...*dk of invariant factors independently
// as the gcd of all k x k minors, so these tests do not trust the reduction
// they are checking.

#include <numeric>
#include <random>

#include "doctest.h"
#include "khadeq/common.hpp"
#include "khadeq/homology.hpp"
#include "khadeq/jonsson.hpp"
#include "khadeq/simplicial.hpp"

using namespace khadeq;

namespace {

IntMatrix mat(size_t r, size_t c, std::vector<int64_t> entries) {
  IntMatrix m(r, c);
  m.a = std::move(entries);
  return m;
}

// determinant of a k x k submatrix by cofactor expansion; entries stay tiny
int64_t det(const IntMatrix& m, const std::vector<size_t>& rows,
            const std::vector<size_t>& cols) {
  size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  int64_t acc = 0;
  int sign = 1;
  for (size_t j = 0; j < k; ++j) {
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<size_t> sub_cols;
    for (size_t jj = 0; jj < k; ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    acc += sign * m.at(rows[0], cols[j]) * det(m, sub_rows, sub_cols);
    sign = -sign;
  }
  return acc;
}

void combinations(size_t total, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > total) return;
  while (true) {
    out.push_back(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors; 0 when all vanish
int64_t minor_gcd(const IntMatrix& m, size_t k) {
  std::vector<std::vector<size_t>> rsets, csets;
  combinations(m.rows, k, rsets);
  combinations(m.cols, k, csets);
  int64_t g = 0;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) g = std::gcd(g, det(m, rs, cs));
  return g;
}

}  // namespace

TEST_CASE("invariant factors of small hand-reduced matrices") {
  auto r1 = smith_normal_form(mat(2, 2, {1, 2, 3, 4}));
  CHECK(r1.rank == 2);
  CHECK(r1.factors == std::vector<int64_t>{1, 2});

  auto r2 = smith_normal_form(mat(2, 2, {2, 0, 0, 0}));
  CHECK(r2.rank == 1);
  CHECK(r2.factors == std::vector<int64_t>{2});

  auto r3 = smith_normal_form(mat(2, 2, {4, 6, 2, 8}));
  CHECK(r3.rank == 2);
  CHECK(r3.factors == std::vector<int64_t>{2, 10});

  auto r4 = smith_normal_form(mat(3, 2, {0, 0, 0, 0, 0, 0}));
  CHECK(r4.rank == 0);
  CHECK(r4.factors.empty());

  auto r5 = smith_normal_form(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(r5.rank == 3);
  CHECK(r5.factors == std::vector<int64_t>{1, 1, 1});

  // torsion from a non-diagonal presentation: [[2,1],[0,2]] ~ diag(1,4)
  auto r6 = smith_normal_form(mat(2, 2, {2, 1, 0, 2}));
  CHECK(r6.rank == 2);
  CHECK(r6.factors == std::vector<int64_t>{1, 4});
}

TEST_CASE("invariant factor products equal minor gcds on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(dim(rng), dim(rng) + 1);
    for (auto& x : m.a) x = entry(rng);
    auto snf = smith_normal_form(m);
    // rank = largest k with a nonvanishing k x k minor
    size_t rank = 0;
    for (size_t k = 1; k <= std::min(m.rows, m.cols); ++k)
      if (minor_gcd(m, k) != 0) rank = k;
    REQUIRE(snf.rank == rank);
    REQUIRE(snf.factors.size() == rank);
    int64_t prod = 1;
    for (size_t k = 1; k <= rank; ++k) {
      prod *= snf.factors[k - 1];
      CHECK(std::abs(prod) == std::abs(minor_gcd(m, k)));
      if (k > 1) CHECK(snf.factors[k - 1] % snf.factors[k - 2] == 0);
    }
    for (int64_t d : snf.factors) CHECK(d > 0);
  }
}

TEST_CASE("checked arithmetic raises instead of wrapping") {
  int64_t big = int64_t{1} << 62;
  CHECK_THROWS_AS(smith_normal_form(mat(2, 2, {big, 1, 1, big})),
                  OverflowError);
}

TEST_CASE("boundary operators compose to zero") {
  auto square = [](const IntMatrix& a, const IntMatrix& b) {
    REQUIRE(a.cols == b.rows);
    for (size_t i = 0; i < a.rows; ++i)
      for (size_t j = 0; j < b.cols; ++j) {
        int64_t acc = 0;
        for (size_t k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(k, j);
        CHECK(acc == 0);
      }
  };

  auto tetra = SimplicialComplex::from_facets(
      {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
  auto check_complex = [&](const SimplicialComplex& y) {
    auto d = boundary_matrices(y);
    for (size_t k = 0; k + 1 < d.size(); ++k) square(d[k], d[k + 1]);
  };
  check_complex(tetra);
  check_complex(rp2_complex());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nverts(1, 6), pick(0, 5), width(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int nv = nverts(rng);
    std::vector<std::vector<std::string>> facets;
    for (int f = 0; f < 4; ++f) {
      std::vector<std::string> face;
      for (int i = 0; i < width(rng); ++i)
        face.push_back(std::to_string(pick(rng) % nv));
      facets.push_back(face);
    }
    check_complex(SimplicialComplex::from_facets(facets));
  }
}

TEST_CASE("augmentation row maps every vertex to the empty face") {
  auto d = boundary_matrices(
      SimplicialComplex::from_facets({{"a", "b"}, {"c"}}));
  REQUIRE(d.size() >= 1);
  CHECK(d[0].rows == 1);
  CHECK(d[0].cols == 3);
  for (size_t j = 0; j < 3; ++j) CHECK(d[0].at(0, j) == 1);

  auto empty = boundary_matrices(SimplicialComplex::empty_complex());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].rows == 1);
  CHECK(empty[0].cols == 0);
}
