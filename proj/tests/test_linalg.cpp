#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "linalg.hpp"

using namespace linalg;
using exactnum::rat;

namespace {

std::mt19937_64 rng(0xC0CE17E5ULL);

SparseRow random_row(int cols, int fill) {
  std::uniform_int_distribution<int> col(0, cols - 1);
  std::uniform_int_distribution<long> num(-5, 5);
  std::map<int, Cyc8> m;
  for (int k = 0; k < fill; ++k) {
    Cyc8 c;
    for (int j = 0; j < 4; ++j) c.coeff(j) = rat(num(rng));
    m[col(rng)] += c;
  }
  SparseRow r;
  for (auto& [j, c] : m)
    if (!c.is_zero()) r.emplace_back(j, c);
  return r;
}

// dense oracle rank over Q(zeta_8)
long dense_rank(std::vector<std::vector<Cyc8>> m) {
  long rank = 0;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Cyc8 inv = m[rank][c].inverse();
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c].is_zero()) continue;
      Cyc8 f = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("row arithmetic") {
  SparseRow a{{0, Cyc8(2)}, {3, Cyc8(1)}};
  SparseRow b{{0, Cyc8(1)}, {2, Cyc8(4)}};
  SparseRow s = row_axpy(a, Cyc8(-2), b);
  CHECK(s == SparseRow{{2, Cyc8(-8)}, {3, Cyc8(1)}});
  CHECK(row_scaled(a, Cyc8()).empty());
  CHECK(row_axpy(a, Cyc8(-1), a).empty());
}

TEST_CASE("echelon rank matches dense oracle (fuzz)") {
  for (int trial = 0; trial < 30; ++trial) {
    int cols = 12, nrows = 10;
    std::vector<SparseRow> sparse;
    std::vector<std::vector<Cyc8>> dense(nrows, std::vector<Cyc8>(cols));
    for (int r = 0; r < nrows; ++r) {
      sparse.push_back(random_row(cols, 4));
      for (auto& [j, c] : sparse.back()) dense[r][j] = c;
    }
    // throw in exact linear combinations to force rank drops
    if (nrows >= 2) {
      sparse.push_back(row_axpy(sparse[0], Cyc8(3), sparse[1]));
      dense.push_back(std::vector<Cyc8>(cols));
      for (auto& [j, c] : sparse.back()) dense.back()[j] = c;
    }
    Echelon e;
    for (auto& r : sparse) e.add_row(r);
    CHECK(e.rank() == dense_rank(dense));
    // membership: every input row reduces to zero
    for (auto& r : sparse) CHECK(e.contains(r));
  }
}

TEST_CASE("echelon reduction is canonical") {
  Echelon e;
  e.add_row({{0, Cyc8(1)}, {1, Cyc8(2)}});
  e.add_row({{1, Cyc8(1)}, {2, Cyc8(5)}});
  // reduce a row two ways; remainder must not contain pivot columns
  SparseRow r{{0, Cyc8(3)}, {2, Cyc8(1)}, {3, Cyc8(7)}};
  SparseRow red = e.reduce(r);
  for (auto& [j, c] : red) CHECK_FALSE(e.has_pivot(j));
  // idempotent
  CHECK(e.reduce(red) == red);
}

TEST_CASE("signed union find basic relations") {
  SignedUnionFind uf(6);
  CHECK(uf.live_classes() == 6);
  uf.relate(0, 1, 1);
  uf.relate(2, 3, -1);
  CHECK(uf.live_classes() == 4);
  auto [r0, s0] = uf.find(0);
  auto [r1, s1] = uf.find(1);
  CHECK(r0 == r1);
  CHECK(s0 == s1);
  auto [r2, s2] = uf.find(2);
  auto [r3, s3] = uf.find(3);
  CHECK(r2 == r3);
  CHECK(s2 == -s3);
}

TEST_CASE("contradictory sign kills a class") {
  SignedUnionFind uf(4);
  uf.relate(0, 1, 1);
  uf.relate(1, 2, -1);
  uf.relate(0, 2, 1);  // forces e = -e on the merged class
  CHECK(uf.dead(0));
  CHECK(uf.dead(1));
  CHECK(uf.dead(2));
  CHECK_FALSE(uf.dead(3));
  CHECK(uf.live_classes() == 1);
  CHECK(uf.live_reps() == std::vector<long>{3});
}

TEST_CASE("union find agrees with echelon quotient (fuzz)") {
  // random relations e_a = s e_b; the quotient dimension must match
  // n - rank of the relation matrix
  for (int trial = 0; trial < 20; ++trial) {
    int n = 15;
    SignedUnionFind uf(n);
    Echelon e;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int k = 0; k < 12; ++k) {
      int a = idx(rng), b = idx(rng);
      int s = sgn(rng) ? 1 : -1;
      if (a == b) {
        if (s == -1) {
          uf.kill(a);
          e.add_row({{a, Cyc8(1)}});
        }
        continue;
      }
      uf.relate(a, b, s);
      SparseRow r{{std::min(a, b), Cyc8(1)},
                  {std::max(a, b), a < b ? Cyc8(-s) : Cyc8(-s)}};
      // r encodes e_a - s e_b with columns sorted
      r = {{a, Cyc8(1)}};
      r = row_axpy(r, Cyc8(-s), {{b, Cyc8(1)}});
      e.add_row(r);
    }
    CHECK(uf.live_classes() == n - e.rank());
  }
}

TEST_CASE("fnv1a is deterministic and order sensitive") {
  Fnv1a a, b, c;
  a.feed(std::string("abc"));
  b.feed(std::string("abc"));
  c.feed(std::string("acb"));
  CHECK(a.digest() == b.digest());
  CHECK(a.digest() != c.digest());
  CHECK(a.hex().size() == 16);
  Fnv1a d;
  d.feed_long(42);
  Fnv1a e;
  e.feed_long(42);
  CHECK(d.digest() == e.digest());
}
