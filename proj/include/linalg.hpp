#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactnum.hpp"

// Exact linear algebra over Q(zeta_8): a streaming row-echelon accumulator
// for sparse rows, and a signed union-find for quotients by relations of
// the form  basis[a] = sign * basis[b]  (with  m = -m  killing a class).

namespace linalg {

using exactnum::Cyc8;

// Sparse row: strictly increasing column indices with nonzero entries.
using SparseRow = std::vector<std::pair<int, Cyc8>>;

SparseRow row_scaled(const SparseRow& r, const Cyc8& c);
SparseRow row_axpy(const SparseRow& a, const Cyc8& c, const SparseRow& b);  // a + c*b

// Incremental echelon basis.  Rows are kept with leading coefficient 1,
// indexed by pivot column.
class Echelon {
 public:
  // Reduces r against the basis; returns the fully reduced remainder.
  SparseRow reduce(SparseRow r) const;
  // Reduces and, if nonzero, inserts; returns true if the rank grew.
  bool add_row(SparseRow r);
  bool contains(const SparseRow& r) const { return reduce(r).empty(); }

  long rank() const { return static_cast<long>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  bool has_pivot(int col) const;
  std::vector<int> pivot_columns() const;

 private:
  std::vector<SparseRow> rows_;        // sorted by pivot column
  std::vector<int> pivots_;            // pivot column of rows_[k]
};

// Union-find over {0..n-1} with a sign on each edge; maintains the quotient
// of a free module by relations  e_a = s * e_b  and  e_a = -e_a  (dead).
class SignedUnionFind {
 public:
  explicit SignedUnionFind(long n);

  // find(i) -> (root, sign) with e_i = sign * e_root in the quotient.
  std::pair<long, int> find(long i);
  // impose e_a = s * e_b; kills the class if it forces e = -e.
  void relate(long a, long b, int s);
  void kill(long a);  // impose e_a = 0

  bool dead(long i);
  long live_classes();
  // representative live indices, sorted
  std::vector<long> live_reps();

 private:
  std::vector<long> parent_;
  std::vector<int8_t> sign_;   // sign relative to parent
  std::vector<int8_t> dead_;   // set on roots
  long n_;
};

// Deterministic FNV-1a over a byte stream, for certificates.
class Fnv1a {
 public:
  void feed(const void* data, size_t len);
  void feed(const std::string& s) { feed(s.data(), s.size()); }
  void feed_long(long v);
  uint64_t digest() const { return h_; }
  std::string hex() const;

 private:
  uint64_t h_ = 1469598103934665603ULL;
};

}  // namespace linalg
