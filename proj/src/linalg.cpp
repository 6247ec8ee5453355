#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace linalg {

SparseRow row_scaled(const SparseRow& r, const Cyc8& c) {
  SparseRow out;
  if (c.is_zero()) return out;
  out.reserve(r.size());
  for (const auto& [j, x] : r) {
    Cyc8 p = x * c;
    if (!p.is_zero()) out.emplace_back(j, p);
  }
  return out;
}

SparseRow row_axpy(const SparseRow& a, const Cyc8& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Cyc8 p = b[j].second * c;
      if (!p.is_zero()) out.emplace_back(b[j].first, p);
      ++j;
    } else {
      Cyc8 s = a[i].second + b[j].second * c;
      if (!s.is_zero()) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow Echelon::reduce(SparseRow r) const {
  while (!r.empty()) {
    int lead = r.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) break;
    size_t k = static_cast<size_t>(it - pivots_.begin());
    r = row_axpy(r, -r.front().second, rows_[k]);
  }
  // reduce the tail too, for canonical remainders
  if (!r.empty()) {
    for (size_t pos = 1; pos < r.size();) {
      int col = r[pos].first;
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
      if (it == pivots_.end() || *it != col) {
        ++pos;
        continue;
      }
      size_t k = static_cast<size_t>(it - pivots_.begin());
      r = row_axpy(r, -r[pos].second, rows_[k]);
    }
  }
  return r;
}

bool Echelon::add_row(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  Cyc8 inv = r.front().second.inverse();
  r = row_scaled(r, inv);
  int lead = r.front().first;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  size_t k = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + k, std::move(r));
  return true;
}

bool Echelon::has_pivot(int col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

std::vector<int> Echelon::pivot_columns() const { return pivots_; }

SignedUnionFind::SignedUnionFind(long n)
    : parent_(n), sign_(n, 1), dead_(n, 0), n_(n) {
  for (long i = 0; i < n; ++i) parent_[i] = i;
}

std::pair<long, int> SignedUnionFind::find(long i) {
  long root = i;
  int s = 1;
  while (parent_[root] != root) {
    s *= sign_[root];
    root = parent_[root];
  }
  // path compression with sign accumulation
  long cur = i;
  int cs = s;
  while (parent_[cur] != cur) {
    long next = parent_[cur];
    int ns = sign_[cur];
    parent_[cur] = root;
    sign_[cur] = static_cast<int8_t>(cs);
    cur = next;
    cs /= ns;  // signs are +-1
  }
  return {root, s};
}

void SignedUnionFind::relate(long a, long b, int s) {
  auto [ra, sa] = find(a);
  auto [rb, sb] = find(b);
  // e_a = sa e_ra, e_b = sb e_rb, want e_a = s e_b
  if (ra == rb) {
    if (sa != s * sb) dead_[ra] = 1;
    return;
  }
  // e_ra = (s * sb / sa) e_rb
  parent_[ra] = rb;
  sign_[ra] = static_cast<int8_t>(s * sb * sa);  // sa == 1/sa
  if (dead_[ra]) dead_[rb] = 1;
}

void SignedUnionFind::kill(long a) { dead_[find(a).first] = 1; }

bool SignedUnionFind::dead(long i) { return dead_[find(i).first]; }

long SignedUnionFind::live_classes() {
  long c = 0;
  for (long i = 0; i < n_; ++i)
    if (parent_[i] == i && !dead_[i]) ++c;
  return c;
}

std::vector<long> SignedUnionFind::live_reps() {
  std::vector<long> out;
  for (long i = 0; i < n_; ++i)
    if (parent_[i] == i && !dead_[i]) out.push_back(i);
  return out;
}

void Fnv1a::feed(const void* data, size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
}

void Fnv1a::feed_long(long v) {
  for (int b = 0; b < 8; ++b) {
    unsigned char byte = static_cast<unsigned char>((static_cast<uint64_t>(v) >> (8 * b)) & 0xff);
    feed(&byte, 1);
  }
}

std::string Fnv1a::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 0; i < 16; ++i) s[15 - i] = digits[(h_ >> (4 * i)) & 0xf];
  return s;
}

}  // namespace linalg
