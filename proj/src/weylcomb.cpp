#include "weylcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace weylcomb {

namespace {

using Key = std::tuple<int, int, std::vector<int>>;

Key perm_key(const SignedPerm& w) {
  return {static_cast<int>(w.type.family), w.type.n, w.window};
}

int sgn(int x) { return x < 0 ? -1 : 1; }

}  // namespace

void WeylType::validate() const {
  switch (family) {
    case Family::A:
      if (n < 1) throw std::invalid_argument("type A needs n >= 1");
      break;
    case Family::B:
      if (n < 2) throw std::invalid_argument("type B needs n >= 2");
      break;
    case Family::D:
      if (n < 4) throw std::invalid_argument("type D needs n >= 4");
      break;
  }
}

std::string WeylType::str() const {
  static const char* names[] = {"A", "B", "D"};
  return std::string(names[static_cast<int>(family)]) + std::to_string(n);
}

SignedPerm SignedPerm::identity(const WeylType& t) {
  SignedPerm w{t, std::vector<int>(t.n)};
  std::iota(w.window.begin(), w.window.end(), 1);
  return w;
}

SignedPerm SignedPerm::simple_reflection(const WeylType& t, int i) {
  if (i < 1 || i > t.rank()) throw std::out_of_range("simple reflection index");
  SignedPerm w = identity(t);
  if (i < t.n) {
    std::swap(w.window[i - 1], w.window[i]);
  } else if (t.family == Family::B) {
    w.window[t.n - 1] = -t.n;
  } else {  // D special node: n-1 -> -n, n -> -(n-1)
    w.window[t.n - 2] = -t.n;
    w.window[t.n - 1] = -(t.n - 1);
  }
  return w;
}

int SignedPerm::apply(int i) const {
  if (i > 0) return window[i - 1];
  return -window[-i - 1];
}

SignedPerm SignedPerm::compose(const SignedPerm& b) const {
  if (type != b.type) throw std::invalid_argument("SignedPerm: type mismatch");
  SignedPerm r{type, std::vector<int>(type.n)};
  for (int i = 1; i <= type.n; ++i) r.window[i - 1] = apply(b.window[i - 1]);
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r{type, std::vector<int>(type.n)};
  for (int i = 1; i <= type.n; ++i) {
    int j = window[i - 1];
    r.window[std::abs(j) - 1] = sgn(j) * i;
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= type.n; ++i)
    if (window[i - 1] != i) return false;
  return true;
}

int SignedPerm::neg_count() const {
  int c = 0;
  for (int x : window)
    if (x < 0) ++c;
  return c;
}

void SignedPerm::check_valid() const {
  std::vector<bool> seen(type.n, false);
  for (int x : window) {
    int a = std::abs(x);
    if (a < 1 || a > type.n || seen[a - 1]) throw std::invalid_argument("bad window");
    seen[a - 1] = true;
  }
  if (type.family == Family::A && neg_count() > 0)
    throw std::invalid_argument("type A window must be positive");
  if (type.family == Family::D && neg_count() % 2 != 0)
    throw std::invalid_argument("type D window needs even sign flips");
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < window.size(); ++i) {
    if (i) os << ",";
    os << window[i];
  }
  os << "]";
  return os.str();
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_OP() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::is_EP() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

bool Partition::is_SOP() const {
  if (!is_OP()) return false;
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> Partition::all_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::string ClassLabel::str() const { return lambda.str() + "|" + mu.str(); }

ParabolicSubset::ParabolicSubset(const WeylType& t, std::vector<int> idx)
    : type(t), indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 1 || i > t.rank()) throw std::out_of_range("parabolic index");
}

ParabolicSubset ParabolicSubset::full(const WeylType& t) {
  std::vector<int> idx(t.rank());
  std::iota(idx.begin(), idx.end(), 1);
  return ParabolicSubset(t, idx);
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string convention_str(ConventionFlag c) {
  return c == ConventionFlag::Paper42 ? "paper-4.2" : "length-filter";
}

ConventionFlag convention_from_str(const std::string& s) {
  if (s == "paper-4.2") return ConventionFlag::Paper42;
  if (s == "length-filter") return ConventionFlag::LengthFilter;
  throw std::invalid_argument("unknown convention: " + s);
}

// --- Roots ---

std::vector<int> simple_root(const WeylType& t, int i) {
  std::vector<int> r(t.n, 0);
  if (i < 1 || i > t.rank()) throw std::out_of_range("simple root index");
  if (i < t.n) {
    r[i - 1] = 1;
    r[i] = -1;
  } else if (t.family == Family::B) {
    r[t.n - 1] = 1;  // e_n
  } else {
    r[t.n - 2] = 1;  // e_{n-1} + e_n
    r[t.n - 1] = 1;
  }
  return r;
}

namespace {

const std::set<std::vector<int>>& positive_roots(const WeylType& t) {
  static std::map<std::pair<int, int>, std::set<std::vector<int>>> cache;
  auto key = std::make_pair(static_cast<int>(t.family), t.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::set<std::vector<int>> roots;
  auto vec = [&](int i, int ci, int j, int cj) {
    std::vector<int> r(t.n, 0);
    r[i] = ci;
    if (j >= 0) r[j] = cj;
    return r;
  };
  for (int i = 0; i < t.n; ++i) {
    for (int j = i + 1; j < t.n; ++j) {
      roots.insert(vec(i, 1, j, -1));
      if (t.family != Family::A) roots.insert(vec(i, 1, j, 1));
    }
    if (t.family == Family::B) roots.insert(vec(i, 1, -1, 0));
  }
  return cache[key] = std::move(roots);
}

}  // namespace

std::vector<int> act_on_root(const SignedPerm& w, const std::vector<int>& r) {
  std::vector<int> out(w.type.n, 0);
  for (int i = 1; i <= w.type.n; ++i) {
    if (r[i - 1] == 0) continue;
    int j = w.window[i - 1];
    out[std::abs(j) - 1] += sgn(j) * r[i - 1];
  }
  return out;
}

int length(const SignedPerm& w) {
  const auto& pos = positive_roots(w.type);
  int len = 0;
  for (const auto& r : pos)
    if (!pos.count(act_on_root(w, r))) ++len;
  return len;
}

const std::vector<int>& canonical_word(const SignedPerm& w) {
  static std::map<Key, std::vector<int>> cache;
  auto key = perm_key(w);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<int> word;
  SignedPerm cur = w;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= w.type.rank(); ++i) {
      SignedPerm next = SignedPerm::simple_reflection(w.type, i).compose(cur);
      int nl = length(next);
      if (nl < len) {
        word.push_back(i);
        cur = std::move(next);
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for non-identity element");
  }
  return cache[key] = std::move(word);
}

std::optional<std::vector<int>> map_simple_set(const SignedPerm& w,
                                               const std::vector<int>& J) {
  std::vector<int> out;
  for (int j : J) {
    auto img = act_on_root(w, simple_root(w.type, j));
    bool found = false;
    for (int k = 1; k <= w.type.rank(); ++k) {
      if (img == simple_root(w.type, k)) {
        out.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Enumeration ---

namespace {

std::vector<SignedPerm> closure(const WeylType& t,
                                const std::vector<SignedPerm>& gens, long bound) {
  std::set<std::vector<int>> seen;
  std::vector<SignedPerm> elems{SignedPerm::identity(t)};
  seen.insert(elems[0].window);
  for (size_t k = 0; k < elems.size(); ++k) {
    SignedPerm cur = elems[k];
    for (const auto& g : gens) {
      SignedPerm next = cur.compose(g);
      if (seen.insert(next.window).second) {
        if (static_cast<long>(elems.size()) >= bound)
          throw std::runtime_error("enumeration bound exceeded");
        elems.push_back(std::move(next));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

const std::vector<SignedPerm>& enumerate_group(const WeylType& t, long bound) {
  static std::map<std::pair<int, int>, std::vector<SignedPerm>> cache;
  auto key = std::make_pair(static_cast<int>(t.family), t.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= t.rank(); ++i) gens.push_back(SignedPerm::simple_reflection(t, i));
  return cache[key] = closure(t, gens, bound);
}

std::vector<SignedPerm> enumerate_parabolic(const ParabolicSubset& J, long bound) {
  std::vector<SignedPerm> gens;
  for (int i : J.indices) gens.push_back(SignedPerm::simple_reflection(J.type, i));
  return closure(J.type, gens, bound);
}

// --- Conjugacy classes ---

ClassLabel cycle_type(const SignedPerm& w) {
  int n = w.type.n;
  std::vector<bool> visited(n, false);
  std::vector<int> lambda, mu;
  for (int i = 1; i <= n; ++i) {
    if (visited[i - 1]) continue;
    int len = 0, sign = 1, j = i;
    do {
      visited[j - 1] = true;
      int img = w.window[j - 1];
      sign *= sgn(img);
      j = std::abs(img);
      ++len;
    } while (j != i);
    (sign > 0 ? lambda : mu).push_back(len);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  std::sort(mu.rbegin(), mu.rend());
  return ClassLabel{Partition(lambda), Partition(mu)};
}

SignedPerm class_representative(const WeylType& t, const ClassLabel& label) {
  if (label.lambda.size() + label.mu.size() != t.n)
    throw std::invalid_argument("class label does not fit rank");
  if (t.family == Family::A && !label.mu.empty())
    throw std::invalid_argument("type A label must have empty mu");
  if (t.family == Family::D && label.mu.length() % 2 != 0)
    throw std::invalid_argument("type D label needs an even number of negative cycles");
  SignedPerm w = SignedPerm::identity(t);
  int o = 0;
  auto block = [&](int m, bool negative) {
    for (int k = 1; k < m; ++k) w.window[o + k - 1] = o + k + 1;
    w.window[o + m - 1] = negative ? -(o + 1) : (o + 1);
    o += m;
  };
  for (int m : label.lambda.parts) block(m, false);
  for (int m : label.mu.parts) block(m, true);
  return w;
}

std::vector<SignedPerm> conjugacy_class(const WeylType& t, const ClassLabel& label) {
  static std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>,
                  std::vector<SignedPerm>>
      cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, label.lambda.parts,
                             label.mu.parts);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SignedPerm rep = class_representative(t, label);
  std::set<std::vector<int>> seen{rep.window};
  std::vector<SignedPerm> orbit{rep};
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= t.rank(); ++i) gens.push_back(SignedPerm::simple_reflection(t, i));
  for (size_t k = 0; k < orbit.size(); ++k) {
    SignedPerm cur = orbit[k];
    for (const auto& g : gens) {
      SignedPerm next = g.compose(cur).compose(g.inverse());
      if (seen.insert(next.window).second) orbit.push_back(std::move(next));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return cache[key] = std::move(orbit);
}

std::vector<ClassLabel> all_class_labels(const WeylType& t) {
  std::vector<ClassLabel> out;
  if (t.family == Family::A) {
    for (auto& l : Partition::all_of(t.n)) out.push_back({l, Partition()});
    return out;
  }
  for (int k = 0; k <= t.n; ++k)
    for (auto& l : Partition::all_of(k))
      for (auto& m : Partition::all_of(t.n - k)) {
        if (t.family == Family::D && m.length() % 2 != 0) continue;
        out.push_back({l, m});
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPerm> min_double_coset_reps(const ParabolicSubset& J,
                                              const ParabolicSubset& Jp) {
  const auto& all = enumerate_group(J.type);
  auto wj = enumerate_parabolic(J);
  auto wjp = enumerate_parabolic(Jp);

  std::vector<SignedPerm> sorted = all;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return length(a) < length(b);
  });

  std::set<std::vector<int>> visited;
  std::vector<SignedPerm> reps;
  for (const auto& w : sorted) {
    if (visited.count(w.window)) continue;
    reps.push_back(w);
    for (const auto& a : wj)
      for (const auto& b : wjp) visited.insert(a.compose(w).compose(b).window);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<SignedPerm> normalizer(const ParabolicSubset& J) {
  const auto& all = enumerate_group(J.type);
  auto wj = enumerate_parabolic(J);
  std::set<std::vector<int>> wj_set;
  for (const auto& x : wj) wj_set.insert(x.window);
  std::vector<SignedPerm> out;
  for (const auto& g : all) {
    bool ok = true;
    SignedPerm gi = g.inverse();
    for (int i : J.indices) {
      SignedPerm c = g.compose(SignedPerm::simple_reflection(J.type, i)).compose(gi);
      if (!wj_set.count(c.window)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<SignedPerm> centralizer(const SignedPerm& w) {
  std::vector<SignedPerm> out;
  for (const auto& g : enumerate_group(w.type))
    if (g.compose(w) == w.compose(g)) out.push_back(g);
  return out;
}

bool subsets_equivalent(const ParabolicSubset& J1, const ParabolicSubset& J2) {
  static std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, bool> cache;
  auto key = std::make_tuple(static_cast<int>(J1.type.family), J1.type.n, J1.indices,
                             J2.indices);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool eq = false;
  if (J1.indices.size() == J2.indices.size()) {
    for (const auto& w : enumerate_group(J1.type)) {
      auto img = map_simple_set(w, J1.indices);
      if (img && *img == J2.indices) {
        eq = true;
        break;
      }
    }
  }
  return cache[key] = eq;
}

bool is_elliptic(const WeylType& t, const ClassLabel& label, const ParabolicSubset& J) {
  auto cls = conjugacy_class(t, label);
  std::set<std::vector<int>> cls_set;
  for (const auto& w : cls) cls_set.insert(w.window);

  auto wj = enumerate_parabolic(J);
  bool meets = false;
  for (const auto& w : wj)
    if (cls_set.count(w.window)) {
      meets = true;
      break;
    }
  if (!meets) throw std::invalid_argument("class does not meet W_J");

  // It suffices to check the maximal proper standard parabolics of W_J.
  for (size_t drop = 0; drop < J.indices.size(); ++drop) {
    std::vector<int> sub;
    for (size_t k = 0; k < J.indices.size(); ++k)
      if (k != drop) sub.push_back(J.indices[k]);
    for (const auto& w : enumerate_parabolic(ParabolicSubset(t, sub)))
      if (cls_set.count(w.window)) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::pair<ParabolicSubset, SignedPerm> J_of_class(const WeylType& t,
                                                  const ClassLabel& label) {
  auto cls = conjugacy_class(t, label);
  std::set<std::vector<int>> cls_set;
  for (const auto& w : cls) cls_set.insert(w.window);

  auto meets = [&](const std::vector<int>& idx) {
    for (const auto& w : enumerate_parabolic(ParabolicSubset(t, idx)))
      if (cls_set.count(w.window)) return true;
    return false;
  };

  std::vector<std::vector<int>> candidates;
  size_t min_size = 0;
  for (const auto& idx : all_subsets(t.rank())) {
    if (!candidates.empty() && idx.size() > min_size) break;
    if (meets(idx)) {
      if (candidates.empty()) min_size = idx.size();
      candidates.push_back(idx);
    }
  }
  if (candidates.empty()) throw std::logic_error("class meets no parabolic");

  for (size_t k = 1; k < candidates.size(); ++k)
    if (!subsets_equivalent(ParabolicSubset(t, candidates[0]),
                            ParabolicSubset(t, candidates[k])))
      throw std::runtime_error(
          "ambiguous minimal parabolic for class " + label.str() +
          ": minimal-cardinality subsets are not W-equivalent");

  ParabolicSubset J(t, candidates[0]);
  SignedPerm w_C = SignedPerm::identity(t);
  bool found = false;
  for (const auto& w : enumerate_parabolic(J)) {
    if (cls_set.count(w.window)) {
      w_C = w;  // enumerate_parabolic is sorted, so this is the lex-least
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("lost class intersection");
  return {J, w_C};
}

std::vector<ClassLabel> distinguished_classes(const WeylType& t, ConventionFlag conv) {
  std::vector<ClassLabel> out;
  for (const auto& label : all_class_labels(t)) {
    bool keep = false;
    switch (t.family) {
      case Family::A:
        keep = label.lambda.is_OP();
        break;
      case Family::B:
        keep = label.lambda.is_OP() && label.mu.is_EP() &&
               (conv == ConventionFlag::Paper42 || label.mu.length() % 2 == 0);
        break;
      case Family::D:
        // ell(mu) even is forced by membership in W_D.
        keep = (label.lambda.is_OP() && label.mu.is_EP()) ||
               (t.n % 2 == 0 && label.lambda.empty() && label.mu.is_SOP());
        break;
    }
    if (keep) out.push_back(label);
  }
  return out;
}

// --- SquaresPoly ---

SquaresPoly SquaresPoly::one(int vars) {
  SquaresPoly p(vars);
  p.terms[std::vector<int>(vars, 0)] = 1;
  return p;
}

SquaresPoly SquaresPoly::variable(int vars, int i) {
  SquaresPoly p(vars);
  std::vector<int> mono(vars, 0);
  mono[i - 1] = 1;
  p.terms[mono] = 1;
  return p;
}

void SquaresPoly::add_term(const std::vector<int>& mono, const Rational& c) {
  auto it = terms.find(mono);
  if (it == terms.end()) {
    if (c != 0) terms[mono] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SquaresPoly SquaresPoly::operator+(const SquaresPoly& o) const {
  SquaresPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

SquaresPoly SquaresPoly::operator-(const SquaresPoly& o) const {
  SquaresPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

SquaresPoly SquaresPoly::operator*(const SquaresPoly& o) const {
  SquaresPoly r(n);
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) {
      std::vector<int> m(n);
      for (int i = 0; i < n; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

SquaresPoly SquaresPoly::scaled(const Rational& c) const {
  SquaresPoly r(n);
  if (c == 0) return r;
  for (const auto& [m, co] : terms) r.terms[m] = co * c;
  return r;
}

int SquaresPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

bool SquaresPoly::homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    int md = std::accumulate(m.begin(), m.end(), 0);
    if (d == -1) d = md;
    if (md != d) return false;
  }
  return true;
}

std::string SquaresPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << exactnum::rational_str(c);
    for (int i = 0; i < n; ++i)
      if (m[i] > 0) os << "*y" << (i + 1) << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return os.str();
}

SquaresPoly act(const SignedPerm& w, const SquaresPoly& f) {
  SquaresPoly r(f.n);
  for (const auto& [m, c] : f.terms) {
    std::vector<int> img(f.n, 0);
    for (int i = 1; i <= f.n; ++i) img[std::abs(w.window[i - 1]) - 1] = m[i - 1];
    r.add_term(img, c);
  }
  return r;
}

bool invariant_under(const std::vector<SignedPerm>& gens, const SquaresPoly& f) {
  for (const auto& g : gens)
    if (!(act(g, f) == f)) return false;
  return true;
}

namespace {

bool elliptic_element_in(const SignedPerm& w, const ParabolicSubset& J) {
  // W_J-conjugates of w must avoid every proper standard parabolic of W_J.
  auto wj = enumerate_parabolic(J);
  std::set<std::vector<int>> orbit;
  for (const auto& g : wj) orbit.insert(g.compose(w).compose(g.inverse()).window);
  for (size_t drop = 0; drop < J.indices.size(); ++drop) {
    std::vector<int> sub;
    for (size_t k = 0; k < J.indices.size(); ++k)
      if (k != drop) sub.push_back(J.indices[k]);
    for (const auto& x : enumerate_parabolic(ParabolicSubset(J.type, sub)))
      if (orbit.count(x.window)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::pair<SignedPerm, SquaresPoly>> r_bar(const ParabolicSubset& Jp,
                                                      const ParabolicSubset& J,
                                                      const SignedPerm& w,
                                                      const SquaresPoly& f) {
  if (!elliptic_element_in(w, J))
    throw std::invalid_argument("r_bar: w is not elliptic in W_J");
  std::vector<SignedPerm> ngens = normalizer(J);
  if (!invariant_under(ngens, f))
    throw std::invalid_argument("r_bar: f is not fixed by N_W(W_J)");

  std::vector<std::pair<SignedPerm, SquaresPoly>> out;
  for (const auto& x : min_double_coset_reps(J, Jp)) {
    SignedPerm xi = x.inverse();
    auto img = map_simple_set(xi, J.indices);
    if (!img) continue;
    bool inside = true;
    for (int j : *img)
      if (!Jp.contains(j)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    out.emplace_back(xi.compose(w).compose(x), act(xi, f));
  }
  return out;
}

bool counting_identity_check(const ParabolicSubset& J, const ParabolicSubset& Jp) {
  if (!subsets_equivalent(J, Jp))
    throw std::invalid_argument("counting identity requires W-equivalent subsets");
  long count = 0;
  for (const auto& z : min_double_coset_reps(J, Jp)) {
    auto img = map_simple_set(z.inverse(), J.indices);
    if (img && *img == Jp.indices) ++count;
  }
  long nw = static_cast<long>(normalizer(J).size());
  long wj = static_cast<long>(enumerate_parabolic(J).size());
  return count == nw / wj;
}

}  // namespace weylcomb
