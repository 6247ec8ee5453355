#include "heckeclifford.hpp"

#include <bit>
#include <sstream>
#include <tuple>

#include "linalg.hpp"

namespace heckeclifford {

using weylcomb::canonical_word;
using weylcomb::Family;

namespace {

thread_local long fuel = kRewriteFuel;

void burn(long amount = 1) {
  fuel -= amount;
  if (fuel < 0) throw std::runtime_error("rewrite fuel exhausted");
}

void reset_fuel() { fuel = kRewriteFuel; }

int sgn(int x) { return x < 0 ? -1 : 1; }

ParamPoly adapt(const AlgebraDesc& d, const ParamPoly& p) {
  switch (d.mode) {
    case Mode::Symbolic:
      return p;
    case Mode::Graded:
      return p.substitute(ParamPoly(0L), ParamPoly(0L));
    case Mode::Specialized:
      return ParamPoly(p.eval(d.u0, d.v0));
  }
  return p;
}

}  // namespace

ParamPoly AlgebraDesc::param_u() const { return adapt(*this, ParamPoly::u()); }
ParamPoly AlgebraDesc::param_v() const { return adapt(*this, ParamPoly::v()); }

int PBWMono::x_degree() const {
  int d = 0;
  for (int a : alpha) d += a;
  return d;
}

int PBWMono::c_count() const { return std::popcount(eps); }

bool PBWMono::operator<(const PBWMono& o) const {
  int d = x_degree(), e = o.x_degree();
  if (d != e) return d < e;
  if (alpha != o.alpha) return alpha < o.alpha;
  if (eps != o.eps) return eps < o.eps;
  return w.window < o.w.window;
}

std::string PBWMono::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "x" << (i + 1);
    if (alpha[i] > 1) os << "^" << alpha[i];
  }
  if (eps) {
    if (any) os << "*";
    any = true;
    os << "c{";
    bool first = true;
    for (size_t i = 0; i < alpha.size(); ++i)
      if (eps & (1u << i)) {
        if (!first) os << ",";
        first = false;
        os << (i + 1);
      }
    os << "}";
  }
  if (!w.is_identity()) {
    if (any) os << "*";
    any = true;
    os << w.str();
  }
  if (!any) return "1";
  return os.str();
}

std::pair<int, uint32_t> clifford_merge(uint32_t e1, uint32_t e2) {
  int sign = 1;
  uint32_t cur = e1;
  while (e2) {
    uint32_t low = e2 & (~e2 + 1);  // lowest set bit
    e2 ^= low;
    int k = std::countr_zero(low);
    uint32_t above = cur >> (k + 1);
    if (std::popcount(above) % 2 == 1) sign = -sign;
    cur ^= low;  // cancels if present (c_k^2 = 1), inserts otherwise
  }
  return {sign, cur};
}

PBWElement PBWElement::one(const AlgebraDesc& d) {
  PBWElement e(d);
  e.add_term(PBWMono(d.type), ParamPoly(1L));
  return e;
}

PBWElement PBWElement::monomial(const AlgebraDesc& d, const PBWMono& m,
                                const ParamPoly& c) {
  PBWElement e(d);
  e.add_term(m, c);
  return e;
}

PBWElement PBWElement::generator(const AlgebraDesc& d, char kind, int i) {
  int n = d.type.n;
  PBWMono m(d.type);
  switch (kind) {
    case 'x':
      if (i < 1 || i > n) throw std::out_of_range("x index");
      m.alpha[i - 1] = 1;
      break;
    case 'c':
      if (i < 1 || i > n) throw std::out_of_range("c index");
      m.eps = 1u << (i - 1);
      break;
    case 's':
      m.w = SignedPerm::simple_reflection(d.type, i);
      break;
    default:
      throw std::invalid_argument("generator kind");
  }
  return monomial(d, m);
}

void PBWElement::add_term(const PBWMono& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PBWElement PBWElement::operator-() const {
  PBWElement r(desc_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PBWElement PBWElement::scaled(const ParamPoly& c) const {
  PBWElement r(desc_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

Parity PBWElement::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (m.parity_odd() ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

int PBWElement::x_degree() const {
  if (terms_.empty()) throw std::domain_error("x_degree of zero element");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

PBWElement PBWElement::graded_specialize() const {
  AlgebraDesc d(desc_.type, Mode::Graded);
  PBWElement r(d);
  for (const auto& [m, c] : terms_) r.add_term(m, adapt(d, c));
  return r;
}

PBWElement PBWElement::specialize(const Cyc8& u0, const Cyc8& v0) const {
  AlgebraDesc d(desc_.type, Mode::Specialized, u0, v0);
  PBWElement r(d);
  for (const auto& [m, c] : terms_) r.add_term(m, adapt(d, c));
  return r;
}

std::string PBWElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << m.str();
  }
  return os.str();
}

namespace {

// one summand of a swap rule  s_i x_j = sum coef * x_k^{0/1} c^mu s_i^{0/1}
struct RuleTerm {
  ParamPoly coef;
  int xk = 0;  // 0 = no x factor
  uint32_t mu = 0;
  bool has_s = false;
};

std::vector<RuleTerm> swap_rule(const WeylType& t, int i, int j) {
  using exactnum::Cyc8;
  ParamPoly u = ParamPoly::u();
  std::vector<RuleTerm> out;
  int n = t.n;
  uint32_t pair_mask = 0;
  bool special = (i == t.rank()) && t.family != Family::A;
  if (!special) {
    pair_mask = (1u << (i - 1)) | (1u << i);
    if (j == i) {
      out.push_back({ParamPoly(1L), i + 1, 0, true});
      out.push_back({-u, 0, 0, false});
      out.push_back({-u, 0, pair_mask, false});  // u c_{i+1}c_i = -u c_i c_{i+1}
    } else if (j == i + 1) {
      out.push_back({ParamPoly(1L), i, 0, true});
      out.push_back({u, 0, 0, false});
      out.push_back({-u, 0, pair_mask, false});
    } else {
      out.push_back({ParamPoly(1L), j, 0, true});
    }
  } else if (t.family == Family::B) {
    if (j == n) {
      out.push_back({ParamPoly(-1L), n, 0, true});
      ParamPoly sv;
      sv.set(0, 1, Cyc8::sqrt2());
      out.push_back({-sv, 0, 0, false});  // -sqrt(2) v
    } else {
      out.push_back({ParamPoly(1L), j, 0, true});
    }
  } else {  // D special node
    pair_mask = (1u << (n - 2)) | (1u << (n - 1));
    if (j == n) {
      out.push_back({ParamPoly(-1L), n - 1, 0, true});
      out.push_back({-u, 0, 0, false});
      out.push_back({-u, 0, pair_mask, false});  // -u c_{n-1}c_n
    } else if (j == n - 1) {
      out.push_back({ParamPoly(-1L), n, 0, true});
      out.push_back({-u, 0, 0, false});
      out.push_back({u, 0, pair_mask, false});  // +u c_{n-1}c_n
    } else {
      out.push_back({ParamPoly(1L), j, 0, true});
    }
  }
  return out;
}

using TermList = std::vector<std::pair<PBWMono, ParamPoly>>;

void accumulate(std::map<PBWMono, ParamPoly>& acc, const PBWMono& m,
                const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// mono * c_d, pushing c_d left through w
std::pair<PBWMono, int> mono_rmul_c(const PBWMono& m, int d) {
  int s = sgn(m.w.window[d - 1]);
  int img = std::abs(m.w.window[d - 1]);
  auto [ms, eps] = clifford_merge(m.eps, 1u << (img - 1));
  PBWMono r = m;
  r.eps = eps;
  return {r, s * ms};
}

// symbolic PBW normal form of w * x_j, memoized
const TermList& word_x(const WeylType& t, const SignedPerm& w, int j) {
  static std::map<std::tuple<int, int, std::vector<int>, int>, TermList> cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, w.window, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::map<PBWMono, ParamPoly> acc;
  if (w.is_identity()) {
    PBWMono m(t);
    m.alpha[j - 1] = 1;
    acc.emplace(m, ParamPoly(1L));
  } else {
    const auto& word = canonical_word(w);
    int i = word.back();
    SignedPerm si = SignedPerm::simple_reflection(t, i);
    SignedPerm wp = w.compose(si);  // w = wp * s_i, reduced
    for (const RuleTerm& rt : swap_rule(t, i, j)) {
      burn();
      TermList base;
      if (rt.xk) {
        base = word_x(t, wp, rt.xk);
      } else {
        base = {{PBWMono(std::vector<int>(t.n, 0), 0, wp), ParamPoly(1L)}};
      }
      for (auto [m, c] : base) {
        int total = 1;
        for (int d = 1; d <= t.n; ++d) {
          if (!(rt.mu & (1u << (d - 1)))) continue;
          auto [m2, s] = mono_rmul_c(m, d);
          m = m2;
          total *= s;
        }
        if (rt.has_s) m.w = m.w.compose(si);
        accumulate(acc, m, c * rt.coef * ParamPoly(static_cast<long>(total)));
      }
    }
  }
  TermList out(acc.begin(), acc.end());
  return cache[key] = std::move(out);
}

// element-level right multiplications on raw term maps
void raw_rmul_x(const AlgebraDesc& d, std::map<PBWMono, ParamPoly>& terms, int j) {
  std::map<PBWMono, ParamPoly> out;
  for (const auto& [m, co] : terms) {
    for (const auto& [mt, ct] : word_x(d.type, m.w, j)) {
      burn();
      ParamPoly cc = co * adapt(d, ct);
      if (cc.is_zero()) continue;
      // x^alpha c^eps * (x^at c^et wt)
      int sign = 1;
      for (int k = 0; k < d.type.n; ++k)
        if (mt.alpha[k] % 2 == 1 && (m.eps & (1u << k))) sign = -sign;
      auto [ms, eps] = clifford_merge(m.eps, mt.eps);
      std::vector<int> alpha = m.alpha;
      for (int k = 0; k < d.type.n; ++k) alpha[k] += mt.alpha[k];
      PBWMono r(std::move(alpha), eps, mt.w);
      accumulate(out, r, cc.is_zero() ? cc : (sign * ms == 1 ? cc : -cc));
    }
  }
  terms = std::move(out);
}

void raw_rmul_c(std::map<PBWMono, ParamPoly>& terms, int j) {
  std::map<PBWMono, ParamPoly> out;
  for (const auto& [m, co] : terms) {
    burn();
    auto [r, s] = mono_rmul_c(m, j);
    accumulate(out, r, s == 1 ? co : -co);
  }
  terms = std::move(out);
}

void raw_rmul_s(const AlgebraDesc& d, std::map<PBWMono, ParamPoly>& terms, int i) {
  SignedPerm si = SignedPerm::simple_reflection(d.type, i);
  std::map<PBWMono, ParamPoly> out;
  for (const auto& [m, co] : terms) {
    burn();
    PBWMono r = m;
    r.w = m.w.compose(si);
    accumulate(out, r, co);
  }
  terms = std::move(out);
}

std::map<PBWMono, ParamPoly> mono_product(const AlgebraDesc& d,
                                          std::map<PBWMono, ParamPoly> cur,
                                          const PBWMono& m2) {
  for (int j = 1; j <= d.type.n; ++j)
    for (int r = 0; r < m2.alpha[j - 1]; ++r) raw_rmul_x(d, cur, j);
  for (int j = 1; j <= d.type.n; ++j)
    if (m2.eps & (1u << (j - 1))) raw_rmul_c(cur, j);
  for (int i : canonical_word(m2.w)) raw_rmul_s(d, cur, i);
  return cur;
}

}  // namespace

PBWElement multiply(const PBWElement& a, const PBWElement& b) {
  if (!(a.desc() == b.desc())) throw std::invalid_argument("algebra mismatch");
  reset_fuel();
  PBWElement result(a.desc());
  std::map<PBWMono, ParamPoly> base(a.terms().begin(), a.terms().end());
  for (const auto& [m2, co2] : b.terms()) {
    auto cur = mono_product(a.desc(), base, m2);
    for (const auto& [m, c] : cur) result.add_term(m, c * co2);
  }
  return result;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) {
  return multiply(a, b) - multiply(b, a);
}

PBWElement rmul_x(const PBWElement& a, int j) {
  reset_fuel();
  std::map<PBWMono, ParamPoly> t(a.terms().begin(), a.terms().end());
  raw_rmul_x(a.desc(), t, j);
  PBWElement r(a.desc());
  for (const auto& [m, c] : t) r.add_term(m, c);
  return r;
}

PBWElement rmul_c(const PBWElement& a, int j) {
  reset_fuel();
  std::map<PBWMono, ParamPoly> t(a.terms().begin(), a.terms().end());
  raw_rmul_c(t, j);
  PBWElement r(a.desc());
  for (const auto& [m, c] : t) r.add_term(m, c);
  return r;
}

PBWElement rmul_s(const PBWElement& a, int i) {
  reset_fuel();
  std::map<PBWMono, ParamPoly> t(a.terms().begin(), a.terms().end());
  raw_rmul_s(a.desc(), t, i);
  PBWElement r(a.desc());
  for (const auto& [m, c] : t) r.add_term(m, c);
  return r;
}

std::pair<int, PBWMono> graded_mono_mul(const PBWMono& a, const PBWMono& b) {
  const WeylType& t = a.w.type;
  int n = t.n;
  int sign = 1;
  // move x^beta through a.w:  w x_j = sgn(w(j)) x_{|w(j)|} w
  std::vector<int> beta(n, 0);
  for (int j = 1; j <= n; ++j) {
    if (b.alpha[j - 1] == 0) continue;
    int img = a.w.window[j - 1];
    beta[std::abs(img) - 1] += b.alpha[j - 1];
    if (img < 0 && b.alpha[j - 1] % 2 == 1) sign = -sign;
  }
  // move x^beta left past c^eps_a: x_k c_k = -c_k x_k
  for (int k = 0; k < n; ++k)
    if (beta[k] % 2 == 1 && (a.eps & (1u << k))) sign = -sign;
  // move c^delta through a.w, then sort
  uint32_t delta_img = 0;
  for (int d = 1; d <= n; ++d) {
    if (!(b.eps & (1u << (d - 1)))) continue;
    int img = a.w.window[d - 1];
    if (img < 0) sign = -sign;
    auto [s, merged] = clifford_merge(delta_img, 1u << (std::abs(img) - 1));
    sign *= s;
    delta_img = merged;
  }
  auto [s2, eps] = clifford_merge(a.eps, delta_img);
  sign *= s2;
  std::vector<int> alpha = a.alpha;
  for (int k = 0; k < n; ++k) alpha[k] += beta[k];
  return {sign, PBWMono(std::move(alpha), eps, a.w.compose(b.w))};
}

PBWElement elementary_symmetric_squares(const AlgebraDesc& d, int k) {
  int n = d.type.n;
  if (k < 1 || k > n) throw std::out_of_range("elementary symmetric index");
  PBWElement e(d);
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      PBWMono m(d.type);
      for (int i : idx) m.alpha[i] = 2;
      e.add_term(m, ParamPoly(1L));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return e;
}

bool center_witness_check(const AlgebraDesc& d, int k) {
  PBWElement ek = elementary_symmetric_squares(d, k);
  int n = d.type.n;
  for (int i = 1; i <= n; ++i) {
    if (!commutator(ek, PBWElement::generator(d, 'x', i)).is_zero()) return false;
    if (!commutator(ek, PBWElement::generator(d, 'c', i)).is_zero()) return false;
  }
  for (int i = 1; i <= d.type.rank(); ++i)
    if (!commutator(ek, PBWElement::generator(d, 's', i)).is_zero()) return false;
  return true;
}

}  // namespace heckeclifford
