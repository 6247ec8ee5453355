#include "spinhecke.hpp"

#include <sstream>
#include <tuple>

namespace spinhecke {

using heckeclifford::PBWMono;
using weylcomb::canonical_word;
using weylcomb::Family;
using weylcomb::length;

namespace {

AlgebraDesc embed_desc(const WeylType& t) { return AlgebraDesc(t, Mode::Graded); }

using WinKey = std::tuple<int, int, std::vector<int>>;

WinKey win_key(const WeylType& t, const std::vector<int>& w) {
  return {static_cast<int>(t.family), t.n, w};
}

}  // namespace

PBWElement beta(const AlgebraDesc& d, int i) {
  const WeylType& t = d.type;
  if (i < 1 || i > t.rank()) throw std::out_of_range("beta index");
  auto C = [&](int k) { return PBWElement::generator(d, 'c', k); };
  ParamPoly inv_sqrt2(Cyc8::sqrt2().inverse());
  if (i < t.n) return (C(i) - C(i + 1)).scaled(inv_sqrt2);
  if (t.family == Family::B) return C(t.n);
  return (C(t.n - 1) + C(t.n)).scaled(inv_sqrt2);  // type D special node
}

PBWElement embed_t(const AlgebraDesc& d, int i) {
  return heckeclifford::multiply(
      beta(d, i), PBWElement::generator(d, 's', i)).scaled(ParamPoly(Cyc8::i()));
}

const PBWElement& embed_t_word(const WeylType& t, const SignedPerm& w) {
  static std::map<WinKey, PBWElement> cache;
  auto key = win_key(t, w.window);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgebraDesc d = embed_desc(t);
  PBWElement e = PBWElement::one(d);
  for (int i : canonical_word(w)) e = heckeclifford::multiply(e, embed_t(d, i));
  return cache.emplace(key, std::move(e)).first->second;
}

int cocycle(const WeylType& t, const SignedPerm& a, const SignedPerm& b) {
  static std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int>
      cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, a.window, b.window);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const PBWElement& ea = embed_t_word(t, a);
  const PBWElement& eb = embed_t_word(t, b);
  const PBWElement& eab = embed_t_word(t, a.compose(b));
  PBWElement prod = heckeclifford::multiply(ea, eb);
  if (eab.is_zero() || prod.is_zero())
    throw std::logic_error("degenerate spin embedding image");
  const auto& [m0, c0] = *eab.terms().begin();
  auto pit = prod.terms().find(m0);
  if (pit == prod.terms().end())
    throw std::logic_error("cocycle: support mismatch in embedding");
  Cyc8 ratio = pit->second.constant_part() * c0.constant_part().inverse();
  int sign;
  if (ratio == Cyc8(1))
    sign = 1;
  else if (ratio == Cyc8(-1))
    sign = -1;
  else
    throw std::logic_error("cocycle: non-unit ratio in embedding");
  if (!(prod == eab.scaled(ParamPoly(static_cast<long>(sign)))))
    throw std::logic_error("cocycle: embedding images disagree beyond sign");
  return cache[key] = sign;
}

int SpinPBWMono::b_degree() const {
  int d = 0;
  for (int a : alpha) d += a;
  return d;
}

bool SpinPBWMono::parity_odd() const {
  return (b_degree() + length(w)) % 2 == 1;
}

bool SpinPBWMono::operator<(const SpinPBWMono& o) const {
  int d = b_degree(), e = o.b_degree();
  if (d != e) return d < e;
  if (alpha != o.alpha) return alpha < o.alpha;
  return w.window < o.w.window;
}

std::string SpinPBWMono::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "b" << (i + 1);
    if (alpha[i] > 1) os << "^" << alpha[i];
  }
  if (!w.is_identity()) {
    if (any) os << "*";
    any = true;
    os << "t" << w.str();
  }
  if (!any) return "1";
  return os.str();
}

SpinPBWElement SpinPBWElement::one(const AlgebraDesc& d) {
  SpinPBWElement e(d);
  e.add_term(SpinPBWMono(d.type), ParamPoly(1L));
  return e;
}

SpinPBWElement SpinPBWElement::monomial(const AlgebraDesc& d, const SpinPBWMono& m,
                                        const ParamPoly& c) {
  SpinPBWElement e(d);
  e.add_term(m, c);
  return e;
}

SpinPBWElement SpinPBWElement::generator(const AlgebraDesc& d, char kind, int i) {
  SpinPBWMono m(d.type);
  switch (kind) {
    case 'b':
      if (i < 1 || i > d.type.n) throw std::out_of_range("b index");
      m.alpha[i - 1] = 1;
      break;
    case 't':
      m.w = SignedPerm::simple_reflection(d.type, i);
      break;
    default:
      throw std::invalid_argument("spin generator kind");
  }
  return monomial(d, m);
}

void SpinPBWElement::add_term(const SpinPBWMono& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinPBWElement SpinPBWElement::operator+(const SpinPBWElement& o) const {
  SpinPBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SpinPBWElement SpinPBWElement::operator-(const SpinPBWElement& o) const {
  SpinPBWElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SpinPBWElement SpinPBWElement::operator-() const {
  SpinPBWElement r(desc_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SpinPBWElement SpinPBWElement::scaled(const ParamPoly& c) const {
  SpinPBWElement r(desc_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

Parity SpinPBWElement::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (m.parity_odd() ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

int SpinPBWElement::b_degree() const {
  if (terms_.empty()) throw std::domain_error("b_degree of zero element");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.b_degree());
  return d;
}

namespace {

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

SpinPBWElement SpinPBWElement::graded_specialize() const {
  AlgebraDesc d(desc_.type, Mode::Graded);
  SpinPBWElement r(d);
  for (const auto& [m, c] : terms_) r.add_term(m, adapt(d, c));
  return r;
}

SpinPBWElement SpinPBWElement::specialize(const Cyc8& u0) const {
  AlgebraDesc d(desc_.type, Mode::Specialized, u0);
  SpinPBWElement r(d);
  for (const auto& [m, c] : terms_) r.add_term(m, adapt(d, c));
  return r;
}

std::string SpinPBWElement::str() const {
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

int skew_merge_sign(const std::vector<int>& alpha, const std::vector<int>& gamma) {
  long cross = 0;
  for (size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] % 2 == 0) continue;
    for (size_t j = i + 1; j < alpha.size(); ++j) cross += alpha[j];
  }
  return cross % 2 == 0 ? 1 : -1;
}

namespace {

// one summand of  t_i b_j = sum coef * b_k^{0/1} t_i^{0/1}
struct SpinRuleTerm {
  ParamPoly coef;
  int bk = 0;
  bool has_t = false;
};

std::vector<SpinRuleTerm> spin_swap_rule(const WeylType& t, int i, int j) {
  ParamPoly u = ParamPoly::u();
  int n = t.n;
  bool special = (i == t.rank()) && t.family != Family::A;
  std::vector<SpinRuleTerm> out;
  if (!special) {
    if (j == i) {
      out.push_back({ParamPoly(1L), 0, false});
      out.push_back({ParamPoly(-1L), i + 1, true});
    } else if (j == i + 1) {
      out.push_back({ParamPoly(1L), 0, false});
      out.push_back({ParamPoly(-1L), i, true});
    } else {
      out.push_back({ParamPoly(-1L), j, true});
    }
  } else if (t.family == Family::B) {
    if (j == n) {
      out.push_back({u, 0, false});
      out.push_back({ParamPoly(-1L), n, true});
    } else {
      out.push_back({ParamPoly(-1L), j, true});
    }
  } else {  // D special node
    if (j == n) {
      out.push_back({ParamPoly(1L), 0, false});
      out.push_back({ParamPoly(-1L), n - 1, true});
    } else if (j == n - 1) {
      out.push_back({ParamPoly(1L), 0, false});
      out.push_back({ParamPoly(-1L), n, true});
    } else {
      out.push_back({ParamPoly(-1L), j, true});
    }
  }
  return out;
}

using SpinTermList = std::vector<std::pair<SpinPBWMono, ParamPoly>>;

void accumulate(std::map<SpinPBWMono, ParamPoly>& acc, const SpinPBWMono& m,
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

// symbolic PBW normal form of t_w * b_j, memoized
const SpinTermList& word_b(const WeylType& t, const SignedPerm& w, int j) {
  static std::map<std::tuple<int, int, std::vector<int>, int>, SpinTermList> cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, w.window, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::map<SpinPBWMono, ParamPoly> acc;
  if (w.is_identity()) {
    SpinPBWMono m(t);
    m.alpha[j - 1] = 1;
    acc.emplace(m, ParamPoly(1L));
  } else {
    const auto& word = canonical_word(w);
    int i = word.back();
    SignedPerm si = SignedPerm::simple_reflection(t, i);
    SignedPerm wp = w.compose(si);  // w = wp * s_i, reduced
    // t_{wp} t_i = c0 * t_w  =>  t_w = c0 * t_{wp} t_i
    long c0 = cocycle(t, wp, si);
    for (const SpinRuleTerm& rt : spin_swap_rule(t, i, j)) {
      SpinTermList base;
      if (rt.bk) {
        base = word_b(t, wp, rt.bk);
      } else {
        base = {{SpinPBWMono(std::vector<int>(t.n, 0), wp), ParamPoly(1L)}};
      }
      for (auto [m, c] : base) {
        long s = 1;
        if (rt.has_t) {
          s = cocycle(t, m.w, si);
          m.w = m.w.compose(si);
        }
        accumulate(acc, m, c * rt.coef * ParamPoly(c0 * s));
      }
    }
  }
  SpinTermList out(acc.begin(), acc.end());
  return cache[key] = std::move(out);
}

void raw_rmul_b(const AlgebraDesc& d, std::map<SpinPBWMono, ParamPoly>& terms,
                int j) {
  std::map<SpinPBWMono, ParamPoly> out;
  for (const auto& [m, co] : terms) {
    for (const auto& [mt, ct] : word_b(d.type, m.w, j)) {
      // In the associated graded algebra the constant terms of the swap
      // rules (bare 1 as well as u) are lower filtration order and drop.
      if (d.mode == Mode::Graded && mt.b_degree() != 1) continue;
      ParamPoly cc = co * adapt(d, ct);
      if (cc.is_zero()) continue;
      int sign = skew_merge_sign(m.alpha, mt.alpha);
      std::vector<int> alpha = m.alpha;
      for (int k = 0; k < d.type.n; ++k) alpha[k] += mt.alpha[k];
      accumulate(out, SpinPBWMono(std::move(alpha), mt.w),
                 sign == 1 ? cc : -cc);
    }
  }
  terms = std::move(out);
}

void raw_rmul_t(const AlgebraDesc& d, std::map<SpinPBWMono, ParamPoly>& terms,
                int i) {
  SignedPerm si = SignedPerm::simple_reflection(d.type, i);
  std::map<SpinPBWMono, ParamPoly> out;
  for (const auto& [m, co] : terms) {
    int s = cocycle(d.type, m.w, si);
    SpinPBWMono r = m;
    r.w = m.w.compose(si);
    accumulate(out, r, s == 1 ? co : -co);
  }
  terms = std::move(out);
}

}  // namespace

SpinPBWElement spin_multiply(const SpinPBWElement& a, const SpinPBWElement& b) {
  if (!(a.desc() == b.desc())) throw std::invalid_argument("algebra mismatch");
  SpinPBWElement result(a.desc());
  std::map<SpinPBWMono, ParamPoly> base(a.terms().begin(), a.terms().end());
  for (const auto& [m2, co2] : b.terms()) {
    auto cur = base;
    for (int j = 1; j <= a.desc().type.n; ++j)
      for (int r = 0; r < m2.alpha[j - 1]; ++r) raw_rmul_b(a.desc(), cur, j);
    for (int i : canonical_word(m2.w)) raw_rmul_t(a.desc(), cur, i);
    for (const auto& [m, c] : cur) result.add_term(m, c * co2);
  }
  return result;
}

SpinPBWElement spin_commutator(const SpinPBWElement& a, const SpinPBWElement& b) {
  return spin_multiply(a, b) - spin_multiply(b, a);
}

SpinPBWElement spin_rmul_b(const SpinPBWElement& a, int j) {
  std::map<SpinPBWMono, ParamPoly> t(a.terms().begin(), a.terms().end());
  raw_rmul_b(a.desc(), t, j);
  SpinPBWElement r(a.desc());
  for (const auto& [m, c] : t) r.add_term(m, c);
  return r;
}

SpinPBWElement spin_rmul_t(const SpinPBWElement& a, int i) {
  std::map<SpinPBWMono, ParamPoly> t(a.terms().begin(), a.terms().end());
  raw_rmul_t(a.desc(), t, i);
  SpinPBWElement r(a.desc());
  for (const auto& [m, c] : t) r.add_term(m, c);
  return r;
}

std::pair<int, SpinPBWMono> spin_graded_mono_mul(const SpinPBWMono& a,
                                                 const SpinPBWMono& b) {
  const WeylType& t = a.w.type;
  int n = t.n;
  int sign = cocycle(t, a.w, b.w);
  int lw = length(a.w);
  long bdeg = 0;
  for (int x : b.alpha) bdeg += x;
  if (lw % 2 == 1 && bdeg % 2 == 1) sign = -sign;
  // map b^beta through |w| and sort the images
  std::vector<int> beta(n, 0);
  long cross = 0;
  for (int j = 1; j <= n; ++j) {
    if (b.alpha[j - 1] % 2 == 0) {
      beta[std::abs(a.w.window[j - 1]) - 1] += b.alpha[j - 1];
      continue;
    }
    int img = std::abs(a.w.window[j - 1]);
    // count earlier odd letters landing above img
    for (int k = 1; k < j; ++k)
      if (b.alpha[k - 1] % 2 == 1 && std::abs(a.w.window[k - 1]) > img) ++cross;
    beta[img - 1] += b.alpha[j - 1];
  }
  if (cross % 2 == 1) sign = -sign;
  sign *= skew_merge_sign(a.alpha, beta);
  std::vector<int> alpha = a.alpha;
  for (int k = 0; k < n; ++k) alpha[k] += beta[k];
  return {sign, SpinPBWMono(std::move(alpha), a.w.compose(b.w))};
}

}  // namespace spinhecke
