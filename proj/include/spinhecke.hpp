#pragma once

#include <map>
#include <string>
#include <vector>

#include "exactnum.hpp"
#include "heckeclifford.hpp"
#include "weylcomb.hpp"

// The spin Weyl group algebra CW^- and the degenerate spin affine Hecke
// algebra saH_X over monomials b^alpha t_w.  Basis elements t_w are taken
// along the lexicographically least reduced word of w; the resulting sign
// cocycle t_a t_b = sign(a,b) t_{ab} is computed through the faithful
// embedding t_i -> i * beta_i * s_i into the degree-0 Hecke-Clifford
// algebra (beta_i from the reflection table), which satisfies the same
// presentation; signs are therefore consistent by construction.

namespace spinhecke {

using exactnum::Cyc8;
using exactnum::ParamPoly;
using heckeclifford::AlgebraDesc;
using heckeclifford::Mode;
using heckeclifford::Parity;
using heckeclifford::PBWElement;
using weylcomb::SignedPerm;
using weylcomb::WeylType;

// beta_i as a degree-0 Hecke-Clifford element (no Weyl part)
PBWElement beta(const AlgebraDesc& d, int i);
// the embedding image  i * beta_i * s_i
PBWElement embed_t(const AlgebraDesc& d, int i);
// image of t_w along its canonical word (memoized)
const PBWElement& embed_t_word(const WeylType& t, const SignedPerm& w);

// t_a * t_b = sign * t_{ab}
int cocycle(const WeylType& t, const SignedPerm& a, const SignedPerm& b);

struct SpinPBWMono {
  std::vector<int> alpha;  // b-exponents
  SignedPerm w;

  SpinPBWMono(const WeylType& t)
      : alpha(t.n, 0), w(SignedPerm::identity(t)) {}
  SpinPBWMono(std::vector<int> a, SignedPerm ww)
      : alpha(std::move(a)), w(std::move(ww)) {}

  int b_degree() const;
  bool parity_odd() const;  // (sum alpha + l(w)) mod 2
  bool operator==(const SpinPBWMono& o) const {
    return alpha == o.alpha && w == o.w;
  }
  bool operator<(const SpinPBWMono& o) const;
  std::string str() const;
};

class SpinPBWElement {
 public:
  explicit SpinPBWElement(const AlgebraDesc& d) : desc_(d) {}

  static SpinPBWElement zero(const AlgebraDesc& d) { return SpinPBWElement(d); }
  static SpinPBWElement one(const AlgebraDesc& d);
  static SpinPBWElement monomial(const AlgebraDesc& d, const SpinPBWMono& m,
                                 const ParamPoly& c = ParamPoly(1));
  // kind in {'b','t'}
  static SpinPBWElement generator(const AlgebraDesc& d, char kind, int i);

  const AlgebraDesc& desc() const { return desc_; }
  const std::map<SpinPBWMono, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SpinPBWMono& m, const ParamPoly& c);
  SpinPBWElement operator+(const SpinPBWElement& o) const;
  SpinPBWElement operator-(const SpinPBWElement& o) const;
  SpinPBWElement operator-() const;
  SpinPBWElement scaled(const ParamPoly& c) const;
  bool operator==(const SpinPBWElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const SpinPBWElement& o) const { return !(*this == o); }

  Parity parity() const;
  int b_degree() const;  // throws on zero
  SpinPBWElement graded_specialize() const;
  SpinPBWElement specialize(const Cyc8& u0) const;

  std::string str() const;

 private:
  AlgebraDesc desc_;
  std::map<SpinPBWMono, ParamPoly> terms_;
};

SpinPBWElement spin_multiply(const SpinPBWElement& a, const SpinPBWElement& b);
SpinPBWElement spin_commutator(const SpinPBWElement& a, const SpinPBWElement& b);

SpinPBWElement spin_rmul_b(const SpinPBWElement& a, int j);
SpinPBWElement spin_rmul_t(const SpinPBWElement& a, int i);

// merge sign for b^alpha * b^gamma  ->  b^{alpha+gamma}
int skew_merge_sign(const std::vector<int>& alpha, const std::vector<int>& gamma);

// Product of basis monomials in the graded spin algebra (u = 0): the result
// is a single signed monomial  t_w b_j = (-1)^{l(w)} b_{|w(j)|} t_w.
std::pair<int, SpinPBWMono> spin_graded_mono_mul(const SpinPBWMono& a,
                                                 const SpinPBWMono& b);

}  // namespace spinhecke
