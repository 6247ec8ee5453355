#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocenterlab.hpp"
#include "exactnum.hpp"
#include "heckeclifford.hpp"
#include "spinhecke.hpp"
#include "weylcomb.hpp"

// The superalgebra isomorphism Phi: aHC_X -> C_V (x) saH_X and the cocenter
// transport connecting the two candidate bases.  The generator images follow
// the ansatz Phi(c_i) = c_i(x)1, Phi(x_i) = lambda c_i(x)b_i,
// Phi(s_i) = kappa beta_i(x)t_i; the scalars are solved from the defining
// relations, never assumed.

namespace morita {

using exactnum::Cyc8;
using exactnum::ParamPoly;
using heckeclifford::AlgebraDesc;
using heckeclifford::PBWElement;
using heckeclifford::PBWMono;
using spinhecke::SpinPBWElement;
using spinhecke::SpinPBWMono;
using weylcomb::ConventionFlag;
using weylcomb::SignedPerm;
using weylcomb::WeylType;

// c^mask (x) b^alpha t_w
struct TensorMono {
  uint32_t cmask = 0;
  SpinPBWMono spin;

  TensorMono(const WeylType& t) : cmask(0), spin(t) {}
  TensorMono(uint32_t m, SpinPBWMono s) : cmask(m), spin(std::move(s)) {}

  bool parity_odd() const {
    return (__builtin_popcount(cmask) + (spin.parity_odd() ? 1 : 0)) % 2 == 1;
  }
  bool operator==(const TensorMono& o) const {
    return cmask == o.cmask && spin == o.spin;
  }
  bool operator<(const TensorMono& o) const {
    if (cmask != o.cmask) return cmask < o.cmask;
    return spin < o.spin;
  }
  std::string str() const;
};

class TensorElement {
 public:
  // desc is the spin-side algebra (its mode drives the t/b rewriting)
  explicit TensorElement(const AlgebraDesc& d) : desc_(d) {}

  static TensorElement zero(const AlgebraDesc& d) { return TensorElement(d); }
  static TensorElement one(const AlgebraDesc& d);
  static TensorElement clifford(const AlgebraDesc& d, uint32_t mask);
  static TensorElement monomial(const AlgebraDesc& d, const TensorMono& m,
                                const ParamPoly& c = ParamPoly(1));

  const AlgebraDesc& desc() const { return desc_; }
  const std::map<TensorMono, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorMono& m, const ParamPoly& c);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(const ParamPoly& c) const;
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  AlgebraDesc desc_;
  std::map<TensorMono, ParamPoly> terms_;
};

// super tensor rule: (a(x)b)(a'(x)b') = (-1)^{|b||a'|} aa' (x) bb'
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

struct GeneratorImages {
  AlgebraDesc hc;    // source algebra
  AlgebraDesc spin;  // target spin factor; B-type carries the solved parameter
  Cyc8 kappa;        // shared reflection scalar
  ParamPoly lambda;  // polynomial-generator scalar (ParamPoly in symbolic mode)

  GeneratorImages(const AlgebraDesc& h, const AlgebraDesc& s)
      : hc(h), spin(s) {}

  TensorElement image_c(int i) const;
  TensorElement image_x(int i) const;
  TensorElement image_s(int i) const;
  // image of the Weyl part along the canonical word (memoized)
  const TensorElement& image_w(const SignedPerm& w) const;
};

// Solves kappa from Phi(s_i)^2 = 1, lambda from the s/x swap relation, and
// (type B) the spin-side parameter from the special-node relation; then
// validates every generator-pair product.  Throws on any failure.
GeneratorImages solve_generator_images(const AlgebraDesc& hc);

TensorElement phi(const GeneratorImages& gi, const PBWElement& a);

// Bounded-degree bijectivity: the top b-degree component of Phi(x^a c^e w)
// is supported on the single spin monomial b^a t_w, and for each (a, w) the
// e -> Clifford-part matrix has full rank 2^n.
bool verify_iso(const GeneratorImages& gi, int max_xdeg);

// Checks Phi(candidate) = (Clifford element) (x) (spin candidate) with a
// nonzero scalar per candidate, transporting independence between the bases.
cocenterlab::CocenterReport transport_independence(const WeylType& t, int max_deg,
                                                   ConventionFlag conv);

}  // namespace morita
