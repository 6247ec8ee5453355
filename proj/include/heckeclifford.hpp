#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactnum.hpp"
#include "weylcomb.hpp"

// The affine Hecke-Clifford algebra aHC_X as a PBW rewriting engine.
// Elements are exact linear combinations of monomials x^alpha c^eps w;
// products are normalized by pushing generators through the blocks with
// the derived swap table.  Normal form order: x-block, c-block, then w.
//
// Termination: each swap either keeps x-degree and strictly shortens the
// Weyl word being traversed, or strictly drops x-degree on the correction
// terms; a fuel counter guards the recursion anyway and throws instead of
// looping if a rule were wrong.

namespace heckeclifford {

using exactnum::Cyc8;
using exactnum::ParamPoly;
using weylcomb::SignedPerm;
using weylcomb::WeylType;

enum class Mode { Symbolic, Graded, Specialized };

struct AlgebraDesc {
  WeylType type;
  Mode mode = Mode::Symbolic;
  Cyc8 u0, v0;  // used in Specialized mode only

  AlgebraDesc(const WeylType& t, Mode m = Mode::Symbolic, Cyc8 u = Cyc8(), Cyc8 v = Cyc8())
      : type(t), mode(m), u0(u), v0(v) {}
  // the parameter values this algebra rewrites with
  ParamPoly param_u() const;
  ParamPoly param_v() const;
  bool operator==(const AlgebraDesc& o) const {
    return type == o.type && mode == o.mode && u0 == o.u0 && v0 == o.v0;
  }
};

// x^alpha c^eps w; eps is a bit mask, bit i-1 for c_i.
struct PBWMono {
  std::vector<int> alpha;
  uint32_t eps = 0;
  SignedPerm w;

  PBWMono(const WeylType& t)
      : alpha(t.n, 0), eps(0), w(SignedPerm::identity(t)) {}
  PBWMono(std::vector<int> a, uint32_t e, SignedPerm ww)
      : alpha(std::move(a)), eps(e), w(std::move(ww)) {}

  int x_degree() const;
  int c_count() const;
  bool parity_odd() const { return c_count() % 2 == 1; }
  bool operator==(const PBWMono& o) const {
    return alpha == o.alpha && eps == o.eps && w == o.w;
  }
  // graded-lex: (total x-degree, alpha, eps, window)
  bool operator<(const PBWMono& o) const;
  std::string str() const;
};

enum class Parity { Even, Odd, Mixed };

class PBWElement {
 public:
  explicit PBWElement(const AlgebraDesc& d) : desc_(d) {}

  static PBWElement zero(const AlgebraDesc& d) { return PBWElement(d); }
  static PBWElement one(const AlgebraDesc& d);
  static PBWElement monomial(const AlgebraDesc& d, const PBWMono& m,
                             const ParamPoly& c = ParamPoly(1));
  // kind in {'x','c','s'}
  static PBWElement generator(const AlgebraDesc& d, char kind, int i);

  const AlgebraDesc& desc() const { return desc_; }
  const std::map<PBWMono, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PBWMono& m, const ParamPoly& c);
  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement scaled(const ParamPoly& c) const;
  bool operator==(const PBWElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  Parity parity() const;
  int x_degree() const;  // throws on zero
  // reinterpret with u = v = 0 (drops all parameter terms)
  PBWElement graded_specialize() const;
  // reinterpret with u = u0, v = v0
  PBWElement specialize(const Cyc8& u0, const Cyc8& v0) const;

  std::string str() const;

 private:
  AlgebraDesc desc_;
  std::map<PBWMono, ParamPoly> terms_;
};

PBWElement multiply(const PBWElement& a, const PBWElement& b);
PBWElement commutator(const PBWElement& a, const PBWElement& b);

// right multiplication by single generators (exposed for tests)
PBWElement rmul_x(const PBWElement& a, int j);
PBWElement rmul_c(const PBWElement& a, int j);
PBWElement rmul_s(const PBWElement& a, int i);

// Merge two sorted Clifford products: returns (sign, xor mask).
std::pair<int, uint32_t> clifford_merge(uint32_t e1, uint32_t e2);

// Product of basis monomials in the graded algebra (u = v = 0), where the
// result is a single signed monomial: w x_j = sgn(w(j)) x_{|w(j)|} w.
std::pair<int, PBWMono> graded_mono_mul(const PBWMono& a, const PBWMono& b);

// true iff the k-th elementary symmetric polynomial in x_1^2..x_n^2
// commutes with every generator of the algebra
bool center_witness_check(const AlgebraDesc& d, int k);
// the element e_k(x_1^2,...,x_n^2)
PBWElement elementary_symmetric_squares(const AlgebraDesc& d, int k);

// fuel guard shared by the rewriting recursion
constexpr long kRewriteFuel = 10000000L;

}  // namespace heckeclifford
