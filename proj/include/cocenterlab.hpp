#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactnum.hpp"
#include "heckeclifford.hpp"
#include "linalg.hpp"
#include "spinhecke.hpp"
#include "weylcomb.hpp"

// Cocenter calculus: reduction of elements modulo commutators (Clifford
// elimination, class vanishing, spin analogues), invariant polynomial bases
// over the fixed subspaces, candidate cocenter bases, and brute-force
// verification of spanning/independence by exact rank.

namespace cocenterlab {

using exactnum::Cyc8;
using exactnum::ParamPoly;
using exactnum::Rational;
using heckeclifford::AlgebraDesc;
using heckeclifford::PBWElement;
using heckeclifford::PBWMono;
using spinhecke::SpinPBWElement;
using spinhecke::SpinPBWMono;
using weylcomb::ClassLabel;
using weylcomb::ConventionFlag;
using weylcomb::ParabolicSubset;
using weylcomb::SignedPerm;
using weylcomb::SquaresPoly;
using weylcomb::WeylType;

// Polynomial in the W_J-fixed subspace of span{x_i^2}, invariant under the
// full normalizer N_W(W_J); stored in the y_i = x_i^2 coordinates.
struct InvariantPoly {
  SquaresPoly poly;
  WeylType type;
  ParabolicSubset J;

  int x_degree() const { return 2 * std::max(poly.degree(), 0); }
};

enum class Verdict { VerifiedSpan, VerifiedDimMatch, ConsistentNoCounterexample, Failed };
std::string verdict_str(Verdict v);

struct DegreeRow {
  int degree = 0;
  long slice_dim = 0;      // even-parity monomials of this degree
  long cocenter_dim = 0;   // dim of (slice / commutators)
  long candidates = 0;     // candidate basis elements of this degree
};

struct CocenterReport {
  WeylType type;
  std::string mode;  // "graded" | "filtered" | "spin-graded"
  int max_deg = 0;
  int slack = 0;
  ConventionFlag convention = ConventionFlag::Paper42;
  std::vector<DegreeRow> rows;
  Verdict verdict = Verdict::Failed;
  std::string independence;  // annotation for the filtered under-approximation
  std::string witness;       // filled on failure
  std::string certificate;   // FNV-1a over the row data

  CocenterReport(const WeylType& t) : type(t) {}
};

// --- Clifford and class reduction ---

// The Weyl element with the given positive/negative cycle blocks laid out
// consecutively: within a block i -> i+1, block end wrapping to +/-start.
SignedPerm composition_element(const WeylType& t, const std::vector<int>& pos_blocks,
                               const std::vector<int>& neg_blocks);

// Reduction of w_gamma c_I in the degree-0 graded cocenter: returns 0 if the
// class vanishes, otherwise the sign with w_gamma c_I = sign * w_gamma.
// I is a sorted subset of {1..n} of even size.
int clifford_reduce(const WeylType& t, const std::vector<int>& pos_blocks,
                    const std::vector<int>& neg_blocks, const std::vector<int>& I);

// nullopt when w vanishes in the cocenter; otherwise its class label.
std::optional<ClassLabel> class_reduce(const SignedPerm& w, ConventionFlag conv);
bool class_survives(const WeylType& t, const ClassLabel& label, ConventionFlag conv);

// t_w reduced in the spin cocenter: nullopt when it vanishes (including all
// odd-length w); otherwise (sign, label) with t_w = sign * t_{w_label}.
std::optional<std::pair<int, ClassLabel>> spin_class_reduce(const SignedPerm& w,
                                                            ConventionFlag conv);

// --- Invariant and candidate bases ---

// Basis, graded by x-degree <= max_xdeg, of the N_W(W_J)-invariants inside
// the W_J-fixed subspace of span{x_i^2}: orbit-sum monomials, Reynolds
// averaging, exact rank reduction; deterministic graded-lex order.
std::vector<InvariantPoly> invariant_basis(const ParabolicSubset& J, int max_xdeg);

// For each distinguished class C: w_C * f over f in invariant_basis(J_C, .).
std::vector<PBWElement> candidate_basis(const AlgebraDesc& d, int max_xdeg,
                                        ConventionFlag conv);
std::vector<SpinPBWElement> spin_candidate_basis(const AlgebraDesc& d, int max_bdeg,
                                                 ConventionFlag conv);

// --- Graded commutator spaces ---

// The even-parity degree-xdeg slice of the graded algebra together with the
// quotient by its commutator subspace.  Commutators of basis monomials have
// at most two nonzero entries (+-1), so a signed union-find captures the
// whole space exactly.
struct GradedSlice {
  std::vector<PBWMono> monos;
  std::map<PBWMono, long> index;
  linalg::SignedUnionFind uf;

  GradedSlice(long size) : uf(size) {}
};

struct SpinGradedSlice {
  std::vector<SpinPBWMono> monos;
  std::map<SpinPBWMono, long> index;
  linalg::SignedUnionFind uf;

  SpinGradedSlice(long size) : uf(size) {}
};

GradedSlice graded_commutator_space(const WeylType& t, int xdeg);
SpinGradedSlice spin_graded_commutator_space(const WeylType& t, int bdeg);

std::vector<long> graded_cocenter_dims(const WeylType& t, int max_xdeg);

// --- Verification ---

CocenterReport verify_graded_basis(const WeylType& t, int max_xdeg, ConventionFlag conv);
CocenterReport verify_spin_graded_basis(const WeylType& t, int max_bdeg,
                                        ConventionFlag conv);

// Filtered check at specialized parameters: proves spanning of the even part
// up to max_xdeg using commutators of monomial pairs of total degree up to
// max_xdeg + slack; independence is only checked against that
// under-approximated commutator space.
CocenterReport verify_filtered(const WeylType& t, int max_xdeg, int slack,
                               const Rational& u0, const Rational& v0,
                               ConventionFlag conv);

// Runs verify_graded_basis under both conventions; returns the convention
// that passes, or nullopt when zero or both pass (unique=false then).
std::optional<ConventionFlag> resolve_convention_graded(const WeylType& t, int max_deg);

}  // namespace cocenterlab
