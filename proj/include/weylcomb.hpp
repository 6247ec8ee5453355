#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactnum.hpp"

// Classical Weyl groups as signed permutations, their conjugacy-class
// combinatorics, parabolic subgroups, coset representatives, and the
// J_C / w_C selection used by the cocenter verification.

namespace weylcomb {

using exactnum::Rational;

enum class Family { A, B, D };

struct WeylType {
  Family family;
  int n;  // number of letters; A uses S_n (type A_{n-1})

  WeylType(Family f, int letters) : family(f), n(letters) { validate(); }
  void validate() const;
  int rank() const { return family == Family::A ? n - 1 : n; }
  bool operator==(const WeylType& o) const { return family == o.family && n == o.n; }
  bool operator!=(const WeylType& o) const { return !(*this == o); }
  bool operator<(const WeylType& o) const {
    if (family != o.family) return family < o.family;
    return n < o.n;
  }
  std::string str() const;
};

// Signed permutation: window[i-1] is the image of i, a value in {±1..±n}.
// Type A windows are all positive; type D windows flip an even number of signs.
struct SignedPerm {
  WeylType type;
  std::vector<int> window;

  static SignedPerm identity(const WeylType& t);
  static SignedPerm simple_reflection(const WeylType& t, int i);

  int apply(int i) const;  // defined on ±1..±n, odd in i
  SignedPerm compose(const SignedPerm& b) const;  // (a*b)(i) = a(b(i))
  SignedPerm inverse() const;
  bool is_identity() const;
  int neg_count() const;
  void check_valid() const;

  bool operator==(const SignedPerm& o) const { return window == o.window; }
  bool operator!=(const SignedPerm& o) const { return !(*this == o); }
  bool operator<(const SignedPerm& o) const { return window < o.window; }
  std::string str() const;
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool is_OP() const;   // all parts odd
  bool is_EP() const;   // all parts even
  bool is_SOP() const;  // distinct odd parts
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;

  static std::vector<Partition> all_of(int n);
};

// Conjugacy class name: (lambda, mu); mu is empty in type A.
struct ClassLabel {
  Partition lambda;
  Partition mu;

  bool operator==(const ClassLabel& o) const { return lambda == o.lambda && mu == o.mu; }
  bool operator<(const ClassLabel& o) const {
    if (!(lambda == o.lambda)) return lambda < o.lambda;
    return mu < o.mu;
  }
  std::string str() const;
};

struct ParabolicSubset {
  WeylType type;
  std::vector<int> indices;  // sorted subset of {1..rank}

  ParabolicSubset(const WeylType& t, std::vector<int> idx);
  static ParabolicSubset full(const WeylType& t);
  bool contains(int i) const;
  bool operator==(const ParabolicSubset& o) const {
    return type == o.type && indices == o.indices;
  }
  bool operator<(const ParabolicSubset& o) const { return indices < o.indices; }
};

enum class ConventionFlag { Paper42, LengthFilter };

std::string convention_str(ConventionFlag c);
ConventionFlag convention_from_str(const std::string& s);

// --- Group structure ---

int length(const SignedPerm& w);  // positive roots sent negative
// Lexicographically least reduced word, letters in {1..rank}; cached.
const std::vector<int>& canonical_word(const SignedPerm& w);
std::vector<int> simple_root(const WeylType& t, int i);
std::vector<int> act_on_root(const SignedPerm& w, const std::vector<int>& r);
// Image of the simple-root set J under w, if it is again a set of simple
// roots; nullopt otherwise.
std::optional<std::vector<int>> map_simple_set(const SignedPerm& w,
                                               const std::vector<int>& J);

constexpr long kDefaultEnumBound = 1000000;

const std::vector<SignedPerm>& enumerate_group(const WeylType& t,
                                               long bound = kDefaultEnumBound);
std::vector<SignedPerm> enumerate_parabolic(const ParabolicSubset& J,
                                            long bound = kDefaultEnumBound);

// --- Conjugacy classes ---

ClassLabel cycle_type(const SignedPerm& w);
SignedPerm class_representative(const WeylType& t, const ClassLabel& label);
// The actual conjugation orbit of class_representative(label).
std::vector<SignedPerm> conjugacy_class(const WeylType& t, const ClassLabel& label);
std::vector<ClassLabel> all_class_labels(const WeylType& t);

std::vector<SignedPerm> min_double_coset_reps(const ParabolicSubset& J,
                                              const ParabolicSubset& Jp);
std::vector<SignedPerm> normalizer(const ParabolicSubset& J);
std::vector<SignedPerm> centralizer(const SignedPerm& w);
bool subsets_equivalent(const ParabolicSubset& J1, const ParabolicSubset& J2);

bool is_elliptic(const WeylType& t, const ClassLabel& label, const ParabolicSubset& J);
std::pair<ParabolicSubset, SignedPerm> J_of_class(const WeylType& t,
                                                  const ClassLabel& label);
std::vector<ClassLabel> distinguished_classes(const WeylType& t, ConventionFlag conv);

// --- Polynomials in the squared coordinates ---

// Polynomial in y_i := x_i^2 with rational coefficients.  The Weyl group
// acts by permuting the y_i (signs square away).
struct SquaresPoly {
  int n = 0;
  std::map<std::vector<int>, Rational> terms;  // exponent vector -> coeff

  SquaresPoly() = default;
  explicit SquaresPoly(int vars) : n(vars) {}
  static SquaresPoly one(int vars);
  static SquaresPoly variable(int vars, int i);  // y_i

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& mono, const Rational& c);
  SquaresPoly operator+(const SquaresPoly& o) const;
  SquaresPoly operator-(const SquaresPoly& o) const;
  SquaresPoly operator*(const SquaresPoly& o) const;
  SquaresPoly scaled(const Rational& c) const;
  bool operator==(const SquaresPoly& o) const { return n == o.n && terms == o.terms; }
  int degree() const;  // y-degree; -1 for zero
  bool homogeneous() const;
  std::string str() const;
};

// f^w : y_i -> y_{|w(i)|}.
SquaresPoly act(const SignedPerm& w, const SquaresPoly& f);
bool invariant_under(const std::vector<SignedPerm>& gens, const SquaresPoly& f);

// The combinatorial restriction operator: sum over x in ^J W^{J'} with
// x^{-1}(J) contained in J' of the conjugated pair (x^{-1} w x, f^{x^{-1}}).
std::vector<std::pair<SignedPerm, SquaresPoly>> r_bar(const ParabolicSubset& Jp,
                                                      const ParabolicSubset& J,
                                                      const SignedPerm& w,
                                                      const SquaresPoly& f);

bool counting_identity_check(const ParabolicSubset& J, const ParabolicSubset& Jp);

std::vector<std::vector<int>> all_subsets(int rank);  // sorted by (size, lex)

}  // namespace weylcomb
