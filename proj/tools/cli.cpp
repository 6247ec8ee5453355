// Command-line front end: class enumeration, normal forms, cocenter
// verification, and the Morita transport check.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cocenterlab.hpp"
#include "exactnum.hpp"
#include "heckeclifford.hpp"
#include "morita.hpp"
#include "spinhecke.hpp"
#include "weylcomb.hpp"

using json = nlohmann::ordered_json;
using namespace weylcomb;
using exactnum::Cyc8;
using exactnum::ParamPoly;
using exactnum::Rational;
using heckeclifford::AlgebraDesc;
using heckeclifford::Mode;
using heckeclifford::PBWElement;
using spinhecke::SpinPBWElement;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  throw UsageError("unknown type '" + s + "' (expected A, B or D)");
}

Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw UsageError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

// rough work estimate: |W| * 2^n basis labels per polynomial degree
long cost_estimate(const WeylType& t) {
  return static_cast<long>(enumerate_group(t).size()) << t.n;
}

void require_small(const WeylType& t, bool allow_large) {
  long cost = cost_estimate(t);
  if (cost > 2000 && !allow_large) {
    throw UsageError(t.str() + " is a large run (~" + std::to_string(cost) +
                     " basis labels per degree); pass --allow-large to proceed");
  }
}

// --- expression parser -----------------------------------------------------

struct Token {
  char kind;  // 'n' number, 'g' generator, 'u', 'v', or literal + - * ^ ( )
  long num = 0;
  char gen = 0;
  int idx = 0;
};

std::vector<Token> tokenize(const std::string& s, const std::string& gens) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({'n', std::stol(s.substr(i, j - i)), 0, 0});
      i = j;
      continue;
    }
    if (ch == 'u' || ch == 'v') {
      out.push_back({ch, 0, 0, 0});
      ++i;
      continue;
    }
    if (gens.find(ch) != std::string::npos) {
      size_t j = i + 1;
      if (j < s.size() && s[j] == '_') ++j;
      size_t k = j;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == j) throw UsageError(std::string("generator '") + ch + "' needs an index");
      out.push_back({'g', 0, ch, std::stoi(s.substr(j, k - j))});
      i = k;
      continue;
    }
    if (std::string("+-*^()").find(ch) != std::string::npos) {
      out.push_back({ch, 0, 0, 0});
      ++i;
      continue;
    }
    throw UsageError(std::string("unexpected character '") + ch + "' in expression");
  }
  return out;
}

// Alg supplies: Elem, one(), scalar(ParamPoly), gen(char, int), mul(a, b)
template <class Alg>
class ExprParser {
 public:
  ExprParser(const Alg& alg, std::vector<Token> toks)
      : alg_(alg), toks_(std::move(toks)) {}

  typename Alg::Elem parse() {
    auto e = expr();
    if (pos_ != toks_.size()) throw UsageError("trailing tokens in expression");
    return e;
  }

 private:
  const Alg& alg_;
  std::vector<Token> toks_;
  size_t pos_ = 0;

  bool peek(char k) const { return pos_ < toks_.size() && toks_[pos_].kind == k; }
  Token next() {
    if (pos_ >= toks_.size()) throw UsageError("unexpected end of expression");
    return toks_[pos_++];
  }

  typename Alg::Elem expr() {
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    auto acc = term();
    if (neg) acc = alg_.mul(alg_.scalar(ParamPoly(-1)), acc);
    while (peek('+') || peek('-')) {
      bool minus = next().kind == '-';
      auto t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  typename Alg::Elem term() {
    auto acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = alg_.mul(acc, factor());
    }
    return acc;
  }

  typename Alg::Elem factor() {
    auto base = atom();
    if (peek('^')) {
      ++pos_;
      Token e = next();
      if (e.kind != 'n' || e.num < 0) throw UsageError("exponent must be a nonnegative integer");
      auto acc = alg_.one();
      for (long k = 0; k < e.num; ++k) acc = alg_.mul(acc, base);
      return acc;
    }
    return base;
  }

  typename Alg::Elem atom() {
    Token t = next();
    switch (t.kind) {
      case 'n':
        return alg_.scalar(ParamPoly(t.num));
      case 'u':
        return alg_.scalar(ParamPoly::u());
      case 'v':
        return alg_.scalar(ParamPoly::v());
      case 'g':
        return alg_.gen(t.gen, t.idx);
      case '(': {
        auto e = expr();
        if (!peek(')')) throw UsageError("missing ')'");
        ++pos_;
        return e;
      }
      default:
        throw UsageError("unexpected token in expression");
    }
  }
};

struct HCAlg {
  AlgebraDesc d;
  using Elem = PBWElement;
  Elem one() const { return PBWElement::one(d); }
  Elem scalar(const ParamPoly& c) const { return one().scaled(c); }
  Elem gen(char k, int i) const { return PBWElement::generator(d, k, i); }
  Elem mul(const Elem& a, const Elem& b) const { return heckeclifford::multiply(a, b); }
};

struct SpinAlg {
  AlgebraDesc d;
  using Elem = SpinPBWElement;
  Elem one() const { return SpinPBWElement::one(d); }
  Elem scalar(const ParamPoly& c) const { return one().scaled(c); }
  Elem gen(char k, int i) const { return SpinPBWElement::generator(d, k, i); }
  Elem mul(const Elem& a, const Elem& b) const { return spinhecke::spin_multiply(a, b); }
};

// --- serialization ---------------------------------------------------------

json perm_json(const SignedPerm& w) {
  return json{{"type", w.type.str()}, {"window", w.window}};
}

json label_json(const ClassLabel& l) {
  return json{{"lambda", l.lambda.parts}, {"mu", l.mu.parts}};
}

std::vector<int> mask_indices(uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

json element_json(const PBWElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    terms.push_back(json{{"coeff", c.str()},
                         {"alpha", m.alpha},
                         {"c", mask_indices(m.eps, m.w.type.n)},
                         {"window", m.w.window}});
  }
  return json{{"terms", terms}, {"text", e.str()}};
}

json element_json(const SpinPBWElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    terms.push_back(json{{"coeff", c.str()},
                         {"alpha", m.alpha},
                         {"window", m.w.window}});
  }
  return json{{"terms", terms}, {"text", e.str()}};
}

json report_json(const cocenterlab::CocenterReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"degree", row.degree},
                        {"slice_dim", row.slice_dim},
                        {"cocenter_dim", row.cocenter_dim},
                        {"candidates", row.candidates}});
  }
  return json{{"type", r.type.str()},
              {"mode", r.mode},
              {"max_deg", r.max_deg},
              {"slack", r.slack},
              {"convention", convention_str(r.convention)},
              {"rows", rows},
              {"verdict", cocenterlab::verdict_str(r.verdict)},
              {"independence", r.independence},
              {"witness", r.witness},
              {"certificate", r.certificate}};
}

void emit_report(const cocenterlab::CocenterReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << report_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "degree,dim,candidates,verdict\n";
    for (const auto& row : r.rows)
      std::cout << row.degree << "," << row.cocenter_dim << "," << row.candidates
                << "," << cocenterlab::verdict_str(r.verdict) << "\n";
  } else if (format == "latex") {
    std::cout << "\\begin{tabular}{rrr}\n\\hline\ndegree & dim & candidates \\\\\n\\hline\n";
    for (const auto& row : r.rows)
      std::cout << row.degree << " & " << row.cocenter_dim << " & " << row.candidates
                << " \\\\\n";
    std::cout << "\\hline\n\\end{tabular}\n% verdict: "
              << cocenterlab::verdict_str(r.verdict) << "\n";
  } else {
    std::cout << r.type.str() << " " << r.mode
              << " verdict=" << cocenterlab::verdict_str(r.verdict) << "\n";
    for (const auto& row : r.rows)
      std::cout << "  degree " << row.degree << ": dim " << row.cocenter_dim
                << ", candidates " << row.candidates << "\n";
    if (!r.witness.empty()) std::cout << "  witness: " << r.witness << "\n";
    std::cout << "  certificate " << r.certificate << "\n";
  }
}

bool verdict_pass(cocenterlab::Verdict v) { return v != cocenterlab::Verdict::Failed; }

// --- shared flag bundle ----------------------------------------------------

struct Options {
  std::string type = "A";
  int n = 2;
  int max_deg = 2;
  std::string mode = "symbolic";
  int slack = 2;
  std::string convention = "paper-4.2";
  std::string u0 = "7/3";
  std::string v0 = "5/2";
  std::string format = "json";
  std::string expr;
  uint64_t seed = 0xC0CE17E5ULL;
  bool allow_large = false;

  WeylType weyl() const { return WeylType(parse_family(type), n); }
  ConventionFlag conv() const { return convention_from_str(convention); }
  AlgebraDesc desc() const {
    WeylType t = weyl();
    if (mode == "symbolic") return AlgebraDesc(t, Mode::Symbolic);
    if (mode == "graded") return AlgebraDesc(t, Mode::Graded);
    if (mode == "specialized" || mode == "filtered")
      return AlgebraDesc(t, Mode::Specialized, Cyc8(parse_rational(u0)),
                         Cyc8(parse_rational(v0)));
    throw UsageError("unknown mode '" + mode + "'");
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Weyl family: A, B or D");
  cmd->add_option("--n", o.n, "rank");
  cmd->add_option("--format", o.format, "json|csv|latex|text");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_flag("--allow-large", o.allow_large, "permit long-running ranks (D_4 etc.)");
}

int run_classes(const Options& o) {
  WeylType t = o.weyl();
  auto labels = distinguished_classes(t, o.conv());
  if (o.format == "json") {
    json out = json::array();
    for (const auto& l : labels) out.push_back(label_json(l));
    std::cout << json{{"type", t.str()},
                      {"convention", convention_str(o.conv())},
                      {"classes", out}}
                     .dump(2)
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "lambda,mu\n";
    for (const auto& l : labels)
      std::cout << l.lambda.str() << "," << l.mu.str() << "\n";
  } else if (o.format == "latex") {
    std::cout << "\\begin{tabular}{ll}\n\\hline\n$\\lambda$ & $\\mu$ \\\\\n\\hline\n";
    for (const auto& l : labels)
      std::cout << l.lambda.str() << " & " << l.mu.str() << " \\\\\n";
    std::cout << "\\hline\n\\end{tabular}\n";
  } else {
    for (const auto& l : labels) std::cout << l.str() << "\n";
  }
  return 0;
}

template <class Elem>
int emit_element(const Elem& e, const Options& o) {
  if (o.format == "json") {
    std::cout << element_json(e).dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "coeff,monomial\n";
    for (const auto& [m, c] : e.terms()) std::cout << c.str() << "," << m.str() << "\n";
  } else {
    std::cout << e.str() << "\n";
  }
  return 0;
}

int run_normalize(const Options& o) {
  HCAlg alg{o.desc()};
  auto e = ExprParser<HCAlg>(alg, tokenize(o.expr, "sxc")).parse();
  return emit_element(e, o);
}

int run_spin_normalize(const Options& o) {
  SpinAlg alg{o.desc()};
  auto e = ExprParser<SpinAlg>(alg, tokenize(o.expr, "tb")).parse();
  return emit_element(e, o);
}

int run_verify(const Options& o) {
  WeylType t = o.weyl();
  require_small(t, o.allow_large);
  cocenterlab::CocenterReport r(t);
  if (o.mode == "graded") {
    r = cocenterlab::verify_graded_basis(t, o.max_deg, o.conv());
  } else if (o.mode == "spin-graded") {
    r = cocenterlab::verify_spin_graded_basis(t, o.max_deg, o.conv());
  } else if (o.mode == "filtered") {
    r = cocenterlab::verify_filtered(t, o.max_deg, o.slack, parse_rational(o.u0),
                                     parse_rational(o.v0), o.conv());
  } else {
    throw UsageError("verify --mode must be graded, spin-graded or filtered");
  }
  emit_report(r, o.format);
  return verdict_pass(r.verdict) ? 0 : 1;
}

int run_morita_check(const Options& o) {
  WeylType t = o.weyl();
  require_small(t, o.allow_large);
  AlgebraDesc d = o.desc();
  auto gi = morita::solve_generator_images(d);

  // seeded homomorphism fuzz on random monomial pairs
  std::mt19937_64 rng(o.seed);
  const auto& g = enumerate_group(t);
  std::uniform_int_distribution<size_t> pw(0, g.size() - 1);
  std::uniform_int_distribution<int> pd(0, 2), pv(0, t.n - 1);
  std::uniform_int_distribution<uint32_t> pe(0, (1u << t.n) - 1);
  auto rand_elem = [&]() {
    std::vector<int> alpha(t.n, 0);
    int deg = pd(rng);
    for (int k = 0; k < deg; ++k) alpha[pv(rng)]++;
    return PBWElement::monomial(d, heckeclifford::PBWMono(alpha, pe(rng), g[pw(rng)]));
  };
  bool fuzz_ok = true;
  for (int trial = 0; trial < 50 && fuzz_ok; ++trial) {
    PBWElement a = rand_elem(), b = rand_elem();
    fuzz_ok = morita::phi(gi, heckeclifford::multiply(a, b)) ==
              morita::tensor_multiply(morita::phi(gi, a), morita::phi(gi, b));
  }

  bool iso_ok = morita::verify_iso(gi, o.max_deg);
  auto transport = morita::transport_independence(t, o.max_deg, o.conv());

  json out{{"type", t.str()},
           {"mode", o.mode},
           {"kappa", gi.kappa.str()},
           {"lambda", gi.lambda.str()},
           {"spin_u0", gi.spin.u0.str()},
           {"homomorphism_fuzz", fuzz_ok ? "pass" : "fail"},
           {"bijectivity_max_deg", o.max_deg},
           {"bijectivity", iso_ok ? "pass" : "fail"},
           {"transport", report_json(transport)}};
  bool all = fuzz_ok && iso_ok && verdict_pass(transport.verdict);
  if (o.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.str() << " kappa=" << gi.kappa.str() << " lambda=" << gi.lambda.str()
              << " spin_u0=" << gi.spin.u0.str() << "\n"
              << "homomorphism_fuzz " << (fuzz_ok ? "pass" : "fail") << "\n"
              << "bijectivity " << (iso_ok ? "pass" : "fail") << "\n"
              << "transport " << cocenterlab::verdict_str(transport.verdict) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in affine Hecke-Clifford and spin Hecke algebras"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "list distinguished conjugacy class labels");
  add_common(classes, o);
  classes->add_option("--convention", o.convention, "paper-4.2|length-filter");

  auto* normalize = app.add_subcommand("normalize", "PBW normal form of an expression");
  add_common(normalize, o);
  normalize->add_option("--expr", o.expr, "expression in s_i, x_i, c_i, u, v")->required();
  normalize->add_option("--mode", o.mode, "symbolic|graded|specialized");
  normalize->add_option("--u0", o.u0, "u specialization (rational)");
  normalize->add_option("--v0", o.v0, "v specialization (rational)");

  auto* spin = app.add_subcommand("spin-normalize", "spin PBW normal form of an expression");
  add_common(spin, o);
  spin->add_option("--expr", o.expr, "expression in t_i, b_i, u")->required();
  spin->add_option("--mode", o.mode, "symbolic|graded|specialized");
  spin->add_option("--u0", o.u0, "u specialization (rational)");
  spin->add_option("--v0", o.v0, "v specialization (rational)");

  auto* verify = app.add_subcommand("verify", "cocenter basis verification");
  add_common(verify, o);
  verify->add_option("--max-deg", o.max_deg, "maximum polynomial degree");
  verify->add_option("--mode", o.mode, "graded|spin-graded|filtered")->required();
  verify->add_option("--slack", o.slack, "filtered commutator degree slack");
  verify->add_option("--convention", o.convention, "paper-4.2|length-filter");
  verify->add_option("--u0", o.u0, "u specialization (rational)");
  verify->add_option("--v0", o.v0, "v specialization (rational)");

  auto* morita_cmd = app.add_subcommand("morita-check", "solve and verify the tensor isomorphism");
  add_common(morita_cmd, o);
  morita_cmd->add_option("--max-deg", o.max_deg, "bijectivity / transport degree bound");
  morita_cmd->add_option("--mode", o.mode, "symbolic|graded|specialized");
  morita_cmd->add_option("--convention", o.convention, "paper-4.2|length-filter");
  morita_cmd->add_option("--u0", o.u0, "u specialization (rational)");
  morita_cmd->add_option("--v0", o.v0, "v specialization (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classes->parsed()) return run_classes(o);
    if (normalize->parsed()) {
      o.mode = normalize->count("--mode") ? o.mode : "symbolic";
      return run_normalize(o);
    }
    if (spin->parsed()) {
      o.mode = spin->count("--mode") ? o.mode : "symbolic";
      return run_spin_normalize(o);
    }
    if (verify->parsed()) return run_verify(o);
    if (morita_cmd->parsed()) {
      o.mode = morita_cmd->count("--mode") ? o.mode : "specialized";
      return run_morita_check(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
