// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kschubert/basis.hpp"
#include "kschubert/chains.hpp"
#include "kschubert/hecke.hpp"
#include "kschubert/io.hpp"
#include "kschubert/pipedream.hpp"
#include "kschubert/subst.hpp"
#include "kschubert/verify.hpp"

using namespace kschubert;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool as_json = false;

void emit(const Json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int rank_of(const Permutation& w, int n) {
  if (n == 0) return std::max(w.size(), 1);
  if (w.size() > n) throw UsageError("permutation " + w.to_string() + " is not in S_" + std::to_string(n));
  return n;
}

Side parse_side(const std::string& s) { return s == "left" ? Side::left : Side::right; }

// ---------------------------------------------------------------- poly

struct PolyArgs {
  std::string family, w, construction = "operators", side = "right";
  int n = 0;
  bool dbl = false;
};

Polynomial build_poly(const PolyArgs& a, const Permutation& w, int n) {
  const Side side = parse_side(a.side);
  if (a.family == "S") {
    if (a.dbl) throw UsageError("double Schubert polynomials are not supported");
    if (a.construction != "operators") throw UsageError("S supports only --construction operators");
    return schubert(w);
  }
  if (a.family == "G") {
    if (a.construction == "operators") return grothendieck(w, a.dbl);
    if (a.construction == "hecke") return cauchy_product(n, a.dbl).coefficient(w, HeckeBasis::e);
    if (a.construction == "rcgraph") {
      return a.dbl ? groth_from_double(w, n, RcVariant::absorb_product, side)
                   : groth_from_rcgraphs(w, n, RcVariant::absorb_product, side, false);
    }
    return groth_from_chains(w, n, a.dbl);
  }
  if (a.n == 0) throw UsageError("H polynomials need --n");
  if (a.construction == "operators") return hpolynomial(w, n, a.dbl);
  if (a.construction == "hecke") return cauchy_product(n, a.dbl).coefficient(w, HeckeBasis::tilde);
  if (a.construction == "rcgraph") {
    return a.dbl ? h_from_double(w, n, side) : h_from_rcgraphs(w, n, RcVariant::absorb_product, side, false);
  }
  return h_from_chains(w, n, a.dbl);
}

int cmd_poly(const PolyArgs& a) {
  const Permutation w = parse_permutation(a.w);
  const int n = rank_of(w, a.n);
  const Polynomial p = build_poly(a, w, n);
  emit({{"family", a.family},
        {"w", to_json(w, n)},
        {"n", n},
        {"double", a.dbl},
        {"construction", a.construction},
        {"polynomial", to_json(p)}},
       p.to_string());
  return 0;
}

// ---------------------------------------------------------------- expand

Basis parse_basis(const std::string& s) { return s == "S" ? Basis::schubert : Basis::grothendieck; }

int cmd_expand(const std::string& path, const std::string& basis, int N, bool linear) {
  std::string body;
  if (path == "-") {
    body.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    body.assign(std::istreambuf_iterator<char>(in), {});
  }
  const Json j = Json::parse(body);
  const Polynomial p = polynomial_from_json(j.contains("polynomial") ? j.at("polynomial") : j);
  BasisExpansion e;
  if (linear) {
    if (N == 0) throw UsageError("--linear needs --N");
    e = expand_linear(p, N, parse_basis(basis));
  } else if (N > 0) {
    e = basis == "S" ? expand_schubert(p, N) : expand_grothendieck(p, N);
  } else {
    for (const auto& [w, c] : stable_expansion(p, parse_basis(basis))) {
      e.coeffs[w] = c;
      e.N = std::max({e.N, w.size(), 1});
    }
  }
  emit(to_json(e), to_text(e));
  return 0;
}

// ---------------------------------------------------------------- constants

int cmd_constants(const std::string& us, const std::string& vs, int N, const std::string& basis, bool check) {
  const Permutation u = parse_permutation(us), v = parse_permutation(vs);
  if (N == 0) N = std::max({u.size(), v.size(), 1});
  const Basis b = parse_basis(basis);
  const BasisExpansion e = structure_constants(u, v, N, b);
  Json j = to_json(e);
  std::string text = to_text(e);
  int code = 0;
  if (check) {
    // The full stable expansion must rebuild the product and restrict to e.
    BasisExpansion full;
    for (const auto& [w, c] : stable_expansion(b == Basis::schubert ? schubert(u) * schubert(v)
                                                                      : grothendieck(u) * grothendieck(v),
                                               b)) {
      full.coeffs[w] = c;
      full.N = std::max({full.N, w.size(), 1});
    }
    const Polynomial product =
        b == Basis::schubert ? schubert(u) * schubert(v) : grothendieck(u) * grothendieck(v);
    const bool ok = reconstruct(full, b) == product && full.restricted(N).coeffs == e.coeffs;
    j["check"] = ok;
    text += std::string("\ncheck: ") + (ok ? "pass" : "FAIL");
    code = ok ? 0 : 1;
  }
  emit(j, text);
  return code;
}

// ---------------------------------------------------------------- subst

struct SubstArgs {
  std::string kind, w, method = "chains", P, Q, parts, family = "G";
  int n = 0, q = 1;
  bool exact = false, check = false;
};

Family parse_family(const std::string& s) {
  if (s == "S") return Family::schubert;
  if (s == "H") return Family::h;
  return Family::grothendieck;
}

SetComposition parse_parts(const std::string& s) {
  std::vector<std::vector<int>> parts;
  std::stringstream in(s);
  std::string chunk;
  while (std::getline(in, chunk, '|')) parts.push_back(parse_int_list(chunk));
  return SetComposition(std::move(parts));
}

int cmd_subst(const SubstArgs& a) {
  const Permutation w = parse_permutation(a.w);
  SubstitutionExpansion e;
  Polynomial direct;
  if (a.kind == "first") {
    const int n = rank_of(w, a.n);
    const FirstVariableMethod m = a.method == "constants" ? FirstVariableMethod::constants
                                  : a.method == "phi"     ? FirstVariableMethod::phi
                                                          : FirstVariableMethod::chains;
    e = substitute_first_variable(w, n, m);
    std::vector<int> rest;
    for (int i = 2; i <= n; ++i) rest.push_back(i);
    direct = specialize(grothendieck(w), SetComposition({{1}, rest}), {Alphabet::y(), Alphabet::x()});
  } else if (a.kind == "single") {
    const int n = rank_of(w, a.n);
    e = substitute_single(w, a.q, n);
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i) {
      if (i != a.q) rest.push_back(i);
    }
    direct = specialize(grothendieck(w), SetComposition({{a.q}, rest}), {Alphabet::y(), Alphabet::x()});
  } else {
    const SetComposition A = a.kind == "two-set" ? SetComposition({parse_int_list(a.P), parse_int_list(a.Q)})
                                                 : parse_parts(a.parts);
    const Family f = parse_family(a.family);
    if (a.check && f == Family::h && !a.exact) {
      throw UsageError("the H display holds only modulo the rank ideals; use --exact with --check");
    }
    if (a.exact) {
      if (f != Family::h) throw UsageError("--exact applies to the H family");
      e = h_decomposition_exact(w, A);
    } else if (a.kind == "two-set") {
      e = two_set_decomposition(w, A[0], A[1], f);
    } else {
      e = multi_set_decomposition(w, A, f);
    }
    const Polynomial& src = f == Family::grothendieck ? grothendieck(w)
                            : f == Family::schubert   ? schubert(w)
                                                      : hpolynomial(w, A.total(), false);
    direct = specialize(src, A, e.alphabets);
  }
  Json j = to_json(e);
  std::string text = to_text(e);
  int code = 0;
  if (a.check) {
    const bool ok = assemble(e) == direct;
    j["check"] = ok;
    text += std::string("\ncheck: ") + (ok ? "pass" : "FAIL");
    code = ok ? 0 : 1;
  }
  emit(j, text);
  return code;
}

// ---------------------------------------------------------------- enumerate

struct EnumArgs {
  std::string kind, w, marking = "groth", side = "right";
  int n = 0;
  bool climbing = false, ascii = false;
};

int cmd_enumerate(const EnumArgs& a) {
  const Permutation w = parse_permutation(a.w);
  const int n = rank_of(w, a.n);
  Json items = Json::array();
  std::string text;
  auto line = [&text](const std::string& s) { text += s + "\n"; };
  if (a.kind == "rcgraphs") {
    for (const RcGraph& R : enumerate_rcgraphs(w, n)) {
      items.push_back(to_json(R));
      line(a.ascii ? render_ascii(R) : to_json(R).at("crossings").dump());
    }
  } else if (a.kind == "marked-rcgraphs") {
    for (const MarkedRcGraph& R : enumerate_marked_rcgraphs(w, n, parse_side(a.side))) {
      items.push_back(to_json(R));
      line(a.ascii ? render_ascii(R.base, R.marks)
                   : to_json(R.base).at("crossings").dump() + " marks " + to_json(R).at("marks").dump());
    }
  } else if (a.kind == "double") {
    for (const DoubleRcGraph& D : enumerate_double_rcgraphs(w, n)) {
      items.push_back(to_json(D));
      line("u=" + D.u.to_string(n) + " v=" + D.v.to_string(n) + " " + to_json(D).at("crossings").dump());
    }
  } else if (a.kind == "chains") {
    for (const MarkedChain& c : climbing_chains(w, n)) {
      items.push_back(to_json(c, n));
      line(to_text(c, n));
    }
  } else if (a.kind == "marked-chains") {
    const Marking m = a.marking == "hpoly" ? Marking::hpoly : Marking::groth;
    const auto chains = a.climbing ? enumerate_climbing_marked_chains(w, n, m) : marked_chains_to_top(w, n);
    for (const MarkedChain& c : chains) {
      items.push_back(to_json(c, n));
      line(to_text(c, n));
    }
  } else {
    throw UsageError("unknown kind " + a.kind);
  }
  line("count " + std::to_string(items.size()));
  if (!text.empty()) text.pop_back();
  emit({{"kind", a.kind}, {"w", to_json(w, n)}, {"n", n}, {"count", items.size()}, {"items", items}}, text);
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, int nmax) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify_suites();
  } else {
    suites = {suite};
  }
  Json reports = Json::array();
  std::string text;
  bool ok = true;
  for (const std::string& s : suites) {
    const VerifyReport r = run_verify(s, nmax);
    ok = ok && r.passed();
    reports.push_back(r.to_json());
    text += r.to_text();
  }
  if (!text.empty()) text.pop_back();
  emit(suites.size() == 1 ? reports.front() : Json{{"pass", ok}, {"suites", reports}}, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck, Schubert and H polynomials: constructions, structure constants, substitutions"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "Build G, S or H for a permutation");
  poly->add_option("family", pa.family)->required()->check(CLI::IsMember({"G", "S", "H"}));
  poly->add_option("w", pa.w, "One-line notation, e.g. 1,4,3,2")->required();
  poly->add_option("--n", pa.n, "Ambient rank (required for H)");
  poly->add_flag("--double", pa.dbl, "Double polynomial in x and y");
  poly->add_option("--construction", pa.construction)
      ->check(CLI::IsMember({"operators", "hecke", "rcgraph", "chains"}));
  poly->add_option("--side", pa.side, "Absorbable side for rc-graphs")->check(CLI::IsMember({"right", "left"}));

  std::string expand_path = "-", expand_basis = "G";
  int expand_N = 0;
  bool expand_linear = false;
  auto* expand = app.add_subcommand("expand", "Expand a JSON polynomial in the G or S basis");
  expand->add_option("file", expand_path, "Polynomial JSON ('-' for stdin)");
  expand->add_option("--basis", expand_basis)->check(CLI::IsMember({"G", "S"}));
  expand->add_option("--N", expand_N, "Require support in S_N");
  expand->add_flag("--linear", expand_linear, "Use the linear-algebra expansion");

  std::string cu, cv, cbasis = "G";
  int cN = 0;
  bool ccheck = false;
  auto* constants = app.add_subcommand("constants", "Structure constants c^w_{u,v} for w in S_N");
  constants->add_option("u", cu)->required();
  constants->add_option("v", cv)->required();
  constants->add_option("--N", cN);
  constants->add_option("--basis", cbasis)->check(CLI::IsMember({"G", "S"}));
  constants->add_flag("--check", ccheck, "Rebuild the product from the expansion");

  SubstArgs sa;
  auto* subst = app.add_subcommand("subst", "Substitution and decomposition formulas");
  subst->add_option("kind", sa.kind)->required()->check(CLI::IsMember({"first", "single", "two-set", "multi"}));
  subst->add_option("w", sa.w)->required();
  subst->add_option("--n", sa.n);
  subst->add_option("--q", sa.q, "Position of the substituted variable");
  subst->add_option("--method", sa.method)->check(CLI::IsMember({"chains", "constants", "phi"}));
  subst->add_option("--P", sa.P, "Positions sent to y");
  subst->add_option("--Q", sa.Q, "Positions sent to z");
  subst->add_option("--parts", sa.parts, "Set composition, e.g. 1,2|3|4");
  subst->add_option("--family", sa.family)->check(CLI::IsMember({"G", "S", "H"}));
  subst->add_flag("--exact", sa.exact, "Exact H decomposition through the alternating sum");
  subst->add_flag("--check", sa.check, "Compare with the direct specialization");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List rc-graphs or chains");
  enumerate->add_option("kind", ea.kind)
      ->required()
      ->check(CLI::IsMember({"rcgraphs", "marked-rcgraphs", "double", "chains", "marked-chains"}));
  auto add_enum_options = [&ea](CLI::App* c) {
    c->add_option("w", ea.w)->required();
    c->add_option("--n", ea.n);
    c->add_flag("--climbing", ea.climbing, "Climbing chains to the longest element");
    c->add_option("--marking", ea.marking)->check(CLI::IsMember({"groth", "hpoly"}));
    c->add_option("--side", ea.side)->check(CLI::IsMember({"right", "left"}));
    c->add_flag("--ascii", ea.ascii, "Draw rc-graphs");
  };
  add_enum_options(enumerate);
  auto* chains = app.add_subcommand("chains", "Climbing marked chains (enumerate marked-chains --climbing)");
  add_enum_options(chains);
  auto* pipedreams = app.add_subcommand("pipedreams", "Rc-graphs (enumerate rcgraphs)");
  add_enum_options(pipedreams);

  std::string suite;
  int nmax = 4;
  auto* verify = app.add_subcommand("verify", "Cross-validation harness");
  std::vector<std::string> suite_choices = verify_suites();
  suite_choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--nmax", nmax, "Largest rank")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  as_json = format == "json";

  try {
    if (*poly) return cmd_poly(pa);
    if (*expand) return cmd_expand(expand_path, expand_basis, expand_N, expand_linear);
    if (*constants) return cmd_constants(cu, cv, cN, cbasis, ccheck);
    if (*subst) return cmd_subst(sa);
    if (*enumerate) return cmd_enumerate(ea);
    if (*chains) {
      ea.kind = "marked-chains";
      ea.climbing = true;
      return cmd_enumerate(ea);
    }
    if (*pipedreams) {
      ea.kind = "rcgraphs";
      return cmd_enumerate(ea);
    }
    if (*verify) return cmd_verify(suite, nmax);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
