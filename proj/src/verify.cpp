#include "kschubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "kschubert/hecke.hpp"
#include "kschubert/ops.hpp"

namespace kschubert {

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return !o.pass; }));
}

namespace {

// Checks in first-seen order with pass and total counts.
std::vector<std::pair<std::string, std::pair<int, int>>> tally(const std::vector<CheckOutcome>& outcomes) {
  std::vector<std::pair<std::string, std::pair<int, int>>> out;
  for (const CheckOutcome& o : outcomes) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == o.check; });
    if (it == out.end()) it = out.insert(out.end(), {o.check, {0, 0}});
    it->second.first += o.pass;
    ++it->second.second;
  }
  return out;
}

}  // namespace

Json VerifyReport::to_json() const {
  Json checks = Json::array();
  for (const auto& [name, counts] : tally(outcomes)) {
    Json failed = Json::array();
    for (const CheckOutcome& o : outcomes) {
      if (o.check == name && !o.pass) failed.push_back({{"item", o.item}, {"detail", o.detail}});
    }
    checks.push_back({{"check", name}, {"passed", counts.first}, {"total", counts.second}, {"failures", failed}});
  }
  return {{"suite", suite}, {"nmax", nmax}, {"pass", passed()}, {"checks", checks}};
}

std::string VerifyReport::to_text() const {
  std::string s;
  for (const auto& [name, counts] : tally(outcomes)) {
    s += (counts.first == counts.second ? "PASS " : "FAIL ") + name + " " + std::to_string(counts.first) + "/" +
         std::to_string(counts.second) + "\n";
  }
  for (const CheckOutcome& o : outcomes) {
    if (!o.pass) s += "  failed " + o.check + " [" + o.item + "]: " + o.detail + "\n";
  }
  s += "suite " + suite + (passed() ? " passed" : " FAILED") + "\n";
  return s;
}

namespace {

// A task returns an empty string on success, otherwise what went wrong.
struct Task {
  std::string check;
  std::string item;
  std::function<std::string()> run;
};

std::vector<CheckOutcome> run_tasks(const std::vector<Task>& tasks) {
  std::vector<CheckOutcome> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      std::string detail;
      try {
        detail = tasks[i].run();
      } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
      }
      out[i] = {tasks[i].check, tasks[i].item, detail.empty(), detail};
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = std::min<std::size_t>(hw, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k + 1 < count; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

using Named = std::vector<std::pair<std::string, std::function<Polynomial()>>>;

// All constructions must equal the first one.
std::string all_equal(const Named& constructions) {
  const Polynomial ref = constructions.front().second();
  for (std::size_t i = 1; i < constructions.size(); ++i) {
    if (constructions[i].second() != ref) return constructions[i].first + " differs from " + constructions.front().first;
  }
  return {};
}

std::string item_of(const Permutation& w, int n) { return w.to_string(n); }

const HeckeElement& cauchy(int n, bool dbl) {
  static std::mutex m;
  static std::map<std::pair<int, bool>, HeckeElement> cache;
  std::lock_guard lock(m);
  auto it = cache.find({n, dbl});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, dbl), cauchy_product(n, dbl)).first;
  return it->second;
}

Polynomial x_to_y(const Polynomial& p) { return p.swap_alphabets(Alphabet::x(), Alphabet::y()); }

// ---------------------------------------------------------------- constructions

void cross_constructions(int nmax, std::vector<Task>& tasks) {
  for (int n = 1; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      tasks.push_back({"G single: operators = top-down = rc-graphs = chains = Hecke", item_of(w, n), [w, n] {
                         return all_equal({
                             {"operators", [&] { return grothendieck(w); }},
                             {"top-down", [&] { return grothendieck_from_top(w, n, false); }},
                             {"right marked rc-graphs",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::marked_sum, Side::right, false); }},
                             {"left marked rc-graphs",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::marked_sum, Side::left, false); }},
                             {"absorbable product",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::absorb_product, Side::right, false); }},
                             {"climbing chains", [&] { return groth_from_chains(w, n, false); }},
                             {"Hecke coefficient", [&] { return cauchy(n, false).coefficient(w, HeckeBasis::e); }},
                         });
                       }});
      tasks.push_back({"S single: operators = top-down = lowest part of G", item_of(w, n), [w, n] {
                         return all_equal({
                             {"operators", [&] { return schubert(w); }},
                             {"top-down", [&] { return schubert_from_top(w, n); }},
                             {"lowest part", [&] { return lowest_degree_part(grothendieck(w)); }},
                         });
                       }});
      tasks.push_back({"H single: mu = alternating = rc-graphs = chains = Hecke", item_of(w, n), [w, n] {
                         return all_equal({
                             {"mu operators", [&] { return hpolynomial(w, n, false); }},
                             {"alternating sum", [&] { return hpolynomial(w, n, false, HMethod::alternating); }},
                             {"right rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::absorb_product, Side::right, false); }},
                             {"left rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::absorb_product, Side::left, false); }},
                             {"marked rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::marked_sum, Side::right, false); }},
                             {"climbing chains", [&] { return h_from_chains(w, n, false); }},
                             {"Hecke coefficient", [&] { return cauchy(n, false).coefficient(w, HeckeBasis::tilde); }},
                         });
                       }});
    }
  }
  for (int n = 1; n <= std::min(nmax, 4); ++n) {
    for (const Permutation& w : all_permutations(n)) {
      tasks.push_back({"G double: pi = rc-graphs = double rc-graphs = chains = Hecke", item_of(w, n), [w, n] {
                         return all_equal({
                             {"operators", [&] { return grothendieck_double(w); }},
                             {"top-down", [&] { return grothendieck_from_top(w, n, true); }},
                             {"right marked rc-graphs",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::marked_sum, Side::right, true); }},
                             {"left marked rc-graphs",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::marked_sum, Side::left, true); }},
                             {"absorbable product",
                              [&] { return groth_from_rcgraphs(w, n, RcVariant::absorb_product, Side::right, true); }},
                             {"double rc-graphs marked",
                              [&] { return groth_from_double(w, n, RcVariant::marked_sum, Side::right); }},
                             {"double rc-graphs absorbable",
                              [&] { return groth_from_double(w, n, RcVariant::absorb_product, Side::right); }},
                             {"climbing chains", [&] { return groth_from_chains(w, n, true); }},
                             {"Hecke coefficient", [&] { return cauchy(n, true).coefficient(w, HeckeBasis::e); }},
                         });
                       }});
      tasks.push_back({"H double: mu = alternating = rc-graphs = double rc-graphs = chains = Hecke", item_of(w, n),
                       [w, n] {
                         return all_equal({
                             {"mu operators", [&] { return hpolynomial(w, n, true); }},
                             {"alternating sum", [&] { return hpolynomial(w, n, true, HMethod::alternating); }},
                             {"right rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::absorb_product, Side::right, true); }},
                             {"left rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::absorb_product, Side::left, true); }},
                             {"marked rc-graphs",
                              [&] { return h_from_rcgraphs(w, n, RcVariant::marked_sum, Side::right, true); }},
                             {"double rc-graphs", [&] { return h_from_double(w, n, Side::right); }},
                             {"climbing chains", [&] { return h_from_chains(w, n, true); }},
                             {"Hecke coefficient", [&] { return cauchy(n, true).coefficient(w, HeckeBasis::tilde); }},
                         });
                       }});
    }
  }
}

// ---------------------------------------------------------------- bijections

std::string check_rcgraph_chain_bijection(const Permutation& w, int n) {
  const std::vector<MarkedChain> chains = enumerate_climbing_marked_chains(w, n, Marking::groth);
  const std::vector<MarkedRcGraph> graphs = enumerate_marked_rcgraphs(w, n, Side::left);
  if (chains.size() != graphs.size()) {
    return "counts differ: " + std::to_string(graphs.size()) + " graphs, " + std::to_string(chains.size()) + " chains";
  }
  std::vector<MarkedChain> images;
  for (const MarkedRcGraph& R : graphs) {
    MarkedChain c = rcgraph_to_chain(R);
    if (!is_climbing(c, n) || !valid_marking(c, Marking::groth)) return "image is not a climbing marked chain";
    if (static_cast<int>(R.marks.size()) != c.length() - c.marks()) return "marks not preserved";
    const MarkedRcGraph back = chain_to_rcgraph(c, n);
    if (!(back.base == R.base) || back.marks != R.marks) return "inverse does not return the rc-graph";
    images.push_back(std::move(c));
  }
  for (const MarkedChain& c : chains) {
    if (std::count(images.begin(), images.end(), c) != 1) return "chain not hit exactly once";
  }
  return {};
}

std::string check_psi_bijection(const Permutation& w, int n) {
  if (w(1) == n) return {};
  const std::vector<LsIndex> targets = ls_indices(w, n);
  std::vector<LsIndex> images;
  for (const MarkedChain& c : marked_chains_to_top(w, n)) {
    const LsIndex x = psi_chain_index(c, n);
    if (x.power != n - 1 - c.marks()) return "power mismatch";
    if (x.sign != c.sign()) return "sign mismatch";
    if (!(psi_inverse(w, n, x.P, x.Q) == c)) return "inverse does not return the chain";
    if (std::find(targets.begin(), targets.end(), x) == targets.end()) return "image is not an admissible index";
    if (std::find(images.begin(), images.end(), x) != images.end()) return "two chains share an image";
    images.push_back(x);
  }
  if (images.size() != targets.size()) return "not surjective";
  return {};
}

std::string check_transpose(const Permutation& w, int n) {
  const std::vector<MarkedRcGraph> right = enumerate_marked_rcgraphs(w, n, Side::right);
  const std::vector<MarkedRcGraph> left = enumerate_marked_rcgraphs(w.inverse(), n, Side::left);
  if (right.size() != left.size()) return "cardinalities differ";
  for (const MarkedRcGraph& R : right) {
    const RcGraph T = R.base.transpose();
    if (T.permutation() != w.inverse()) return "transpose is not an rc-graph of the inverse";
    const std::vector<Position> labs = absorbable(T, Side::left);
    for (const auto& [i, j] : R.marks) {
      if (std::find(labs.begin(), labs.end(), Position{j, i}) == labs.end()) return "mark not left absorbable";
    }
  }
  return {};
}

void bijections(int nmax, std::vector<Task>& tasks) {
  for (int n = 1; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      tasks.push_back({"marked rc-graphs <-> climbing marked chains", item_of(w, n),
                       [w, n] { return check_rcgraph_chain_bijection(w, n); }});
      tasks.push_back(
          {"psi: 1-Bruhat marked chains <-> phi-product indices", item_of(w, n), [w, n] { return check_psi_bijection(w, n); }});
      tasks.push_back({"transposition: right marked rc-graphs of w <-> left of w^-1", item_of(w, n),
                       [w, n] { return check_transpose(w, n); }});
    }
  }
}

// ---------------------------------------------------------------- identities

std::string check_hecke_relations(int n) {
  auto u = [n](int i) { return HeckeElement::u(n, i); };
  for (int i = 1; i < n; ++i) {
    HeckeElement neg = u(i);
    neg *= Polynomial(-1);
    if (!(hecke_mul(u(i), u(i)) == neg)) return "u_i^2 != -u_i";
    if (i + 1 < n && !(hecke_mul(hecke_mul(u(i), u(i + 1)), u(i)) == hecke_mul(hecke_mul(u(i + 1), u(i)), u(i + 1)))) {
      return "braid relation fails";
    }
    for (int j = i + 2; j < n; ++j) {
      if (!(hecke_mul(u(i), u(j)) == hecke_mul(u(j), u(i)))) return "commutation fails";
    }
  }
  return {};
}

std::string check_basis_change(const Permutation& w, int n) {
  HeckeElement tilde = HeckeElement::basis_element(n, Permutation{});
  for (int i : w.reduced_word()) tilde = hecke_mul(tilde, HeckeElement::v(n, i));
  const HeckeElement e = HeckeElement::basis_element(n, w);
  for (const Permutation& x : all_permutations(n)) {
    const bool below = bruhat_leq(x, w);
    if (tilde.coefficient(x) != Polynomial(below ? 1 : 0)) return "tilde e_w != sum of e below w";
    const int sign = (w.length() - x.length()) % 2 == 0 ? 1 : -1;
    if (e.coefficient(x, HeckeBasis::tilde) != Polynomial(below ? sign : 0)) return "e_w has the wrong tilde expansion";
  }
  if (!(HeckeElement::from_coefficients(n, e.coefficients(HeckeBasis::tilde), HeckeBasis::tilde) == e)) {
    return "tilde round trip fails";
  }
  return {};
}

std::string check_g_cauchy(const Permutation& w, int n) {
  Polynomial sum;
  for (const Permutation& u : all_permutations(n)) {
    for (const Permutation& v : all_permutations(n)) {
      const auto [prod, absorbed] = hecke_product(v, u);
      if (prod != w) continue;
      const int sign = (u.length() + v.length() - w.length()) % 2 == 0 ? 1 : -1;
      sum.add_scaled(grothendieck(u) * x_to_y(grothendieck(v.inverse())), sign);
      (void)absorbed;
    }
  }
  return sum == grothendieck_double(w) ? "" : "sum over e_v e_u = +-e_w differs from G_w(x;y)";
}

std::string check_h_cauchy(const Permutation& w, int n) {
  Polynomial sum;
  for (const Permutation& u : all_permutations(n)) {
    for (const Permutation& v : all_permutations(n)) {
      if (demazure_product(v, u) == w) sum += hpolynomial(u, n, false) * x_to_y(hpolynomial(v.inverse(), n, false));
    }
  }
  return sum == hpolynomial(w, n, true) ? "" : "sum over Demazure products differs from H_w(x;y)";
}

std::string check_tilde_symbolic(const Permutation& w, int n) {
  const TildeSubstitution t = rational_substitute_tilde(grothendieck_double(w));
  Polynomial lhs = hpolynomial(w, n, true);
  for (const auto& [v, d] : t.powers) lhs *= (Polynomial::variable(v) - Polynomial(1)).pow(d);
  Polynomial rhs = hpolynomial(Permutation{}, n, true) * t.numerator;
  if (w.length() % 2 == 1) rhs = -rhs;
  return lhs == rhs ? "" : "cleared identity fails";
}

std::string check_tilde_points(const Permutation& w, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (int k = 0; k < 20; ++k) {
    std::map<Variable, Rational> point, tilde;
    for (Alphabet a : {Alphabet::x(), Alphabet::y()}) {
      for (int i = 1; i <= n; ++i) {
        Rational r;
        do {
          r = Rational(num(rng), den(rng));
          r.canonicalize();
        } while (r == 1);
        point[{a, i}] = r;
        tilde[{a, i}] = r / (r - 1);
      }
    }
    Rational rhs = hpolynomial(Permutation{}, n, true).eval(point) * grothendieck_double(w).eval(tilde);
    if (w.length() % 2 == 1) rhs = -rhs;
    if (hpolynomial(w, n, true).eval(point) != rhs) return "fails at a rational point";
  }
  return {};
}

std::string check_lemma_5_3(const Permutation& w, int n) {
  const int N = 2 * n - 1;
  const BasisExpansion full = structure_constants(w, r_cycle(1, n - 1, N), N);
  for (int j = 1; j < n; ++j) {
    const BasisExpansion part = structure_constants(w, r_cycle(1, n - j, N), N);
    for (const Permutation& v : all_permutations(n - 1)) {
      if (full[xi(1, j - 1, v, n - 1)] != part[prefix_max(n, v)]) {
        return "j=" + std::to_string(j) + " v=" + v.to_string(n - 1);
      }
    }
  }
  return {};
}

void identities(int nmax, std::vector<Task>& tasks) {
  for (int n = 1; n <= std::min(nmax, 4); ++n) {
    tasks.push_back({"0-Hecke relations", "n=" + std::to_string(n), [n] { return check_hecke_relations(n); }});
  }
  unsigned seed = 1;
  for (int n = 1; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const std::string item = item_of(w, n);
      tasks.push_back({"basis change e <-> tilde e", item, [w, n] { return check_basis_change(w, n); }});
      tasks.push_back({"G symmetry G_w(x;y) = G_{w^-1}(y;x)", item, [w] {
                         return grothendieck_double(w) == x_to_y(grothendieck_double(w.inverse())) ? "" : "asymmetric";
                       }});
      tasks.push_back({"H symmetry H_w(x;y) = H_{w^-1}(y;x)", item, [w, n] {
                         return hpolynomial(w, n, true) == x_to_y(hpolynomial(w.inverse(), n, true)) ? "" : "asymmetric";
                       }});
      tasks.push_back({"G Cauchy formula", item, [w, n] { return check_g_cauchy(w, n); }});
      tasks.push_back({"H Cauchy formula", item, [w, n] { return check_h_cauchy(w, n); }});
      if (n <= 3) {
        tasks.push_back({"H_w = +-H_e G_w(x~;y~), cleared denominators", item, [w, n] { return check_tilde_symbolic(w, n); }});
      }
      tasks.push_back({"H_w = +-H_e G_w(x~;y~), rational points", item,
                       [w, n, s = seed++] { return check_tilde_points(w, n, s); }});
      if (n >= 2 && n <= 4) {
        tasks.push_back({"c^{(n-1+j).v}_{w,r[1,n-1]} = c^{n.v}_{w,r[1,n-j]}", item, [w, n] { return check_lemma_5_3(w, n); }});
      }
    }
  }
}

// ---------------------------------------------------------------- substitution

std::vector<std::pair<std::vector<int>, std::vector<int>>> two_part_splits(int n) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    std::vector<int> P, Q;
    for (int i = 1; i <= n; ++i) ((mask >> (i - 1)) & 1 ? P : Q).push_back(i);
    out.emplace_back(P, Q);
  }
  return out;
}

const Polynomial& family_source(Family f, const Permutation& w, int n) {
  if (f == Family::grothendieck) return grothendieck(w);
  if (f == Family::schubert) return schubert(w);
  return hpolynomial(w, n, false);
}

std::string check_first_variable(const Permutation& w, int n) {
  const SubstitutionExpansion chains = substitute_first_variable(w, n, FirstVariableMethod::chains);
  if (!(substitute_first_variable(w, n, FirstVariableMethod::constants) == chains)) return "constants differ from chains";
  if (!(substitute_first_variable(w, n, FirstVariableMethod::phi) == chains)) return "phi product differs from chains";
  std::vector<int> rest;
  for (int i = 2; i <= n; ++i) rest.push_back(i);
  const Polynomial direct = specialize(grothendieck(w), SetComposition({{1}, rest}), {Alphabet::y(), Alphabet::x()});
  return assemble(chains) == direct ? "" : "does not reassemble";
}

std::string check_single(const Permutation& w, int n) {
  for (int q = 1; q < n; ++q) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i) {
      if (i != q) rest.push_back(i);
    }
    const Polynomial direct = specialize(grothendieck(w), SetComposition({{q}, rest}), {Alphabet::y(), Alphabet::x()});
    if (assemble(substitute_single(w, q, n)) != direct) return "q=" + std::to_string(q);
  }
  return {};
}

std::string check_two_set(const Permutation& w, int n, Family f) {
  for (const auto& [P, Q] : two_part_splits(n)) {
    const SetComposition A({P, Q});
    const Polynomial direct = specialize(family_source(f, w, n), A, {Alphabet::y(), Alphabet::z()});
    if (assemble(two_set_decomposition(w, P, Q, f)) != direct) return "split " + Json(A.parts()).dump();
  }
  return {};
}

std::string check_h_congruence(const Permutation& w, int n) {
  for (const auto& [P, Q] : two_part_splits(n)) {
    const SubstitutionExpansion e = two_set_decomposition(w, P, Q, Family::h);
    const int a = e.ranks[0], b = e.ranks[1];
    const SetComposition B = extend_composition(SetComposition({P, Q}), {a, b});
    const Polynomial pulled = specialize(hpolynomial(w, a + b, false), B, {Alphabet::y(), Alphabet::z()});
    if (!(h_to_grothendieck(e).terms == expand_product_grothendieck(pulled, e.alphabets, e.ranks).terms)) {
      return "congruence fails";
    }
  }
  return {};
}

std::string check_h_exact(const Permutation& w, int n, const SetComposition& A) {
  const SubstitutionExpansion e = h_decomposition_exact(w, A);
  return assemble(e) == specialize(hpolynomial(w, n, false), A, e.alphabets) ? "" : "reconstruction fails";
}

std::string check_multi(const Permutation& w, int n, const SetComposition& A) {
  std::vector<Alphabet> targets;
  for (std::size_t i = 0; i < A.size(); ++i) targets.push_back(Alphabet::family(static_cast<int>(i) + 1));
  for (Family f : {Family::grothendieck, Family::schubert}) {
    if (assemble(multi_set_decomposition(w, A, f)) != specialize(family_source(f, w, n), A, targets)) {
      return f == Family::grothendieck ? "G reconstruction fails" : "S reconstruction fails";
    }
  }
  return {};
}

// Interval compositions of [n] with at least three parts.
std::vector<std::vector<int>> interval_cuts(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> cuts;
    for (int i = 1; i < n; ++i) {
      if ((mask >> (i - 1)) & 1) cuts.push_back(i);
    }
    cuts.push_back(n);
    out.push_back(cuts);
  }
  return out;
}

SetComposition intervals(const std::vector<int>& cuts) {
  std::vector<std::vector<int>> parts;
  int lo = 1;
  for (int c : cuts) {
    std::vector<int> part;
    for (int x = lo; x <= c; ++x) part.push_back(x);
    parts.push_back(part);
    lo = c + 1;
  }
  return SetComposition(std::move(parts));
}

std::string check_extension_independence(int k) {
  std::vector<std::vector<int>> Ps;
  for (int mask = 0; mask < (1 << (2 * k)); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> P;
    for (int i = 1; i <= 2 * k; ++i) {
      if ((mask >> (i - 1)) & 1) P.push_back(i);
    }
    Ps.push_back(P);
  }
  auto complement = [k](const std::vector<int>& P) {
    std::vector<int> Q;
    for (int i = 1; i <= 2 * k; ++i) {
      if (std::find(P.begin(), P.end(), i) == P.end()) Q.push_back(i);
    }
    return Q;
  };
  auto head = [k](const std::vector<int>& P) {
    std::vector<int> h;
    for (int x : P) {
      if (x <= k) h.push_back(x);
    }
    return h;
  };
  const std::vector<Permutation> Sk = all_permutations(k);
  for (const Permutation& w : Sk) {
    std::map<std::vector<int>, std::vector<std::vector<int>>> groups;
    for (const std::vector<int>& P : Ps) groups[head(P)].push_back(P);
    for (const auto& [h, members] : groups) {
      std::optional<std::map<std::pair<Permutation, Permutation>, Integer>> ref;
      for (const std::vector<int>& P : members) {
        const Permutation eps = epsilon(P, complement(P));
        const BasisExpansion c = structure_constants(w, eps, 2 * k);
        std::map<std::pair<Permutation, Permutation>, Integer> table;
        for (const Permutation& u : Sk) {
          for (const Permutation& v : Sk) table[{u, v}] = c[cross(u, v, k) * eps];
        }
        if (!ref) {
          ref = table;
        } else if (*ref != table) {
          return "w=" + w.to_string(k) + " differs between extensions";
        }
      }
    }
  }
  return {};
}

std::string check_monomial_certificates(const Permutation& w, int n) {
  std::vector<int> l(n, 0);
  // Odometer over 0 <= l_i <= n - i.
  for (;;) {
    const MonomialCertificate c = schubert_coefficient_as_constant(w, l, n);
    if (c.constant != c.coefficient) return "mismatch at exponent " + Json(l).dump();
    int i = 0;
    while (i < n && ++l[i] > n - 1 - i) l[i++] = 0;
    if (i == n) break;
  }
  return {};
}

void substitution(int nmax, std::vector<Task>& tasks) {
  for (int n = 2; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const std::string item = item_of(w, n);
      tasks.push_back({"first variable: chains = constants = phi = specialization", item,
                       [w, n] { return check_first_variable(w, n); }});
      if (n > 5) continue;
      tasks.push_back({"single variable at every position", item, [w, n] { return check_single(w, n); }});
      tasks.push_back(
          {"two-set G reconstruction", item, [w, n] { return check_two_set(w, n, Family::grothendieck); }});
      tasks.push_back({"two-set S reconstruction", item, [w, n] { return check_two_set(w, n, Family::schubert); }});
      if (n > 4) continue;
      tasks.push_back({"two-set H display modulo the ideals", item, [w, n] { return check_h_congruence(w, n); }});
      for (const auto& [P, Q] : two_part_splits(n)) {
        const SetComposition A({P, Q});
        tasks.push_back({"exact H decomposition", item + " " + Json(A.parts()).dump(),
                         [w, n, A] { return check_h_exact(w, n, A); }});
      }
      for (const std::vector<int>& cuts : interval_cuts(n)) {
        if (cuts.size() < 3) continue;
        const SetComposition A = intervals(cuts);
        tasks.push_back({"multi-set G and S reconstruction", item + " " + Json(A.parts()).dump(),
                         [w, n, A] { return check_multi(w, n, A); }});
      }
      tasks.push_back({"Schubert coefficients as structure constants", item,
                       [w, n] { return check_monomial_certificates(w, n); }});
    }
  }
  for (int n = 1; n <= nmax; ++n) {
    for (const std::vector<int>& cuts : interval_cuts(n)) {
      tasks.push_back({"shape of epsilon(A')", Json(cuts).dump(), [cuts] {
                         return quiver_epsilon_shape(cuts).shape == shape(epsilon(interval_extension(cuts)), cuts.back())
                                    ? ""
                                    : "shape differs";
                       }});
    }
  }
  for (int k = 1; k <= std::min(nmax, 3); ++k) {
    tasks.push_back({"extension independence of two-set constants", "k=" + std::to_string(k),
                     [k] { return check_extension_independence(k); }});
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"cross-constructions", "bijections", "identities", "substitution"};
  return names;
}

VerifyReport run_verify(const std::string& suite, int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");
  std::vector<Task> tasks;
  if (suite == "cross-constructions") {
    cross_constructions(nmax, tasks);
  } else if (suite == "bijections") {
    bijections(nmax, tasks);
  } else if (suite == "identities") {
    identities(nmax, tasks);
  } else if (suite == "substitution") {
    substitution(nmax, tasks);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return {suite, nmax, run_tasks(tasks)};
}

}  // namespace kschubert
