#include "kschubert/subst.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kschubert/ops.hpp"

namespace kschubert {

Integer SubstitutionExpansion::operator[](const SubstKey& k) const {
  auto it = terms.find(k);
  return it == terms.end() ? Integer(0) : it->second;
}

namespace {

Polynomial in_alphabet(const Polynomial& p, Alphabet a) {
  if (a == Alphabet::x()) return p;
  return p.rename([a](Variable v) { return Variable{a, v.index}; });
}

Polynomial family_polynomial(Family f, const Permutation& u, int rank) {
  switch (f) {
    case Family::grothendieck: return grothendieck(u);
    case Family::schubert: return schubert(u);
    case Family::h: return hpolynomial(u, rank, false);
  }
  throw std::logic_error("unknown family");
}

void drop_zeros(std::map<SubstKey, Integer>& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

// Splits t into blocks of sizes beta when t preserves each consecutive block.
bool split_blocks(const Permutation& t, const std::vector<int>& beta, std::vector<Permutation>& out) {
  out.clear();
  int offset = 0;
  for (int b : beta) {
    std::vector<int> vals;
    for (int i = 1; i <= b; ++i) {
      const int v = t(offset + i) - offset;
      if (v < 1 || v > b) return false;
      vals.push_back(v);
    }
    out.emplace_back(std::move(vals));
    offset += b;
  }
  return true;
}

SubstitutionExpansion first_variable_shell(int n) {
  SubstitutionExpansion e;
  e.power_alphabet = Alphabet::y();
  e.alphabets = {Alphabet::x()};
  e.ranks = {std::max(n - 1, 1)};
  return e;
}

}  // namespace

Polynomial assemble(const SubstitutionExpansion& e) {
  Polynomial total;
  for (const auto& [key, c] : e.terms) {
    Polynomial term(c);
    if (key.power > 0) {
      if (!e.power_alphabet) throw std::invalid_argument("power without an auxiliary alphabet");
      term *= Polynomial::monomial(Monomial::power(Variable{*e.power_alphabet, 1}, key.power));
    }
    for (std::size_t i = 0; i < key.perms.size(); ++i) {
      term *= in_alphabet(family_polynomial(e.family, key.perms[i], e.ranks.at(i)), e.alphabets.at(i));
    }
    total += term;
  }
  return total;
}

SubstitutionExpansion substitute_first_variable(const Permutation& w, int n, FirstVariableMethod method) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  if (method == FirstVariableMethod::phi) return ls_substitution(w, n);
  SubstitutionExpansion e = first_variable_shell(n);
  if (method == FirstVariableMethod::chains) {
    for (const MarkedChain& c : marked_chains_to_top(w, n)) {
      e.terms[{n - 1 - c.marks(), {standardize_drop_first(c.end(), n)}}] += c.sign();
    }
  } else {
    // c^{n.v}_{w, r_[1, n-j]} y^{j-1}; j = n is the identity class.
    for (int j = 1; j <= n; ++j) {
      const Permutation r = r_cycle(1, n - j, n);
      for (const auto& [x, c] : structure_constants(w, r, n).coeffs) {
        if (x(1) == n) e.terms[{j - 1, {standardize_drop_first(x, n)}}] += c;
      }
    }
  }
  drop_zeros(e.terms);
  return e;
}

SubstitutionExpansion substitute_single(const Permutation& w, int q, int n) {
  if (w.size() > n || q < 1 || q >= n) throw std::invalid_argument("need w in S_n and 1 <= q < n");
  const int N = 2 * n - q + 1;
  SubstitutionExpansion e = first_variable_shell(n);
  e.ranks = {n};
  const Permutation eps = r_cycle(q, n - q + 1, N);
  std::vector<Permutation> uv;
  for (const auto& [x, c] : structure_constants(w, eps, N).coeffs) {
    // Indices outside the section u x v . eps do not enter the formula.
    if (!split_blocks(x * eps.inverse(), {n, n - q + 1}, uv)) continue;
    const int j = x(q) - n - 1;
    if (j < 0 || x != xi(q, j, uv[0], n)) throw std::logic_error("structure constant outside the xi family");
    e.terms[{j, {uv[0]}}] += c;
  }
  drop_zeros(e.terms);
  return e;
}

SubstitutionExpansion ls_substitution(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  const int j = w(1);
  ClassExpansion E;
  E[standardize_drop_first(w, n)] = Polynomial::monomial(Monomial::power(Variable{Alphabet::y(), 1}, j - 1));
  const Polynomial y = Y(1);
  // Rightmost factor first: i = n-2 acts before i = j.
  for (int i = n - 2; i >= j; --i) {
    for (auto& [v, p] : apply_phi(i, E)) {
      Polynomial& slot = E[v];
      slot += y * p;
    }
    for (auto it = E.begin(); it != E.end();) {
      it = it->second.is_zero() ? E.erase(it) : std::next(it);
    }
  }
  SubstitutionExpansion e = first_variable_shell(n);
  for (const auto& [v, p] : E) {
    for (const Term& t : p.terms()) e.terms[{t.monomial.degree(), {v}}] += t.coeff;
  }
  drop_zeros(e.terms);
  return e;
}

namespace {

bool descends(const Permutation& cur, int p) { return (Permutation::simple(p) * cur).length() == cur.length() - 1; }

// Permutation after the phi with indices in P greater than q have acted.
Permutation state_before(const Permutation& u, const std::vector<int>& P, int q) {
  Permutation cur = u;
  for (auto it = P.rbegin(); it != P.rend() && *it > q; ++it) cur = Permutation::simple(*it) * cur;
  return cur;
}

bool admissible(const Permutation& u, const std::vector<int>& P, const std::vector<int>& Q, Permutation& v) {
  Permutation cur = u;
  for (auto it = P.rbegin(); it != P.rend(); ++it) {
    if (!descends(cur, *it)) return false;
    cur = Permutation::simple(*it) * cur;
  }
  for (int q : Q) {
    if (!descends(state_before(u, P, q), q)) return false;
  }
  v = cur;
  return true;
}

}  // namespace

std::vector<LsIndex> ls_indices(const Permutation& w, int n) {
  const int j = w(1);
  const Permutation u = standardize_drop_first(w, n);
  const std::vector<int> R = range(j, n - 2);
  std::vector<LsIndex> out;
  // Each index of R goes to P, to Q, or to neither.
  std::size_t total = 1;
  for (std::size_t k = 0; k < R.size(); ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> P, Q;
    std::size_t c = code;
    for (int r : R) {
      if (c % 3 == 1) P.push_back(r);
      if (c % 3 == 2) Q.push_back(r);
      c /= 3;
    }
    Permutation v;
    if (!admissible(u, P, Q, v)) continue;
    const int power = j - 1 + static_cast<int>(P.size() + Q.size());
    out.push_back({P, Q, v, power, Q.size() % 2 == 0 ? 1 : -1});
  }
  return out;
}

LsIndex psi_chain_index(const MarkedChain& chain, int n) {
  const Permutation& w = chain.start;
  const int j = w(1);
  const std::vector<Permutation> ps = chain.perms();
  if (ps.back()(1) != n) throw std::invalid_argument("chain does not end at some n.v");
  std::vector<int> T, Q;
  for (std::size_t i = 0; i < chain.covers.size(); ++i) {
    if (chain.covers[i].a != 1) throw std::invalid_argument("not a 1-Bruhat chain");
    const int tau = ps[i](1) - 1;
    T.push_back(tau);
    if (!chain.covers[i].marked) Q.push_back(tau);
  }
  std::vector<int> P;
  for (int r = j; r <= n - 2; ++r) {
    if (std::find(T.begin(), T.end(), r) == T.end()) P.push_back(r);
  }
  std::sort(Q.begin(), Q.end());
  const int power = j - 1 + static_cast<int>(P.size() + Q.size());
  return {P, Q, standardize_drop_first(ps.back(), n), power, Q.size() % 2 == 0 ? 1 : -1};
}

MarkedChain psi_inverse(const Permutation& w, int n, const std::vector<int>& P, const std::vector<int>& Q) {
  const int j = w(1);
  std::vector<int> T;
  for (int r = j - 1; r <= n - 2; ++r) {
    if (std::find(P.begin(), P.end(), r) == P.end()) T.push_back(r);
  }
  MarkedChain chain{w, {}};
  Permutation cur = w;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const int target = i + 1 < T.size() ? T[i + 1] + 1 : n;
    int b = 1;
    while (b <= n && cur(b) != target) ++b;
    if (cur(1) != T[i] + 1 || b > n || !is_cover(cur, 1, b)) throw std::invalid_argument("(P, Q) is not admissible");
    const bool unmarked = std::find(Q.begin(), Q.end(), T[i]) != Q.end();
    chain.covers.push_back({1, b, !unmarked});
    cur = cur * Permutation::transposition(1, b);
  }
  for (int q : Q) {
    if (std::find(T.begin(), T.end(), q) == T.end()) throw std::invalid_argument("(P, Q) is not admissible");
  }
  if (!valid_marking(chain, Marking::groth)) throw std::invalid_argument("(P, Q) is not admissible");
  return chain;
}

int minimal_rank(const Polynomial& p, Alphabet a, int floor) {
  int r = floor;
  for (const Term& t : p.terms()) {
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v.alphabet == a) r = std::max(r, e + v.index);
    }
  }
  return r;
}

SetComposition extend_composition(const SetComposition& A, const std::vector<int>& beta) {
  if (beta.size() != A.size()) throw std::invalid_argument("one size per part required");
  std::vector<std::vector<int>> parts = A.parts();
  int next = A.total() + 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (beta[i] < static_cast<int>(parts[i].size())) throw std::invalid_argument("extension smaller than the part");
    while (static_cast<int>(parts[i].size()) < beta[i]) parts[i].push_back(next++);
  }
  return SetComposition(std::move(parts));
}

SetComposition interval_extension(const std::vector<int>& cuts) {
  if (cuts.empty()) throw std::invalid_argument("need at least one cut");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] <= (i == 0 ? 0 : cuts[i - 1])) throw std::invalid_argument("cuts must increase from 1");
  }
  const int m = cuts.back();
  std::vector<std::vector<int>> parts;
  int a_prev = 0, b_prev = m, sum = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    sum += cuts[i];
    const int b = static_cast<int>(i + 2) * m - sum;
    std::vector<int> part = range(a_prev + 1, cuts[i]);
    for (int x = b_prev + 1; x <= b; ++x) part.push_back(x);
    parts.push_back(std::move(part));
    a_prev = cuts[i];
    b_prev = b;
  }
  return SetComposition(std::move(parts));
}

QuiverShape quiver_epsilon_shape(const std::vector<int>& cuts) {
  interval_extension(cuts);  // validates the cuts
  const int m = cuts.back(), s = static_cast<int>(cuts.size());
  std::vector<int> a{0}, b{m};
  for (int i = 1; i <= s; ++i) {
    a.push_back(cuts[i - 1]);
    b.push_back((i + 1) * m - std::accumulate(cuts.begin(), cuts.begin() + i, 0));
  }
  QuiverShape out{m, {}};
  for (int i = 1; i < s; ++i) {
    const int gamma = b[s - i] - m;
    for (int k = 0; k < a[s + 1 - i] - a[s - i]; ++k) out.shape.push_back(gamma);
  }
  for (int k = 0; k < a[1]; ++k) out.shape.push_back(0);
  return out;
}

namespace {

bool is_interval_composition(const SetComposition& A) {
  int next = 1;
  for (const auto& part : A.parts()) {
    for (int x : part) {
      if (x != next++) return false;
    }
  }
  return true;
}

Permutation block_product(const std::vector<Permutation>& us, const std::vector<int>& beta) {
  std::vector<int> vals;
  int offset = 0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (int x : us[i].one_line(beta[i])) vals.push_back(x + offset);
    offset += beta[i];
  }
  return Permutation(std::move(vals));
}

Basis basis_of(Family f) { return f == Family::schubert ? Basis::schubert : Basis::grothendieck; }

const Polynomial& source_polynomial(Family f, const Permutation& w, int n) {
  switch (f) {
    case Family::grothendieck: return grothendieck(w);
    case Family::schubert: return schubert(w);
    case Family::h: return hpolynomial(w, n, false);
  }
  throw std::logic_error("unknown family");
}

// Core of both decompositions: B extends A, beta = |B|.
SubstitutionExpansion decompose(const Permutation& w, const SetComposition& B, const std::vector<Alphabet>& targets,
                                Family family) {
  const std::vector<int> beta = B.shape();
  const int N = B.total();
  const Permutation eps = epsilon(B);
  SubstitutionExpansion e;
  e.family = family;
  e.alphabets = targets;
  e.ranks = beta;
  if (family != Family::h) {
    std::vector<Permutation> us;
    for (const auto& [x, c] : structure_constants(w, eps, N, basis_of(family)).coeffs) {
      if (split_blocks(x * eps.inverse(), beta, us)) e.terms[{0, us}] += c;
    }
  } else {
    // c^{w0 w}_{eps, w0 u eps} over all u in S_beta.
    const Permutation w0 = Permutation::longest(N);
    const Permutation top = w0 * w;
    std::vector<std::vector<Permutation>> factors;
    for (int b : beta) factors.push_back(all_permutations(b));
    std::vector<std::size_t> idx(beta.size(), 0);
    for (;;) {
      std::vector<Permutation> us;
      for (std::size_t i = 0; i < beta.size(); ++i) us.push_back(factors[i][idx[i]]);
      const Integer c = structure_constants(eps, w0 * block_product(us, beta) * eps, N)[top];
      if (c != 0) e.terms[{0, us}] += c;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == factors[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  drop_zeros(e.terms);
  return e;
}

std::vector<int> h_ranks(const SetComposition& A, int N) {
  // x_{a_j} has exponent at most N - a_j, and must land below beta - j.
  std::vector<int> beta;
  for (const auto& part : A.parts()) {
    int r = static_cast<int>(part.size());
    for (std::size_t j = 0; j < part.size(); ++j) r = std::max(r, N - part[j] + static_cast<int>(j) + 1);
    beta.push_back(r);
  }
  return beta;
}

}  // namespace

SubstitutionExpansion two_set_decomposition(const Permutation& w, const std::vector<int>& P, const std::vector<int>& Q,
                                            Family family) {
  const SetComposition A({P, Q});
  const int N = A.total();
  if (w.size() > N) throw std::invalid_argument("permutation outside S_{m+n}");
  const std::vector<Alphabet> targets{Alphabet::y(), Alphabet::z()};
  std::vector<int> beta;
  if (family == Family::h) {
    beta = h_ranks(A, N);
  } else {
    const Polynomial image = specialize(source_polynomial(family, w, N), A, targets);
    beta = {minimal_rank(image, targets[0], static_cast<int>(A[0].size())),
            minimal_rank(image, targets[1], static_cast<int>(A[1].size()))};
  }
  return decompose(w, extend_composition(A, beta), targets, family);
}

SubstitutionExpansion multi_set_decomposition(const Permutation& w, const SetComposition& A, Family family) {
  const int m = A.total();
  if (w.size() > m) throw std::invalid_argument("permutation outside S_m");
  std::vector<Alphabet> targets;
  for (std::size_t i = 0; i < A.size(); ++i) targets.push_back(Alphabet::family(static_cast<int>(i) + 1));
  if (is_interval_composition(A)) {
    std::vector<int> cuts;
    for (const auto& part : A.parts()) cuts.push_back(part.back());
    return decompose(w, interval_extension(cuts), targets, family);
  }
  // H needs the rank condition on all of R_m, which the minimal ranks already meet.
  const std::vector<int> beta = family == Family::h ? h_ranks(A, m) : std::vector<int>(A.size(), m);
  return decompose(w, extend_composition(A, beta), targets, family);
}

namespace {

std::vector<Alphabet> target_alphabets(const SetComposition& A) {
  if (A.size() == 2) return {Alphabet::y(), Alphabet::z()};
  std::vector<Alphabet> t;
  for (std::size_t i = 0; i < A.size(); ++i) t.push_back(Alphabet::family(static_cast<int>(i) + 1));
  return t;
}

// Bruhat up-set of u inside S_n.
std::vector<Permutation> above(const Permutation& u, int n) {
  std::vector<Permutation> out;
  for (const Permutation& v : all_permutations(n)) {
    if (bruhat_leq(u, v)) out.push_back(v);
  }
  return out;
}

// Every product of one entry per factor list, with the accumulated sign.
template <class F>
void for_each_product(const std::vector<std::vector<std::pair<Permutation, int>>>& lists, F&& f) {
  std::vector<Permutation> cur;
  int sign = 1;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == lists.size()) {
      f(cur, sign);
      return;
    }
    for (const auto& [p, s] : lists[i]) {
      cur.push_back(p);
      sign *= s;
      self(self, i + 1);
      sign *= s;
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SubstitutionExpansion h_decomposition_exact(const Permutation& w, const SetComposition& A) {
  const int m = A.total();
  if (w.size() > m) throw std::invalid_argument("permutation outside S_m");
  const std::vector<int> beta = h_ranks(A, m);
  const SetComposition B = extend_composition(A, beta);
  const std::vector<Alphabet> targets = target_alphabets(A);
  SubstitutionExpansion out;
  out.family = Family::h;
  out.alphabets = targets;
  out.ranks = beta;
  for (const Permutation& v : above(w, m)) {
    const int sv = (v.length() - w.length()) % 2 == 0 ? 1 : -1;
    for (const auto& [key, c] : decompose(v, B, targets, Family::grothendieck).terms) {
      std::vector<std::vector<std::pair<Permutation, int>>> lists;
      for (std::size_t i = 0; i < key.perms.size(); ++i) {
        lists.emplace_back();
        for (const Permutation& u : above(key.perms[i], beta[i])) lists.back().push_back({u, 1});
      }
      for_each_product(lists, [&](const std::vector<Permutation>& us, int) { out.terms[{0, us}] += c * sv; });
    }
  }
  drop_zeros(out.terms);
  return out;
}

SubstitutionExpansion h_to_grothendieck(const SubstitutionExpansion& e) {
  if (e.family != Family::h) throw std::invalid_argument("expected an H expansion");
  SubstitutionExpansion out = e;
  out.family = Family::grothendieck;
  out.terms.clear();
  for (const auto& [key, c] : e.terms) {
    std::vector<std::vector<std::pair<Permutation, int>>> lists;
    for (std::size_t i = 0; i < key.perms.size(); ++i) {
      lists.emplace_back();
      for (const Permutation& v : above(key.perms[i], e.ranks.at(i))) {
        lists.back().push_back({v, (v.length() - key.perms[i].length()) % 2 == 0 ? 1 : -1});
      }
    }
    for_each_product(lists, [&](const std::vector<Permutation>& vs, int sign) {
      out.terms[{key.power, vs}] += c * sign;
    });
  }
  drop_zeros(out.terms);
  return out;
}

SubstitutionExpansion expand_product_grothendieck(const Polynomial& p, const std::vector<Alphabet>& alphabets,
                                                  const std::vector<int>& ranks) {
  if (alphabets.size() != ranks.size()) throw std::invalid_argument("one rank per alphabet required");
  // Peel one alphabet at a time; the remaining cofactor stays a polynomial.
  std::map<std::vector<Permutation>, Polynomial> cur{{{}, p}};
  for (std::size_t i = 0; i < alphabets.size(); ++i) {
    std::map<std::vector<Permutation>, Polynomial> next;
    for (const auto& [key, q] : cur) {
      std::map<std::vector<std::uint32_t>, Polynomial> by_rest;
      for (const Term& t : q.terms()) {
        Monomial here, rest;
        for (const auto& [v, e] : t.monomial.factors()) {
          if (v.alphabet == alphabets[i]) {
            here = here * Monomial::power(Variable{Alphabet::x(), v.index}, e);
          } else {
            rest = rest * Monomial::power(v, e);
          }
        }
        by_rest[rest.packed()].add_scaled(Polynomial::monomial(here), t.coeff);
      }
      for (const auto& [rest, part] : by_rest) {
        const Polynomial cofactor = Polynomial::monomial(Monomial::from_packed(rest));
        for (const auto& [u, c] : stable_expansion(part)) {
          if (u.size() > ranks[i]) continue;
          std::vector<Permutation> k = key;
          k.push_back(u);
          next[k].add_scaled(cofactor, c);
        }
      }
    }
    cur = std::move(next);
  }
  SubstitutionExpansion out;
  out.alphabets = alphabets;
  out.ranks = ranks;
  for (const auto& [key, q] : cur) {
    for (const Term& t : q.terms()) {
      if (!t.monomial.is_one()) throw std::invalid_argument("polynomial uses an alphabet outside the list");
      out.terms[{0, key}] += t.coeff;
    }
  }
  drop_zeros(out.terms);
  return out;
}

std::vector<int> staircase_lambda(int m) {
  std::vector<int> lam;
  for (int k = 1; k <= m; ++k) lam.push_back((m - k) * m - (m - k + 1) * (m - k) / 2);
  return lam;
}

MonomialCertificate schubert_coefficient_as_constant(const Permutation& w, const std::vector<int>& l, int m) {
  if (w.size() > m || static_cast<int>(l.size()) > m) throw std::invalid_argument("need w in S_m and m exponents");
  std::vector<int> ls = l;
  ls.resize(m, 0);
  for (int i = 1; i <= m; ++i) {
    if (ls[i - 1] < 0 || ls[i - 1] > m - i) throw std::invalid_argument("exponent l_i must lie in [0, m-i]");
  }
  MonomialCertificate out;
  out.lambda = staircase_lambda(m);
  out.lambda_prime = out.lambda;
  for (int k = 1; k <= m; ++k) out.lambda_prime[k - 1] += ls[m - k];
  const Permutation base = grassmannian(out.lambda, m), target = grassmannian(out.lambda_prime, m);
  out.constant = structure_constants(w, base, target.size(), Basis::schubert)[target];
  out.coefficient = schubert(w).coefficient(Monomial::from_exponents(Alphabet::x(), ls));
  return out;
}

}  // namespace kschubert
