#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kschubert/basis.hpp"
#include "kschubert/chains.hpp"
#include "kschubert/perm.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

/// Which polynomial family a decomposition expands.
enum class Family { grothendieck, schubert, h };

/// (power of the auxiliary variable, one permutation per factor).
struct SubstKey {
  int power = 0;
  std::vector<Permutation> perms;
  friend bool operator==(const SubstKey&, const SubstKey&) = default;
  friend auto operator<=>(const SubstKey&, const SubstKey&) = default;
};

/// sum c * t^power * prod_i F_{perms[i]}(alphabets[i]).
struct SubstitutionExpansion {
  Family family = Family::grothendieck;
  /// Alphabet of the single variable t (first variable of it), if any.
  std::optional<Alphabet> power_alphabet;
  std::vector<Alphabet> alphabets;
  /// Ambient rank per factor; H polynomials depend on it.
  std::vector<int> ranks;
  std::map<SubstKey, Integer> terms;

  Integer operator[](const SubstKey& k) const;
  friend bool operator==(const SubstitutionExpansion&, const SubstitutionExpansion&) = default;
};

/// Reassembles the expansion as a polynomial.
Polynomial assemble(const SubstitutionExpansion& e);

enum class FirstVariableMethod { chains, constants, phi };

/// G_w(y, x_1, ..., x_{n-1}) as sum c y^j G_v(x), v in S_{n-1}; phi defers to ls_substitution.
SubstitutionExpansion substitute_first_variable(const Permutation& w, int n,
                                                FirstVariableMethod method = FirstVariableMethod::chains);
/// G_w(x_1, ..., x_{q-1}, y, x_q, ...) read from c^{xi_{q,j}(u)}_{w, r_[q, n-q+1]}.
SubstitutionExpansion substitute_single(const Permutation& w, int q, int n);
/// prod_{i=j}^{n-2} (1 + y phi_i) y^{j-1} G_{st(w)}, j = w(1); the empty product is 1.
SubstitutionExpansion ls_substitution(const Permutation& w, int n);

/// Index of a term of the expanded phi product.
struct LsIndex {
  std::vector<int> P;  // increasing
  std::vector<int> Q;  // increasing
  Permutation v;       // v(P)
  int power = 0;       // j - 1 + |P| + |Q|
  int sign = 1;        // (-1)^{|Q|}
  friend bool operator==(const LsIndex&, const LsIndex&) = default;
};

/// All admissible (P, Q) for w: the P-chain descends, each q in Q is a descent
/// of the permutation reached when the phi with index q acts.
std::vector<LsIndex> ls_indices(const Permutation& w, int n);
/// gamma -> (P, Q) with tau_i = w_{i-1}(1) - 1.
LsIndex psi_chain_index(const MarkedChain& chain, int n);
/// Inverse of psi_chain_index; throws when (P, Q) is not admissible.
MarkedChain psi_inverse(const Permutation& w, int n, const std::vector<int>& P, const std::vector<int>& Q);

/// Degree bounds: smallest a with p in R_a for the given alphabet (at least floor).
int minimal_rank(const Polynomial& p, Alphabet a, int floor);

/// psi_{P,Q}: x_P -> y, x_Q -> z, expanded over products F_u(y) F_v(z).
/// For Family::h the coefficients are c^{w0 w}_{eps, w0 (u x v) eps} in S_{a+b};
/// they expand psi_{P',Q'}(H_w) with H_w taken in rank a+b, modulo I_a (x) I_b.
SubstitutionExpansion two_set_decomposition(const Permutation& w, const std::vector<int>& P, const std::vector<int>& Q,
                                            Family family = Family::grothendieck);
/// The canonical extension used by the decompositions.
SetComposition extend_composition(const SetComposition& A, const std::vector<int>& beta);
/// psi_{A} with targets Y1, ..., Ys.
SubstitutionExpansion multi_set_decomposition(const Permutation& w, const SetComposition& A,
                                              Family family = Family::grothendieck);
/// Exact psi_A(H_w) for H_w in rank m: the alternating sum over v >= w of the
/// Grothendieck decompositions, rewritten through G_u = sum_{u' >= u} H_{u'}.
SubstitutionExpansion h_decomposition_exact(const Permutation& w, const SetComposition& A);
/// Rewrites an H expansion over products of G_u, rank by rank.
SubstitutionExpansion h_to_grothendieck(const SubstitutionExpansion& e);
/// Expansion of p over products G_{u^1}(alphabets[0]) ... with u^i in S_{ranks[i]};
/// dropping the other terms is reduction modulo the ideals I_{ranks[i]}.
SubstitutionExpansion expand_product_grothendieck(const Polynomial& p, const std::vector<Alphabet>& alphabets,
                                                  const std::vector<int>& ranks);
/// Sorted-interval extension: A'_i = (a_{i-1}, a_i] u (b_{i-1}, b_i], b_i = (i+1)m - a_1 - ... - a_i.
SetComposition interval_extension(const std::vector<int>& cuts);

struct QuiverShape {
  int descent = 0;
  std::vector<int> shape;
};
/// Shape of epsilon(A') for the interval extension with cuts 0 < a_1 < ... < a_s = m.
QuiverShape quiver_epsilon_shape(const std::vector<int>& cuts);

/// lambda = (C(m,2), ..., 2m-3, m-1, 0).
std::vector<int> staircase_lambda(int m);
struct MonomialCertificate {
  Integer constant;      // c^{w(lambda',m)}_{w, w(lambda,m)} in the Schubert basis
  Integer coefficient;   // coefficient of x^l in S_w
  std::vector<int> lambda, lambda_prime;
};
MonomialCertificate schubert_coefficient_as_constant(const Permutation& w, const std::vector<int>& l, int m);

}  // namespace kschubert
