#pragma once

#include <map>
#include <vector>

#include "kschubert/perm.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

enum class OperatorKind { partial, pi, mu };

/// s_i acting on the x alphabet by exchanging x_i and x_{i+1}.
Polynomial swap_variables(int i, const Polynomial& p);
/// (p - s_i p) / (x_i - x_{i+1}) by synthetic division; throws on a remainder.
Polynomial divided_difference(int i, const Polynomial& p);
Polynomial apply(OperatorKind kind, int i, const Polynomial& p);
/// Operator product O_{i_1} ... O_{i_r} applied to p, the last letter acting first.
Polynomial apply_word(OperatorKind kind, const std::vector<int>& word, const Polynomial& p);
/// Same along the canonical reduced word of w.
Polynomial apply_word(OperatorKind kind, const Permutation& w, const Polynomial& p);

/// Linear combination of Grothendieck classes with polynomial coefficients.
using ClassExpansion = std::map<Permutation, Polynomial>;

/// phi_i G_w = G_{s_i w} - G_w when s_i w < w, and 0 otherwise.
ClassExpansion apply_phi(int i, const ClassExpansion& expansion);

}  // namespace kschubert
