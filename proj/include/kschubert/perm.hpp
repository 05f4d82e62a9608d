#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kschubert {

/// Permutation of S_infinity in one-line notation, 1-indexed.
/// Trailing fixed points are trimmed, so equality is the stable one.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity() { return {}; }
  static Permutation longest(int n);
  static Permutation simple(int i);
  static Permutation transposition(int a, int b);
  /// Parse "1,4,3,2" or "1432" (the latter only for n <= 9).
  static Permutation parse(const std::string& text);

  /// w(i); fixed beyond the support.
  int operator()(int i) const {
    return i >= 1 && i <= static_cast<int>(values_.size()) ? values_[i - 1] : i;
  }
  /// Smallest n with w in S_n (0 for the identity).
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  /// One-line notation padded with fixed points to length n (n >= size()).
  std::vector<int> one_line(int n) const;

  int length() const;
  Permutation inverse() const;
  /// Composition (u * v)(i) = u(v(i)); right multiplication acts on positions.
  Permutation operator*(const Permutation& other) const;
  bool is_identity() const { return values_.empty(); }

  std::vector<int> code() const;
  static Permutation from_code(const std::vector<int>& code);
  /// Right descents i with w(i) > w(i+1).
  std::vector<int> descents() const;
  /// A reduced word (i_1..i_r) with w = s_{i_1} ... s_{i_r}.
  std::vector<int> reduced_word() const;

  std::string to_string(int n = 0) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  void trim();
  std::vector<int> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

/// All permutations of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

inline int length(const Permutation& w) { return w.length(); }

/// Tableau criterion; both arguments are viewed in S_n, n the larger support.
bool bruhat_leq(const Permutation& u, const Permutation& v);

struct BruhatCover {
  Permutation source;
  int a = 0;
  int b = 0;
  Permutation target;
};

/// Covers w < w t_{a,b} inside S_n; k > 0 restricts to a <= k < b.
std::vector<BruhatCover> bruhat_covers(const Permutation& w, int n, int k = 0);
/// Length-additive test for w t_{a,b} covering w.
bool is_cover(const Permutation& w, int a, int b);

/// Standardized subsequence of w at the (sorted) positions P.
Permutation pattern_restrict(const Permutation& w, const std::vector<int>& positions);
/// st(w) = w restricted to positions 2..n.
Permutation standardize_drop_first(const Permutation& w, int n);
/// u x v with u in S_m.
Permutation cross(const Permutation& u, const Permutation& v, int m);

/// Ordered set composition; parts keep their order, elements sorted.
class SetComposition {
 public:
  SetComposition() = default;
  explicit SetComposition(std::vector<std::vector<int>> parts);
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int total() const { return total_; }
  std::vector<int> shape() const;
  std::size_t size() const { return parts_.size(); }
  const std::vector<int>& operator[](std::size_t i) const { return parts_[i]; }

 private:
  std::vector<std::vector<int>> parts_;
  int total_ = 0;
};

Permutation epsilon(const SetComposition& blocks);
Permutation zeta(const SetComposition& blocks);
Permutation epsilon(const std::vector<int>& P, const std::vector<int>& Q);
Permutation zeta(const std::vector<int>& P, const std::vector<int>& Q);

/// r_{[k,p]} = s_{k+p-1} ... s_k, checked against the ambient m.
Permutation r_cycle(int k, int p, int m);
/// n.v = [n, v_1, ..., v_{n-1}] for v in S_{n-1}.
Permutation prefix_max(int n, const Permutation& v);
/// xi_{q,j}(u) for u in S_n.
Permutation xi(int q, int j, const Permutation& u, int n);

Permutation grassmannian(const std::vector<int>& lambda, int k);
/// Partition of a permutation Grassmannian at k; throws otherwise.
std::vector<int> shape(const Permutation& w, int k);

/// omega_0 * u inside S_n (left multiplication).
Permutation left_longest(const Permutation& u, int n);
int mobius_interval_sum(const Permutation& w, const Permutation& u, int n);

}  // namespace kschubert
