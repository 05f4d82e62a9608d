#include "kschubert/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschubert {

namespace {

void check_rank(int n, const Permutation& w) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
}

}  // namespace

HeckeElement HeckeElement::basis_element(int n, const Permutation& w, const Polynomial& c) {
  check_rank(n, w);
  HeckeElement h(n);
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::u(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index outside H_n(0)");
  return basis_element(n, Permutation::simple(i));
}

HeckeElement HeckeElement::v(int n, int i) {
  HeckeElement h = u(n, i);
  h.add(Permutation(), 1);
  return h;
}

void HeckeElement::add(const Permutation& w, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Polynomial HeckeElement::coefficient(const Permutation& w, HeckeBasis basis) const {
  if (basis == HeckeBasis::e) {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Polynomial() : it->second;
  }
  const auto c = coefficients(basis);
  auto it = c.find(w);
  return it == c.end() ? Polynomial() : it->second;
}

std::map<Permutation, Polynomial> HeckeElement::coefficients(HeckeBasis basis) const {
  if (basis == HeckeBasis::e) return coeffs_;
  // e_w = sum_{w' <= w} (-1)^{l(w)-l(w')} tilde e_{w'}.
  std::map<Permutation, Polynomial> out;
  for (const Permutation& lower : all_permutations(n_)) {
    Polynomial c;
    for (const auto& [w, a] : coeffs_) {
      if (bruhat_leq(lower, w)) c.add_scaled(a, (w.length() - lower.length()) % 2 == 0 ? 1 : -1);
    }
    if (!c.is_zero()) out.emplace(lower, std::move(c));
  }
  return out;
}

HeckeElement HeckeElement::from_coefficients(int n, const std::map<Permutation, Polynomial>& c, HeckeBasis basis) {
  HeckeElement h(n);
  for (const auto& [w, a] : c) {
    check_rank(n, w);
    if (basis == HeckeBasis::e) {
      h.add(w, a);
    } else {
      // tilde e_w = sum_{w' <= w} e_{w'}.
      for (const Permutation& lower : all_permutations(n)) {
        if (bruhat_leq(lower, w)) h.add(lower, a);
      }
    }
  }
  return h;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [w, c] : other.coeffs_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Polynomial& c) {
  HeckeElement out(n_);
  for (const auto& [w, a] : coeffs_) out.add(w, a * c);
  return *this = std::move(out);
}

HeckeElement HeckeElement::times_u(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index outside H_n(0)");
  HeckeElement out(n_);
  for (const auto& [w, a] : coeffs_) {
    if (w(i) < w(i + 1)) {
      out.add(w * Permutation::simple(i), a);
    } else {
      out.add(w, -a);
    }
  }
  return out;
}

HeckeElement HeckeElement::u_times(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index outside H_n(0)");
  HeckeElement out(n_);
  const Permutation s = Permutation::simple(i);
  for (const auto& [w, a] : coeffs_) {
    const Permutation sw = s * w;
    if (sw.length() > w.length()) {
      out.add(sw, a);
    } else {
      out.add(w, -a);
    }
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  HeckeElement out(a.rank());
  for (const auto& [w, c] : b.coeffs()) {
    HeckeElement part = a;
    for (int i : w.reduced_word()) part = part.times_u(i);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElement cauchy_product(int n, bool dbl) {
  HeckeElement g = HeckeElement::basis_element(n, Permutation());
  for (int i = 1; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) {
      HeckeElement step = g.times_u(j);
      // Letter j in row i sits in column j - i + 1.
      step *= dbl ? ksum(X(i), Y(j - i + 1)) : X(i);
      g += step;
    }
  }
  return g;
}

std::pair<Permutation, int> evaluate_u_word(const std::vector<int>& word) {
  std::vector<int> v;
  int absorbed = 0;
  for (int a : word) {
    if (static_cast<int>(v.size()) < a + 1) {
      for (int k = static_cast<int>(v.size()) + 1; k <= a + 1; ++k) v.push_back(k);
    }
    if (v[a - 1] < v[a]) {
      std::swap(v[a - 1], v[a]);
    } else {
      ++absorbed;
    }
  }
  return {Permutation(std::move(v)), absorbed};
}

Permutation demazure(const std::vector<int>& word) { return evaluate_u_word(word).first; }

std::pair<Permutation, int> hecke_product(const Permutation& u, const Permutation& v) {
  std::vector<int> word = u.reduced_word();
  const std::vector<int> right = v.reduced_word();
  word.insert(word.end(), right.begin(), right.end());
  return evaluate_u_word(word);
}

Permutation demazure_product(const Permutation& u, const Permutation& v) { return hecke_product(u, v).first; }

bool absorbable_letter(const std::vector<int>& Q, const std::vector<int>& P, int r, Side side) {
  const int len = static_cast<int>(Q.size());
  std::vector<int> pos = P;
  std::sort(pos.begin(), pos.end());
  if (r < 1 || r > len || std::binary_search(pos.begin(), pos.end(), r)) {
    throw std::invalid_argument("r must be a position of Q outside P");
  }
  auto word_at = [&Q](const std::vector<int>& positions) {
    std::vector<int> w;
    for (int p : positions) w.push_back(Q.at(p - 1));
    return w;
  };
  const auto [base, base_absorbed] = evaluate_u_word(word_at(pos));
  if (base_absorbed != 0) throw std::invalid_argument("P is not a reduced subword");
  std::vector<int> T = pos;
  T.insert(std::upper_bound(T.begin(), T.end(), r), r);
  if (demazure(word_at(T)) != base) return false;
  int cancel = 0;
  for (int t : T) {
    if (t == r) continue;
    std::vector<int> rest;
    for (int s : T) {
      if (s != t) rest.push_back(s);
    }
    const auto [w, absorbed] = evaluate_u_word(word_at(rest));
    if (absorbed == 0 && w == base) {
      if (cancel != 0) throw std::logic_error("cancelling letter is not unique");
      cancel = t;
    }
  }
  if (cancel == 0) throw std::logic_error("no cancelling letter found");
  return side == Side::right ? cancel < r : cancel > r;
}

}  // namespace kschubert
