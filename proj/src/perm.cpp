#include "kschubert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kschubert {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[v] = 1;
  }
  trim();
}

void Permutation::trim() {
  while (!values_.empty() && values_.back() == static_cast<int>(values_.size())) {
    values_.pop_back();
  }
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int a, int b) {
  if (a < 1 || b < 1 || a == b) throw std::invalid_argument("bad transposition");
  std::vector<int> v(std::max(a, b));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in permutation");
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad permutation entry: " + item);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + text);
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_line(int n) const {
  if (n < size()) throw std::invalid_argument("permutation does not fit in S_n");
  std::vector<int> v = values_;
  for (int i = size() + 1; i <= n; ++i) v.push_back(i);
  return v;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < values_.size(); ++a) {
    for (std::size_t b = a + 1; b < values_.size(); ++b) {
      if (values_[a] > values_[b]) ++inv;
    }
  }
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[values_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& other) const {
  const int n = std::max(size(), other.size());
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = (*this)(other(i));
  return Permutation(std::move(v));
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(values_.size(), 0);
  for (std::size_t a = 0; a < values_.size(); ++a) {
    for (std::size_t b = a + 1; b < values_.size(); ++b) {
      if (values_[b] < values_[a]) ++c[a];
    }
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Permutation Permutation::from_code(const std::vector<int>& code) {
  int n = static_cast<int>(code.size());
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative code entry");
    n = std::max(n, i + 1 + code[i]);
  }
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    v.push_back(unused[c]);
    unused.erase(unused.begin() + c);
  }
  return Permutation(std::move(v));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i) {
    if (values_[i - 1] > values_[i]) d.push_back(i);
  }
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> v = values_;
  std::vector<int> rev;
  for (;;) {
    int i = 0;
    for (int k = 1; k < static_cast<int>(v.size()); ++k) {
      if (v[k - 1] > v[k]) {
        i = k;
        break;
      }
    }
    if (i == 0) break;
    std::swap(v[i - 1], v[i]);
    rev.push_back(i);
  }
  return {rev.rbegin(), rev.rend()};
}

std::string Permutation::to_string(int n) const {
  const std::vector<int> v = one_line(std::max({n, size(), 1}));
  const bool compact = v.size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 1; i <= n; ++i) {
    if (auto c = a(i) <=> b(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.values()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  std::vector<int> pu, pv;
  for (int i = 1; i < n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(i)), v(i));
    for (int k = 0; k < i; ++k) {
      if (pu[k] > pv[k]) return false;
    }
  }
  return true;
}

bool is_cover(const Permutation& w, int a, int b) {
  const int wa = w(a), wb = w(b);
  if (wa > wb) return false;
  for (int c = a + 1; c < b; ++c) {
    if (w(c) > wa && w(c) < wb) return false;
  }
  return true;
}

std::vector<BruhatCover> bruhat_covers(const Permutation& w, int n, int k) {
  std::vector<BruhatCover> out;
  for (int a = 1; a <= n; ++a) {
    if (k > 0 && a > k) break;
    for (int b = std::max(a + 1, k > 0 ? k + 1 : 0); b <= n; ++b) {
      if (is_cover(w, a, b)) {
        out.push_back({w, a, b, w * Permutation::transposition(a, b)});
      }
    }
  }
  return out;
}

Permutation pattern_restrict(const Permutation& w, const std::vector<int>& positions) {
  std::vector<int> pos = positions;
  std::sort(pos.begin(), pos.end());
  std::vector<int> vals;
  for (int p : pos) vals.push_back(w(p));
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : vals) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Permutation standardize_drop_first(const Permutation& w, int n) {
  n = std::max(n, w.size());
  std::vector<int> pos;
  for (int i = 2; i <= n; ++i) pos.push_back(i);
  return pattern_restrict(w, pos);
}

Permutation cross(const Permutation& u, const Permutation& v, int m) {
  std::vector<int> out = u.one_line(m);
  for (int x : v.values()) out.push_back(m + x);
  return Permutation(std::move(out));
}

namespace {

// Validates that the parts partition [n] (empty parts allowed).
int check_partition(const std::vector<std::vector<int>>& parts) {
  int n = 0;
  for (const auto& p : parts) n += static_cast<int>(p.size());
  std::vector<char> seen(n + 1, 0);
  for (const auto& p : parts) {
    for (int a : p) {
      if (a < 1 || a > n || seen[a]) throw std::invalid_argument("parts do not partition [n]");
      seen[a] = 1;
    }
  }
  return n;
}

Permutation epsilon_parts(std::vector<std::vector<int>> parts) {
  const int n = check_partition(parts);
  std::vector<int> v(n);
  int next = 1;
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    for (int a : p) v[a - 1] = next++;
  }
  return Permutation(std::move(v));
}

Permutation zeta_parts(const std::vector<std::vector<int>>& parts) {
  const int n = check_partition(parts);
  std::vector<int> omega_beta;
  int offset = 0;
  for (const auto& p : parts) {
    const int b = static_cast<int>(p.size());
    for (int i = 0; i < b; ++i) omega_beta.push_back(offset + b - i);
    offset += b;
  }
  return Permutation::longest(n) * Permutation(std::move(omega_beta)) * epsilon_parts(parts);
}

}  // namespace

SetComposition::SetComposition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
  for (auto& p : parts_) {
    if (p.empty()) throw std::invalid_argument("set composition has an empty part");
    std::sort(p.begin(), p.end());
  }
  total_ = check_partition(parts_);
}

std::vector<int> SetComposition::shape() const {
  std::vector<int> s;
  for (const auto& p : parts_) s.push_back(static_cast<int>(p.size()));
  return s;
}

Permutation epsilon(const SetComposition& blocks) { return epsilon_parts(blocks.parts()); }
Permutation zeta(const SetComposition& blocks) { return zeta_parts(blocks.parts()); }
Permutation epsilon(const std::vector<int>& P, const std::vector<int>& Q) { return epsilon_parts({P, Q}); }
Permutation zeta(const std::vector<int>& P, const std::vector<int>& Q) { return zeta_parts({P, Q}); }

Permutation r_cycle(int k, int p, int m) {
  if (k < 1 || p < 0 || p > m - k) throw std::invalid_argument("r_cycle needs 0 <= p <= m - k");
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  v[k - 1] = k + p;
  for (int i = k + 1; i <= k + p; ++i) v[i - 1] = i - 1;
  return Permutation(std::move(v));
}

Permutation prefix_max(int n, const Permutation& v) {
  if (v.size() > n - 1) throw std::invalid_argument("prefix_max needs v in S_{n-1}");
  std::vector<int> out{n};
  for (int x : v.one_line(n - 1)) out.push_back(x);
  return Permutation(std::move(out));
}

Permutation xi(int q, int j, const Permutation& u, int n) {
  if (u.size() > n || q < 1 || q > n || j < 0) throw std::invalid_argument("bad xi arguments");
  const std::vector<int> ul = u.one_line(n);
  std::vector<int> out(ul.begin(), ul.begin() + (q - 1));
  out.push_back(n + j + 1);
  out.insert(out.end(), ul.begin() + (q - 1), ul.end());
  for (int x = n + 1; x <= n + j; ++x) out.push_back(x);
  return Permutation(std::move(out));
}

Permutation grassmannian(const std::vector<int>& lambda, int k) {
  if (static_cast<int>(lambda.size()) > k) throw std::invalid_argument("partition longer than descent");
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("not a partition");
  }
  if (!lambda.empty() && lambda.back() < 0) throw std::invalid_argument("not a partition");
  std::vector<int> lam = lambda;
  lam.resize(k, 0);
  const int n = k + (k > 0 ? lam[0] : 0);
  std::vector<int> v;
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= k; ++i) {
    v.push_back(lam[k - i] + i);
    used[v.back()] = 1;
  }
  for (int x = 1; x <= n; ++x) {
    if (!used[x]) v.push_back(x);
  }
  return Permutation(std::move(v));
}

std::vector<int> shape(const Permutation& w, int k) {
  for (int i = 1; i < w.size(); ++i) {
    if (i != k && w(i) > w(i + 1)) throw std::invalid_argument("not Grassmannian at the given descent");
  }
  std::vector<int> lam;
  for (int i = k; i >= 1; --i) lam.push_back(w(i) - i);
  return lam;
}

Permutation left_longest(const Permutation& u, int n) { return Permutation::longest(n) * u; }

int mobius_interval_sum(const Permutation& w, const Permutation& u, int n) {
  const Permutation top = left_longest(u, n);
  int total = 0;
  const int lw = w.length();
  for (const Permutation& v : all_permutations(n)) {
    if (bruhat_leq(w, v) && bruhat_leq(v, top)) total += ((v.length() - lw) % 2 == 0) ? 1 : -1;
  }
  return total;
}

}  // namespace kschubert
