#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "pathcrystal/demazure.hpp"
#include "pathcrystal/laurent.hpp"

namespace pathcrystal {

using ClassicalTable = LaurentTable<Weight>;  // keys carry del = 0
using AffineTable = LaurentTable<Weight>;
using MonoTable = LaurentTable<Mono>;
using GradedTable = LaurentTable<GradedMono>;

// ---- characters ----------------------------------------------------------

inline ClassicalTable ch_box(int n, int l) {
  ClassicalTable t;
  for (const BoxElem& b : box_elements(n, l)) t.add(b.weight(), 1);
  return t;
}

// Character of a set of headless words: sum of e^{sum of factor weights}.
inline ClassicalTable ch_words(const std::set<Word>& words) {
  ClassicalTable t;
  for (const Word& w : words) t.add(w.weight(), 1);
  return t;
}

inline ClassicalTable clch(const DemazureSet& s) {
  ClassicalTable t;
  for (const Word& w : s.elems) t.add(classical_word_weight(w), 1);
  return t;
}

// Full q-graded character: exponents are affine path weights.
inline AffineTable ch_full(const DemazureSet& s, const EnergyTable& energy) {
  AffineTable t;
  for (const Word& w : s.elems) t.add(path_weight(w, energy), 1);
  return t;
}

// e^{-delta} -> 1: drop the delta grading.
inline ClassicalTable collapse_q(const AffineTable& t) {
  ClassicalTable r;
  for (const auto& [k, c] : t.terms) r.add(k.cl(), c);
  return r;
}

// ---- partitions and tableaux ----------------------------------------------

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    assert(std::is_sorted(parts.rbegin(), parts.rend()));
  }

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[i] : 0; }

  static Partition rectangle(int value, int count) {
    return Partition(std::vector<int>(count, value));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::vector<Partition> partitions_max_parts(int total, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int bound) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

// n(nu) = sum (i-1) nu_i, the top cocharge degree for content nu.
inline long long nstat(const Partition& nu) {
  long long s = 0;
  for (int i = 0; i < nu.length(); ++i) s += static_cast<long long>(i) * nu.parts[i];
  return s;
}

using Tableau = std::vector<std::vector<int>>;

// Semistandard fillings of the given shape with entries 1..max_entry; when
// content is supplied the multiset of entries is pinned exactly.
template <class F>
void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::optional<std::vector<int>>& content, F&& fn) {
  const int rows = shape.length();
  Tableau t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(shape.parts[r], 0);
  std::vector<int> budget;
  if (content) budget = *content;

  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      if (!content || std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; }))
        fn(t);
      return;
    }
    const int nr = (c + 1 == shape.parts[r]) ? r + 1 : r;
    const int nc = (c + 1 == shape.parts[r]) ? 0 : c + 1;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);                                   // row weak
    if (r > 0 && c < shape.parts[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);     // col strict
    for (int v = lo; v <= max_entry; ++v) {
      if (content) {
        if (v > static_cast<int>(budget.size()) || budget[v - 1] == 0) continue;
        --budget[v - 1];
      }
      t[r][c] = v;
      rec(nr, nc);
      if (content) ++budget[v - 1];
    }
  };
  rec(0, 0);
}

// Schur polynomial in `vars` variables by tableau enumeration.
inline MonoTable schur(const Partition& mu, int vars) {
  MonoTable t;
  if (mu.length() > vars) return t;
  for_each_ssyt(mu, vars, std::nullopt, [&](const Tableau& tab) {
    Mono m;
    m.e.assign(vars, 0);
    for (const auto& row : tab)
      for (int v : row) m.e[v - 1] += 1;
    t.add(m, 1);
  });
  return t;
}

// Row reading word, bottom row first.
inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

// Charge of a word with partition content: extract standard subwords by the
// cyclic left-to-right rule, then give letter 1 index 0 and increment the
// index exactly when the next letter sits to the right of the previous one.
inline long long charge_word(std::vector<int> w) {
  long long total = 0;
  while (!w.empty()) {
    const int maxletter = *std::max_element(w.begin(), w.end());
    std::vector<bool> taken(w.size(), false);
    std::vector<std::size_t> sel;
    std::size_t pos = 0;
    for (int need = 1; need <= maxletter; ++need) {
      std::size_t scanned = 0;
      while (scanned <= w.size()) {
        if (!taken[pos] && w[pos] == need) break;
        pos = (pos + 1) % w.size();
        ++scanned;
      }
      assert(scanned <= w.size() && "content must be a partition");
      taken[pos] = true;
      sel.push_back(pos);
      pos = (pos + 1) % w.size();
    }
    long long idx = 0;
    for (std::size_t r = 1; r < sel.size(); ++r) {
      if (sel[r] > sel[r - 1]) ++idx;
      total += idx;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!taken[i]) rest.push_back(w[i]);
    w = std::move(rest);
  }
  return total;
}

// Kostka-Foulkes polynomial graded by cocharge: sum over SSYT of shape mu and
// content nu of q^{n(nu) - charge}.  This grading matches the energy-graded
// sum below with no offset.
inline QPoly kostka_charge(const Partition& mu, const Partition& nu) {
  QPoly out;
  const long long top = nstat(nu);
  std::vector<int> content(nu.parts.begin(), nu.parts.end());
  for_each_ssyt(mu, nu.length(), std::optional{content}, [&](const Tableau& t) {
    out.add(static_cast<int>(top - charge_word(reading_word(t))), 1);
  });
  return out;
}

// ---- energy-graded 1D sum --------------------------------------------------

// K_{mu (l^L)}(q) as a 1D sum: over classically highest words b_L (x)...(x) b_1
// of content matching mu, grade by sum_j j * Hhat(b_{j+1} (x) b_j) with
// Hhat = -H and H anchored at zero on the doubled highest element.
inline QPoly kostka_1dsum(const Partition& mu, int n, int l, int L,
                          const EnergyTable& energy) {
  QPoly out;
  if (mu.length() > n || mu.sum() != l * L) return out;
  std::vector<int> target(n, 0);
  for (int i = 0; i < n; ++i) target[i] = mu.part(i);
  for (const Word& w : all_words(n, l, L)) {
    bool highest = true;
    for (int i = 1; i < n && highest; ++i)
      if (w.eps(i) != 0) highest = false;
    if (!highest) continue;
    std::vector<int> content(n, 0);
    for (const BoxElem& b : w.factors)
      for (int i = 0; i < n; ++i) content[i] += b.x[i];
    if (content != target) continue;
    long long exp = 0;
    for (int j = 1; j <= L - 1; ++j)
      exp += static_cast<long long>(j) * (-energy.at(w.component(j + 1), w.component(j)));
    out.add(static_cast<int>(exp), 1);
  }
  return out;
}

// ---- Kirillov identity ------------------------------------------------------

// x-class of a level-zero classical weight on the slice x_1...x_n = 1,
// normalized so the last exponent vanishes.
inline Mono x_class(const Weight& v) {
  const int n = v.n;
  Mono m;
  m.e.assign(n, 0);
  for (int mth = 1; mth < n; ++mth) {
    int s = 0;
    for (int t = mth; t < n; ++t) s += v.lam[t];
    m.e[mth - 1] = s;
  }
  return m;
}

inline Mono normalize_x(Mono m) {
  const int last = m.e.back();
  for (int& v : m.e) v -= last;
  return m;
}

struct KostkaAdjust {
  Partition mu;
  int qexp = 0;
  long long delta = 0;
};

struct KirillovReport {
  int n = 0, l = 0, L = 0;
  long long e0 = 0;
  bool pass = false;
  GradedTable lhs, rhs;
  std::optional<GradedMono> witness;
  long long lhs_coef = 0, rhs_coef = 0;
};

// Compare e^{-l Lambda_0} ch B_{w^{(Ld)}}(l Lambda_0) against
// sum_mu q^{-E_0} K_{mu (l^L)}(q) s_mu(x) on the slice x_1...x_n = 1.
// The left side runs through the Demazure enumeration and path weights; the
// right side through the charge statistic and tableau Schur functions, so the
// two pipelines share no machinery.  The optional adjustment perturbs one
// K coefficient to exercise failure reporting.
inline KirillovReport kirillov_check(int n, int l, int L,
                                     const KostkaAdjust* adjust = nullptr,
                                     std::size_t cap = default_cap()) {
  if (L % n != 0) throw DomainError("kirillov_check: L must be divisible by n");
  KirillovReport rep;
  rep.n = n;
  rep.l = l;
  rep.L = L;
  const long long e0_num = static_cast<long long>(l) * L * (L / n - 1);
  assert(e0_num % 2 == 0);
  rep.e0 = e0_num / 2;

  const Weight lambda = l * Weight::fundamental(n, 0);
  const ReflectionTable rt = ReflectionTable::sln_default(n, 1);
  const EnergyTable energy = energy_table(n, l);
  const DemazureSet dem = demazure_recursive(lambda, rt, L * rt.d, 0, cap);
  for (const Word& w : dem.elems) {
    const Weight v = path_weight(w, energy) - lambda;
    rep.lhs.add({-v.del, x_class(v.cl())}, 1);
  }

  const Partition nu = Partition::rectangle(l, L);
  for (const Partition& mu : partitions_max_parts(l * L, n)) {
    QPoly k = kostka_charge(mu, nu).mirrored(static_cast<int>(nstat(nu)));
    if (adjust && adjust->mu == mu) k.add(adjust->qexp, adjust->delta);
    const MonoTable s = schur(mu, n);
    for (const auto& [qe, qc] : k.c)
      for (const auto& [mono, mc] : s.terms)
        rep.rhs.add({qe - static_cast<int>(rep.e0), normalize_x(mono)}, qc * mc);
  }

  rep.pass = rep.lhs == rep.rhs;
  if (!rep.pass) {
    std::set<GradedMono> keys;
    for (const auto& [k, c] : rep.lhs.terms) keys.insert(k);
    for (const auto& [k, c] : rep.rhs.terms) keys.insert(k);
    for (const GradedMono& k : keys) {
      if (rep.lhs.coef(k) != rep.rhs.coef(k)) {
        rep.witness = k;
        rep.lhs_coef = rep.lhs.coef(k);
        rep.rhs_coef = rep.rhs.coef(k);
        break;
      }
    }
  }
  return rep;
}

}  // namespace pathcrystal
