#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pathcrystal/energy.hpp"

namespace pathcrystal {

// Conventions for the recursive Demazure construction.
//
// A reflection table fixes d, a mixing index kappa and letters i_a^{(j)}
// (a = 1..d, j >= 1, periodic in j with period n).  Step k = (j-1)d + a of
// the word w^{(k)} = r_{i_k} ... r_{i_1} uses letter i_a^{(j)}.  The level-j
// towers B_a^{(j)} start from the ground factor of level j and close under
// one lowering color per level; windows B_a^{(j,...,t)} glue kappa adjacent
// towers into words over B^{(x)width}, leftmost factor deepest.  All sets are
// kept in canonical element order so comparisons are literal.
struct ReflectionTable {
  int n = 0;
  int d = 0;
  int kappa = 1;
  std::vector<std::vector<int>> letters;  // letters[a-1][(j-1) mod n]

  static ReflectionTable sln_default(int n, int kappa = 1) {
    ReflectionTable rt;
    rt.n = n;
    rt.d = n - 1;
    rt.kappa = kappa;
    rt.letters.assign(rt.d, std::vector<int>(n, 0));
    for (int a = 1; a <= rt.d; ++a)
      for (int j = 1; j <= n; ++j) rt.letters[a - 1][j - 1] = imod(a - j, n);
    return rt;
  }

  int letter(int j, int a) const { return letters[a - 1][imod(j - 1, n)]; }

  // k = (j-1)d + a with 1 <= a <= d.
  std::pair<int, int> step_ja(int k) const { return {(k - 1) / d + 1, (k - 1) % d + 1}; }

  int letter_at_step(int k) const {
    auto [j, a] = step_ja(k);
    return letter(j, a);
  }

  WeylWord weyl_word(int k) const {
    WeylWord w;
    for (int t = k; t >= 1; --t) w.letters.push_back(letter_at_step(t));
    return w;
  }
};

struct DemazureSet {
  Weight lambda;
  WeylWord word;
  int depth = 0;
  std::vector<Word> elems;  // canonical order
};

// Union of all f_i^m images, m >= 0; TruncationExhausted propagates so the
// caller can deepen and retry.
inline std::set<Word> f_closure(const std::set<Word>& s, int i,
                                std::size_t cap = default_cap()) {
  std::set<Word> out = s;
  for (const Word& w : s) {
    Word cur = w;
    while (auto img = cur.f(i)) {
      cur = std::move(*img);
      if (out.insert(cur).second && out.size() > cap)
        throw BudgetExceeded("f_closure: cap of " + std::to_string(cap) + " exceeded");
    }
  }
  return out;
}

// B_{w^{(k)}}(lambda) on truncated paths: start from the ground word and fold
// in one lowering closure per step.  Starts at depth ceil(k/d) + kappa + 1
// unless overridden, and deepens on TruncationExhausted.
inline DemazureSet demazure_recursive(const Weight& lambda, const ReflectionTable& rt,
                                      int k, int depth = 0,
                                      std::size_t cap = default_cap()) {
  int cur_depth = depth > 0 ? depth : (k + rt.d - 1) / rt.d + rt.kappa + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      std::set<Word> cur{ground_path(lambda, cur_depth)};
      for (int step = 1; step <= k; ++step)
        cur = f_closure(cur, rt.letter_at_step(step), cap);
      DemazureSet out;
      out.lambda = lambda;
      out.word = rt.weyl_word(k);
      out.depth = cur_depth;
      out.elems.assign(cur.begin(), cur.end());
      return out;
    } catch (const TruncationExhausted&) {
      ++cur_depth;
    }
  }
  throw std::logic_error("demazure_recursive: truncation never stabilized");
}

// Single-crystal towers B_a^{(j)} for a = 0..d; B_0 = {ground factor}.
inline std::vector<std::set<BoxElem>> tower(const Weight& lambda,
                                            const ReflectionTable& rt, int j) {
  std::vector<std::set<BoxElem>> levels;
  levels.push_back({ground_elem(j, lambda)});
  for (int a = 1; a <= rt.d; ++a) {
    const int i = rt.letter(j, a);
    std::set<BoxElem> next = levels.back();
    for (const BoxElem& b : levels.back()) {
      BoxElem cur = b;
      while (auto img = cur.f(i)) {
        cur = std::move(*img);
        next.insert(cur);
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

// Windows B_a^{(top,...,top-width+1)} as headless words, levels a = 0..d.
inline std::vector<std::set<Word>> window_sets(const Weight& lambda,
                                               const ReflectionTable& rt, int top,
                                               int width,
                                               std::size_t cap = default_cap()) {
  std::vector<std::set<Word>> levels;
  if (width == 1) {
    for (const auto& lvl : tower(lambda, rt, top)) {
      std::set<Word> ws;
      for (const BoxElem& b : lvl) ws.insert(Word({b}));
      levels.push_back(std::move(ws));
    }
    return levels;
  }
  const std::set<Word> inner = window_sets(lambda, rt, top - 1, width - 1, cap).back();
  std::set<Word> base;
  const BoxElem g = ground_elem(top, lambda);
  for (const Word& w : inner) {
    Word ext;
    ext.factors.push_back(g);
    ext.factors.insert(ext.factors.end(), w.factors.begin(), w.factors.end());
    base.insert(std::move(ext));
  }
  levels.push_back(std::move(base));
  for (int a = 1; a <= rt.d; ++a)
    levels.push_back(f_closure(levels.back(), rt.letter(top, a), cap));
  return levels;
}

// The level-a window at (j, ..., j-kappa+1), truncated to (j, ..., 1) when
// j < kappa.
inline std::set<Word> build_Ba(const Weight& lambda, const ReflectionTable& rt, int j,
                               int a, std::size_t cap = default_cap()) {
  return window_sets(lambda, rt, j, std::min(rt.kappa, j), cap)[a];
}

// The tensor-form right-hand side of the factorization at step k, materialized
// at the given truncation depth: ground factors above level j, the level-a
// window, then free factors over the whole crystal.
inline DemazureSet build_P_k(const Weight& lambda, const ReflectionTable& rt, int k,
                             int depth, std::size_t cap = default_cap()) {
  DemazureSet out;
  out.lambda = lambda;
  out.word = rt.weyl_word(k);
  out.depth = depth;
  if (k == 0) {
    out.elems.push_back(ground_path(lambda, depth));
    return out;
  }
  auto [j, a] = rt.step_ja(k);
  if (depth < j) throw DomainError("build_P_k: depth shallower than the active window");
  const int width = std::min(rt.kappa, j);
  const int free = j - width;
  const auto window = build_Ba(lambda, rt, j, a, cap);
  const auto alphabet = box_elements(lambda.n, lambda.level());

  Word prefix;
  prefix.head = sigma_pow(lambda, depth);
  for (int t = depth; t > j; --t) prefix.factors.push_back(ground_elem(t, lambda));

  std::set<Word> elems;
  std::vector<BoxElem> tail(free);
  auto emit_tail = [&](auto&& self, const Word& stem, int pos) -> void {
    if (pos == free) {
      Word full = stem;
      full.factors.insert(full.factors.end(), tail.begin(), tail.end());
      elems.insert(std::move(full));
      if (elems.size() > cap)
        throw BudgetExceeded("build_P_k: cap of " + std::to_string(cap) + " exceeded");
      return;
    }
    for (const BoxElem& b : alphabet) {
      tail[pos] = b;
      self(self, stem, pos + 1);
    }
  };
  for (const Word& win : window) {
    Word stem = prefix;
    stem.factors.insert(stem.factors.end(), win.factors.begin(), win.factors.end());
    emit_tail(emit_tail, stem, 0);
  }
  out.elems.assign(elems.begin(), elems.end());
  return out;
}

// ---- assumption checkers ----------------------------------------------

struct CheckIIReport {
  int kappa = 0;
  struct Item {
    int j = 0;
    bool pass = false;
    std::size_t lhs_size = 0;
    std::size_t rhs_size = 0;
  };
  std::vector<Item> items;

  bool pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.pass; });
  }
};

// Window factorization B_d^{(j+kappa-1,...,j)} = B_d^{(j+kappa-1,...,j+1)} (x) B,
// checked literally over one sigma-period of j.
inline CheckIIReport check_II(const Weight& lambda, const ReflectionTable& rt, int kappa,
                              std::size_t cap = default_cap()) {
  CheckIIReport rep;
  rep.kappa = kappa;
  const auto alphabet = box_elements(lambda.n, lambda.level());
  for (int j = 1; j <= rt.n; ++j) {
    const auto lhs = window_sets(lambda, rt, j + kappa - 1, kappa, cap).back();
    std::set<Word> rhs;
    if (kappa == 1) {
      for (const BoxElem& b : alphabet) rhs.insert(Word({b}));
    } else {
      const auto outer = window_sets(lambda, rt, j + kappa - 1, kappa - 1, cap).back();
      for (const Word& w : outer)
        for (const BoxElem& b : alphabet) {
          Word ext = w;
          ext.factors.push_back(b);
          rhs.insert(std::move(ext));
        }
    }
    rep.items.push_back({j, lhs == rhs, lhs.size(), rhs.size()});
  }
  return rep;
}

// Least kappa <= kappa_max passing the window factorization, if any.
inline std::optional<int> mixing_index(const Weight& lambda, const ReflectionTable& rt,
                                       int kappa_max, std::size_t cap = default_cap()) {
  for (int kappa = 1; kappa <= kappa_max; ++kappa)
    if (check_II(lambda, rt, kappa, cap).pass()) return kappa;
  return std::nullopt;
}

struct CheckIIIReport {
  struct Violation {
    int j = 0;
    int a = 0;
    BoxElem b;
    int head_pairing = 0;
    int eps = 0;
  };
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

// <lambda_j, h_{i_a^{(j)}}> <= eps_{i_a^{(j)}}(b) for every b in B_{a-1}^{(j)};
// guarantees the head and the ground factors above the window stay inert.
inline CheckIIIReport check_III(const Weight& lambda, const ReflectionTable& rt) {
  CheckIIIReport rep;
  for (int j = 1; j <= rt.n; ++j) {
    const Weight lambda_j = sigma_pow(lambda, j);
    const auto levels = tower(lambda, rt, j);
    for (int a = 1; a <= rt.d; ++a) {
      const int i = rt.letter(j, a);
      const int hp = pairing(lambda_j, i);
      for (const BoxElem& b : levels[a - 1])
        if (hp > b.eps(i)) rep.violations.push_back({j, a, b, hp, b.eps(i)});
    }
  }
  return rep;
}

struct CheckIVReport {
  struct Step {
    int k = 0;
    int letter = 0;
    bool certified = false;
    Weight probe;
    int pairing_value = 0;
  };
  std::vector<Step> steps;

  bool all_certified() const {
    return std::all_of(steps.begin(), steps.end(),
                       [](const Step& s) { return s.certified; });
  }
};

// Bruhat growth of w^{(k)} via the sufficient criterion: some dominant probe
// mu with <w^{(k-1)} mu, h_{i_k}> > 0 certifies r_{i_k} w^{(k-1)} > w^{(k-1)}.
// Steps are certified or inconclusive, never refuted.
inline CheckIVReport check_IV(const Weight& lambda, const ReflectionTable& rt,
                              int k_max) {
  CheckIVReport rep;
  std::vector<Weight> probes;
  for (int i = 0; i < rt.n; ++i) probes.push_back(Weight::fundamental(rt.n, i));
  probes.push_back(lambda.cl());

  for (int k = 1; k <= k_max; ++k) {
    CheckIVReport::Step step;
    step.k = k;
    step.letter = rt.letter_at_step(k);
    for (const Weight& mu : probes) {
      Weight folded = mu;
      for (int t = 1; t < k; ++t) folded = reflect(rt.letter_at_step(t), folded);
      const int p = pairing(folded, step.letter);
      if (p > 0) {
        step.certified = true;
        step.probe = mu;
        step.pairing_value = p;
        break;
      }
    }
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

// ---- commutation lemma --------------------------------------------------

struct PQResult {
  int p = 0;
  int q = 0;
  bool verified = false;
};

// Witness (p, q) with f_i^p(b1 (x) e_i^q b2) = f_i^m b1 (x) b2, where
// alpha = phi_i(b1) and beta = eps_i(b2) select between p = m, q = 0 and
// p = beta - alpha + 2m, q = beta - alpha + m.  Both sides are recomputed
// from scratch; disagreement raises LemmaViolation.
inline PQResult lemma_pq(const Word& b1, const Word& b2, int i, int m) {
  if (m < 0 || m > b1.phi(i)) throw DomainError("lemma_pq: f^m b1 is not defined");
  const int alpha = b1.phi(i);
  const int beta = b2.eps(i);
  PQResult res;
  if (alpha - m >= beta) {
    res.p = m;
    res.q = 0;
  } else {
    res.p = beta - alpha + 2 * m;
    res.q = beta - alpha + m;
  }

  Word lhs_right = b2;
  for (int t = 0; t < res.q; ++t) {
    auto img = lhs_right.e(i);
    if (!img) throw LemmaViolation("lemma_pq: e^q b2 vanished");
    lhs_right = std::move(*img);
  }
  std::optional<Word> lhs = concat(b1, lhs_right);
  for (int t = 0; t < res.p && lhs; ++t) lhs = lhs->f(i);

  Word rhs_left = b1;
  for (int t = 0; t < m; ++t) {
    auto img = rhs_left.f(i);
    if (!img) throw LemmaViolation("lemma_pq: f^m b1 vanished");
    rhs_left = std::move(*img);
  }
  const Word rhs = concat(rhs_left, b2);

  res.verified = lhs.has_value() && *lhs == rhs;
  if (!res.verified) throw LemmaViolation("lemma_pq: witness identity failed");
  return res;
}

// ---- theorem -------------------------------------------------------------

struct TheoremReport {
  bool perfect = false;
  bool ii = false;
  bool iii = false;
  bool iv = false;
  bool equal = false;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;

  bool assumptions_ok() const { return perfect && ii && iii && iv; }
  bool pass() const { return assumptions_ok() && equal; }
};

// Recursive construction versus tensor form at step k, compared as literal
// truncated-path sets at matching depth.
inline TheoremReport verify_theorem_report(const Weight& lambda,
                                           const ReflectionTable& rt, int k,
                                           std::size_t cap = default_cap()) {
  TheoremReport rep;
  rep.perfect = perfect_check(lambda.n, lambda.level()).pass();
  rep.ii = check_II(lambda, rt, rt.kappa, cap).pass();
  rep.iii = check_III(lambda, rt).pass();
  rep.iv = check_IV(lambda, rt, k).all_certified();

  const DemazureSet lhs = demazure_recursive(lambda, rt, k, 0, cap);
  const DemazureSet rhs = build_P_k(lambda, rt, k, lhs.depth, cap);
  rep.lhs_size = lhs.elems.size();
  rep.rhs_size = rhs.elems.size();
  rep.equal = lhs.elems == rhs.elems;
  return rep;
}

inline bool verify_theorem(const Weight& lambda, const ReflectionTable& rt, int k,
                           std::size_t cap = default_cap()) {
  return verify_theorem_report(lambda, rt, k, cap).pass();
}

}  // namespace pathcrystal
