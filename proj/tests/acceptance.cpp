// Acceptance suite: one criterion per runner, one pass/fail line each.
// Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pathcrystal/chars.hpp"
#include "pathcrystal/demazure.hpp"

using namespace pathcrystal;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Weight fund(int n, int i) { return Weight::fundamental(n, i); }

int gamma_fold(int i, int d) { return i < 0 ? 0 : (i + d) / d; }

// ---- criterion 1: worked signature example ------------------------------

void criterion_signature_example(Check& c) {
  Word p({BoxElem({0, 2}), BoxElem({1, 1}), BoxElem({1, 1}), BoxElem({1, 1}),
          BoxElem({2, 0})});
  p.head = 2 * fund(2, 1);

  c.expect(p.signature(1).grouped_str() == "(++,--,-+,-+,-+,++)", "signature string");
  c.expect(p.signature(1).reduced().tagged_str() == "-@4 +@2 +@1 +@1",
           "reduced signature");

  Word up_expect({BoxElem({0, 2}), BoxElem({2, 0}), BoxElem({1, 1}), BoxElem({1, 1}),
                  BoxElem({2, 0})});
  up_expect.head = p.head;
  Word down_expect({BoxElem({0, 2}), BoxElem({1, 1}), BoxElem({1, 1}), BoxElem({0, 2}),
                    BoxElem({2, 0})});
  down_expect.head = p.head;

  const auto up = p.e(1);
  const auto down = p.f(1);
  c.expect(up && *up == up_expect, "raising result word");
  c.expect(down && *down == down_expect, "lowering result word");
  if (up) {
    const auto red = p.signature(1).reduced();
    c.expect(red.entries[red.minus_count() - 1].comp == 4, "raising site");
    c.expect(red.entries[red.minus_count()].comp == 2, "lowering site");
  }
}

// ---- criterion 2: recursion equals tensor form ---------------------------

struct Config {
  Weight lambda;
  int kappa;
};

std::vector<Config> theorem_configs() {
  return {{fund(2, 0), 1},
          {2 * fund(2, 0), 1},
          {fund(2, 0) + fund(2, 1), 2},
          {fund(3, 0), 1}};
}

void criterion_theorem(Check& c) {
  for (const Config& cfg : theorem_configs()) {
    const ReflectionTable rt = ReflectionTable::sln_default(cfg.lambda.n, cfg.kappa);
    for (int k = 1; k <= 6; ++k)
      c.expect(verify_theorem(cfg.lambda, rt, k),
               "theorem instance n=" + std::to_string(cfg.lambda.n) +
                   " level=" + std::to_string(cfg.lambda.level()) +
                   " k=" + std::to_string(k));
  }
}

// ---- criterion 3: assumption suite ---------------------------------------

void criterion_assumptions(Check& c) {
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 3; ++l) {
      c.expect(perfect_check(n, l).pass(),
               "perfectness n=" + std::to_string(n) + " l=" + std::to_string(l));
      const ReflectionTable rt = ReflectionTable::sln_default(n);
      c.expect(mixing_index(l * fund(n, 0), rt, 4) == 1,
               "mixing index of l Lambda_0, n=" + std::to_string(n));
      for (const Weight& lambda : dominant_weights(n, l))
        c.expect(check_III(lambda, rt).pass(), "head pairing bound");
    }

  const ReflectionTable rt2 = ReflectionTable::sln_default(2);
  c.expect(mixing_index(fund(2, 0) + fund(2, 1), rt2, 4) == 2,
           "mixing index of Lambda_0+Lambda_1, n=2 l=2");
  const ReflectionTable rt3 = ReflectionTable::sln_default(3);
  c.expect(mixing_index(fund(3, 0) + fund(3, 1) + fund(3, 2), rt3, 4) == 2,
           "mixing index of Lambda_0+Lambda_1+Lambda_2, n=3 l=3");

  for (int n = 2; n <= 4; ++n) {
    const int d = n - 1;
    const ReflectionTable rt = ReflectionTable::sln_default(n);
    const auto rep = check_IV(fund(n, 0), rt, 12);
    c.expect(rep.all_certified(), "Bruhat certificates n=" + std::to_string(n));
    for (const auto& s : rep.steps)
      c.expect(s.pairing_value == gamma_fold(s.k - 1, d), "certificate pairing value");
    // the same values read off the folded word directly
    Weight w = fund(n, 0);
    for (int k = 0; k <= 12; ++k) {
      c.expect(pairing(w, k) == gamma_fold(k, d), "fold pairing value");
      w = reflect(k, w);
    }
  }
}

// ---- criterion 4: closed-form fold ---------------------------------------

void criterion_weyl_lemma(Check& c) {
  for (int n : {2, 3, 4}) {
    const int d = n - 1;
    for (int k = 0; k <= 12; ++k) {
      Weight folded = fund(n, 0);
      for (int t = 0; t < k; ++t) folded = reflect(t, folded);
      Weight expect = fund(n, 0);
      for (int i = 0; i < k; ++i) expect -= gamma_fold(i, d) * simple_root(i, n);
      c.expect(folded == expect,
               "fold n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

// ---- criterion 5: character corollaries -----------------------------------

void criterion_characters(Check& c) {
  for (const Config& cfg : theorem_configs()) {
    const ReflectionTable rt = ReflectionTable::sln_default(cfg.lambda.n, cfg.kappa);
    for (int k = 1; k <= 6; ++k) {
      const auto [j, a] = rt.step_ja(k);
      const int free = j - std::min(rt.kappa, j);
      ClassicalTable rhs = ClassicalTable::monomial(sigma_pow(cfg.lambda, j));
      rhs = rhs * ch_words(build_Ba(cfg.lambda, rt, j, a));
      rhs = rhs * ch_box(cfg.lambda.n, cfg.lambda.level())
                      .pow(free, Weight::zero(cfg.lambda.n));
      c.expect(clch(demazure_recursive(cfg.lambda, rt, k)) == rhs,
               "factorization k=" + std::to_string(k));
    }
  }
  for (int l = 1; l <= 2; ++l) {
    const Weight lambda = l * fund(2, 0);
    const ReflectionTable rt = ReflectionTable::sln_default(2, 1);
    for (int k = 0; k <= 5; ++k) {
      ClassicalTable rhs = ClassicalTable::monomial(sigma_pow(lambda, k));
      rhs = rhs * ch_box(2, l).pow(k, Weight::zero(2));
      c.expect(clch(demazure_recursive(lambda, rt, k)) == rhs,
               "power form l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
  }
}

// ---- criterion 6: energy soundness ----------------------------------------

void criterion_energy(Check& c) {
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 3; ++l) {
      try {
        const EnergyTable t = energy_table(n, l);
        const std::size_t size = box_elements(n, l).size();
        c.expect(t.h.size() == size * size, "energy table totality");
      } catch (const std::exception& e) {
        c.expect(false, std::string("energy table: ") + e.what());
      }
    }

  const EnergyTable t = energy_table(2, 1);
  const BoxElem a({1, 0}), b({0, 1});
  c.expect(t.at(a, a) == 0 && t.at(b, a) == 0 && t.at(b, b) == 0 && t.at(a, b) == -1,
           "rank-2 level-1 energy values");

  const ReflectionTable rt = ReflectionTable::sln_default(2, 1);
  const DemazureSet s = demazure_recursive(fund(2, 0), rt, 4);
  const EnergyTable shifted = t.shifted(7);
  for (const Word& w : s.elems) {
    const Weight base = path_weight(w, t);
    c.expect(path_weight(w, shifted) == base, "anchor-shift invariance");
    c.expect(path_weight(deepen(w), t) == base, "deepening invariance");
  }
}

// ---- criterion 7: Kostka cross-validation ----------------------------------

void criterion_kostka(Check& c) {
  const std::vector<std::tuple<int, int, int>> triples = {
      {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}};
  for (const auto& [n, l, L] : triples) {
    const EnergyTable t = energy_table(n, l);
    const Partition nu = Partition::rectangle(l, L);
    for (const Partition& mu : partitions_max_parts(l * L, n)) {
      const QPoly by_energy = kostka_1dsum(mu, n, l, L, t);
      const QPoly by_charge = kostka_charge(mu, nu);
      c.expect(by_energy == by_charge,
               "gradings differ at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                   " L=" + std::to_string(L));

      long long highest = 0;
      std::vector<int> target(n, 0);
      for (int i = 0; i < n; ++i) target[i] = mu.part(i);
      for (const Word& w : all_words(n, l, L)) {
        bool is_highest = true;
        for (int i = 1; i < n && is_highest; ++i)
          if (w.eps(i) != 0) is_highest = false;
        if (!is_highest) continue;
        std::vector<int> content(n, 0);
        for (const BoxElem& f : w.factors)
          for (int i = 0; i < n; ++i) content[i] += f.x[i];
        if (content == target) ++highest;
      }
      c.expect(by_energy.eval_at_one() == highest, "value at q=1");
    }
  }
}

// ---- criterion 8: Kirillov identity ----------------------------------------

void criterion_kirillov(Check& c) {
  const std::vector<std::tuple<int, int, int, long long>> cases = {
      {2, 1, 2, 0}, {2, 1, 4, 2}, {2, 2, 2, 0}};
  for (const auto& [n, l, L, e0] : cases) {
    const KirillovReport rep = kirillov_check(n, l, L);
    c.expect(rep.e0 == e0, "ground energy E0");
    c.expect(rep.pass, "identity n=" + std::to_string(n) + " l=" + std::to_string(l) +
                           " L=" + std::to_string(L));
  }
  KostkaAdjust adjust;
  adjust.mu = Partition({3, 1});
  adjust.qexp = 2;
  adjust.delta = 1;
  const KirillovReport broken = kirillov_check(2, 1, 4, &adjust);
  c.expect(!broken.pass && broken.witness.has_value(),
           "perturbed coefficient must fail with a witness");
}

// ---- criterion 9: commutation lemma ----------------------------------------

void criterion_lemma(Check& c) {
  try {
    for (const BoxElem& x : box_elements(2, 2))
      for (const BoxElem& y : box_elements(2, 2)) {
        const Word b1({x}), b2({y});
        for (int i = 0; i < 2; ++i)
          for (int m = 0; m <= b1.phi(i); ++m)
            c.expect(lemma_pq(b1, b2, i, m).verified, "exhaustive rank-2 scan");
      }
    for (const Word& b1 : all_words(2, 2, 2))
      for (const Word& b2 : all_words(2, 2, 2))
        for (int i = 0; i < 2; ++i)
          for (int m = 0; m <= b1.phi(i); ++m)
            c.expect(lemma_pq(b1, b2, i, m).verified, "two-factor rank-2 scan");

    std::mt19937 rng(20240612);
    const auto alphabet = box_elements(3, 2);
    std::uniform_int_distribution<int> len(1, 3), color(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    auto random_word = [&] {
      Word w;
      const int m = len(rng);
      for (int s = 0; s < m; ++s) w.factors.push_back(alphabet[pick(rng)]);
      return w;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const Word b1 = random_word();
      const Word b2 = random_word();
      const int i = color(rng);
      std::uniform_int_distribution<int> mm(0, b1.phi(i));
      c.expect(lemma_pq(b1, b2, i, mm(rng)).verified, "random rank-3 case");
    }
  } catch (const LemmaViolation& e) {
    c.expect(false, std::string("violation: ") + e.what());
  }
}

// ---- criterion 10: crystal axiom property suite ------------------------------

void criterion_axioms(Check& c) {
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 2; ++l) {
      for (const BoxElem& b : box_elements(n, l))
        for (int i = 0; i < n; ++i) {
          const int si = imod(i - 1, n);
          const auto lhs = sigma_elem(b).e(si);
          const auto rhs = b.e(i);
          c.expect(lhs.has_value() == rhs.has_value() &&
                       (!lhs || *lhs == sigma_elem(*rhs)),
                   "sigma equivariance");
        }
      for (int length = 1; length <= 3; ++length)
        for (const Word& w : all_words(n, l, length))
          for (int i = 0; i < n; ++i) {
            if (auto down = w.f(i)) {
              const auto back = down->e(i);
              c.expect(back && *back == w, "partial inverse f;e");
            }
            if (auto up = w.e(i)) {
              const auto back = up->f(i);
              c.expect(back && *back == w, "partial inverse e;f");
            }
            int raise = 0;
            Word cur = w;
            while (auto img = cur.e(i)) {
              cur = *img;
              ++raise;
            }
            c.expect(raise == w.eps(i), "eps counts raising steps");
            int lower = 0;
            cur = w;
            while (auto img = cur.f(i)) {
              cur = *img;
              ++lower;
            }
            c.expect(lower == w.phi(i), "phi counts lowering steps");
            c.expect(w.phi(i) - w.eps(i) == pairing(w.weight(), i),
                     "phi - eps is the pairing");
          }
      // associativity, exhaustive over all bracketings of short words
      for (int length = 2; length <= 3; ++length)
        for (const Word& w : all_words(n, l, length))
          for (int split = 1; split < length; ++split) {
            TensorWord<Word> grouped;
            Word left, right;
            left.factors.assign(w.factors.begin(), w.factors.begin() + split);
            right.factors.assign(w.factors.begin() + split, w.factors.end());
            grouped.factors = {left, right};
            for (int i = 0; i < n; ++i) {
              c.expect(grouped.eps(i) == w.eps(i) && grouped.phi(i) == w.phi(i),
                       "grouped statistics");
              const auto flat = w.f(i);
              const auto nested = grouped.f(i);
              bool same = flat.has_value() == nested.has_value();
              if (same && flat) {
                Word reflat = nested->factors[0];
                reflat.factors.insert(reflat.factors.end(),
                                      nested->factors[1].factors.begin(),
                                      nested->factors[1].factors.end());
                same = reflat == *flat;
              }
              c.expect(same, "grouped lowering agrees");
            }
          }
    }
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked signature example reproduced exactly", 1.0, criterion_signature_example},
      {2, "Demazure recursion equals the tensor form (k=1..6)", 30.0, criterion_theorem},
      {3, "perfectness, mixing index, pairing bound, Bruhat certificates", 30.0,
       criterion_assumptions},
      {4, "closed-form fold of the standard word", 30.0, criterion_weyl_lemma},
      {5, "classical character factorization and power form", 30.0, criterion_characters},
      {6, "energy tables total, exact values, normalization-free weights", 30.0,
       criterion_energy},
      {7, "energy-graded and charge-graded Kostka polynomials agree", 10.0,
       criterion_kostka},
      {8, "Demazure character matches the Kostka/Schur expansion", 30.0,
       criterion_kirillov},
      {9, "commutation witness holds on exhaustive and random scans", 30.0,
       criterion_lemma},
      {10, "crystal axioms hold exhaustively on short words", 60.0, criterion_axioms},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.budget_seconds)
      check.expect(false, "over time budget: " + std::to_string(seconds) + "s");
    if (check.ok) {
      std::printf("[PASS] criterion %2d: %s (%.2fs)\n", cr.id, cr.name.c_str(), seconds);
    } else {
      std::printf("[FAIL] criterion %2d: %s -- %s\n", cr.id, cr.name.c_str(),
                  check.detail.c_str());
      ++failures;
    }
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
