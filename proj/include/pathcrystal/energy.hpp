#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pathcrystal/crystal.hpp"
#include "pathcrystal/symtensor.hpp"

namespace pathcrystal {

// H on B^l (x) B^l: constant along e_i edges for i != 0, and along e_0 it
// steps +1 when phi_0(left) >= eps_0(right) at the source pair, else -1.
// Values are anchored at H((l,0,...,0) (x) (l,0,...,0)) = 0; only differences
// of H enter path weights, so the anchor is a normalization, not a claim.
struct EnergyTable {
  int n = 0;
  int l = 0;
  std::pair<BoxElem, BoxElem> anchor;
  std::map<std::pair<BoxElem, BoxElem>, int> h;

  int at(const BoxElem& left, const BoxElem& right) const {
    auto it = h.find({left, right});
    if (it == h.end()) throw DomainError("EnergyTable::at: pair not in table");
    return it->second;
  }

  EnergyTable shifted(int c) const {
    EnergyTable t = *this;
    for (auto& [k, v] : t.h) v += c;
    return t;
  }
};

namespace detail {

// e_0-direction of the energy step at the source pair.
inline int energy_step(int i, const std::pair<BoxElem, BoxElem>& src) {
  if (i != 0) return 0;
  return src.first.phi(0) >= src.second.eps(0) ? 1 : -1;
}

inline std::optional<std::pair<BoxElem, BoxElem>> tensor_e(
    const std::pair<BoxElem, BoxElem>& p, int i) {
  Word w({p.first, p.second});
  auto img = w.e(i);
  if (!img) return std::nullopt;
  return std::pair{img->factors[0], img->factors[1]};
}

inline std::optional<std::pair<BoxElem, BoxElem>> tensor_f(
    const std::pair<BoxElem, BoxElem>& p, int i) {
  Word w({p.first, p.second});
  auto img = w.f(i);
  if (!img) return std::nullopt;
  return std::pair{img->factors[0], img->factors[1]};
}

}  // namespace detail

// Propagate the defining recursion over the whole tensor square by BFS,
// re-checking every non-tree edge.  Requires the tensor square to be
// connected (operational perfectness, clause (a)).
inline EnergyTable energy_table(int n, int l) {
  EnergyTable t;
  t.n = n;
  t.l = l;
  std::vector<int> hw(n, 0);
  hw[0] = l;
  const BoxElem top(hw);
  t.anchor = {top, top};
  t.h[t.anchor] = 0;

  std::vector<std::pair<BoxElem, BoxElem>> queue{t.anchor};
  auto relax = [&](const std::pair<BoxElem, BoxElem>& from,
                   const std::pair<BoxElem, BoxElem>& to, int dh) {
    auto it = t.h.find(to);
    const int v = t.h.at(from) + dh;
    if (it == t.h.end()) {
      t.h[to] = v;
      queue.push_back(to);
    } else if (it->second != v) {
      throw InconsistentPropagation("energy recursion disagrees at " +
                                    box_to_string(to.first) + "(x)" +
                                    box_to_string(to.second));
    }
  };
  while (!queue.empty()) {
    auto p = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      if (auto q = detail::tensor_e(p, i)) relax(p, *q, detail::energy_step(i, p));
      if (auto q = detail::tensor_f(p, i)) relax(p, *q, -detail::energy_step(i, *q));
    }
  }
  const std::size_t total = box_elements(n, l).size();
  if (t.h.size() != total * total)
    throw DomainError("energy_table: tensor square is not connected");
  return t;
}

// Truncated path with head sigma^k(lambda) over k ground factors.
inline Word ground_path(const Weight& lambda, int k) {
  Word w;
  w.head = sigma_pow(lambda, k);
  for (int j = k; j >= 1; --j) w.factors.push_back(ground_elem(j, lambda));
  return w;
}

// Prepend one ground factor; b(head) is the next ground element.
inline Word deepen(Word w) {
  assert(w.head);
  w.factors.insert(w.factors.begin(), b_of(*w.head));
  w.head = sigma_w(*w.head);
  return w;
}

inline Word deepen_to(Word w, int depth) {
  while (w.depth() < depth) w = deepen(std::move(w));
  return w;
}

// lambda_0: the dominant weight whose ground path this word truncates.
inline Weight lambda0_of(const Word& w) {
  assert(w.head);
  return sigma_pow(*w.head, -(w.depth()));
}

// Affine weight of a truncated path:
//   lambda + sum_k (af(wt p(k)) - af(wt g_k)) - [sum_k k dH_k] delta,
// where g_k is the ground factor, dH_k the energy difference against the
// ground pair, and the factor above the truncation edge is taken to be
// ground.  af is the zero-delta lift, and every term vanishes for k beyond
// the truncation, so the value is stable under deepening.
inline Weight path_weight(const Word& w, const EnergyTable& energy) {
  assert(w.head);
  const Weight lambda = lambda0_of(w);
  const int m = w.depth();
  Weight result = lambda;
  long long energy_diff = 0;
  for (int k = 1; k <= m; ++k) {
    const BoxElem& pk = w.component(k);
    const BoxElem gk = ground_elem(k, lambda);
    result += af_lift(pk.weight()) - af_lift(gk.weight());
    const BoxElem pk1 = (k < m) ? w.component(k + 1) : ground_elem(k + 1, lambda);
    const BoxElem gk1 = ground_elem(k + 1, lambda);
    energy_diff += static_cast<long long>(k) * (energy.at(pk1, pk) - energy.at(gk1, gk));
  }
  result.del -= static_cast<int>(energy_diff);
  return result;
}

// lambda_m + sum_{k<=m} wt p(k); the classical projection of path_weight.
inline Weight classical_word_weight(const Word& w) {
  assert(w.head);
  Weight result = *w.head;
  for (const BoxElem& b : w.factors) result += b.weight();
  return result;
}

}  // namespace pathcrystal
