#pragma once

#include <cassert>
#include <compare>
#include <concepts>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathcrystal/symtensor.hpp"
#include "pathcrystal/weight.hpp"

namespace pathcrystal {

// Anything with Kashiwara raising/lowering operators, the eps/phi statistics
// and a classical weight.  BoxElem models this, and so does TensorWord itself,
// so words can be nested to test bracketing laws.
template <class C>
concept CrystalElement = requires(const C& c, int i) {
  { c.rank() } -> std::convertible_to<int>;
  { c.e(i) } -> std::same_as<std::optional<C>>;
  { c.f(i) } -> std::same_as<std::optional<C>>;
  { c.eps(i) } -> std::convertible_to<int>;
  { c.phi(i) } -> std::convertible_to<int>;
  { c.weight() } -> std::convertible_to<Weight>;
} && std::totally_ordered<C>;

// One +/- of a signature together with the component it came from.
// Components are numbered 1..m right-to-left (the rightmost tensor factor is
// component 1); the head, when present, is component m+1.
struct SigEntry {
  bool plus = false;
  int comp = 0;

  friend auto operator<=>(const SigEntry&, const SigEntry&) = default;
};

struct Signature {
  std::vector<SigEntry> entries;

  int minus_count() const {
    int c = 0;
    for (const auto& s : entries) c += !s.plus;
    return c;
  }
  int plus_count() const {
    int c = 0;
    for (const auto& s : entries) c += s.plus;
    return c;
  }

  // Delete adjacent (+,-) pairs until none remain; survivors keep their tags.
  // The result has shape -...-+...+.
  Signature reduced() const {
    Signature out;
    std::vector<SigEntry> stack;  // surviving pluses so far
    std::vector<SigEntry> minuses;
    for (const auto& s : entries) {
      if (s.plus) {
        stack.push_back(s);
      } else if (!stack.empty()) {
        stack.pop_back();
      } else {
        minuses.push_back(s);
      }
    }
    out.entries = std::move(minuses);
    out.entries.insert(out.entries.end(), stack.begin(), stack.end());
    return out;
  }

  // "(++,--,-+)" with one group per component, left to right.
  std::string grouped_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i > 0 && entries[i].comp != entries[i - 1].comp) s += ',';
      s += entries[i].plus ? '+' : '-';
    }
    s += ')';
    return s;
  }

  // "-@4 +@2 +@1" listing each sign with its component tag.
  std::string tagged_str() const {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ' ';
      s += entries[i].plus ? '+' : '-';
      s += '@';
      s += std::to_string(entries[i].comp);
    }
    return s;
  }
};

// A finite tensor word u_{lambda} (x) p(m) (x) ... (x) p(1), stored left to
// right (factors.front() is the deepest factor p(m), factors.back() is p(1)).
// The head is optional; when present it is the dominant weight of a
// highest-weight pseudo-factor that contributes <head, h_i> pluses to every
// signature and rejects lowering with TruncationExhausted.
template <CrystalElement C>
struct TensorWord {
  std::optional<Weight> head;
  std::vector<C> factors;

  TensorWord() = default;
  explicit TensorWord(std::vector<C> fs) : factors(std::move(fs)) {}
  TensorWord(Weight h, std::vector<C> fs) : head(std::move(h)), factors(std::move(fs)) {}

  int rank() const { return head ? head->n : factors.front().rank(); }
  int depth() const { return static_cast<int>(factors.size()); }

  // p(j), 1-based from the right.
  const C& component(int j) const { return factors[factors.size() - j]; }

  Signature signature(int i) const {
    const int m = depth();
    Signature sig;
    if (head) {
      const int p = pairing(*head, i);
      assert(p >= 0);
      for (int t = 0; t < p; ++t) sig.entries.push_back({true, m + 1});
    }
    for (int idx = 0; idx < m; ++idx) {
      const int j = m - idx;
      const C& b = factors[idx];
      for (int t = 0; t < b.eps(i); ++t) sig.entries.push_back({false, j});
      for (int t = 0; t < b.phi(i); ++t) sig.entries.push_back({true, j});
    }
    return sig;
  }

  int eps(int i) const { return signature(i).reduced().minus_count(); }
  int phi(int i) const { return signature(i).reduced().plus_count(); }

  // e acts at the component of the rightmost surviving minus.
  std::optional<TensorWord> e(int i) const {
    const Signature red = signature(i).reduced();
    if (red.minus_count() == 0) return std::nullopt;
    const int j = red.entries[red.minus_count() - 1].comp;
    TensorWord out = *this;
    auto im = component(j).e(i);
    assert(im && "reduced minus implies the component raises");
    out.factors[factors.size() - j] = *im;
    return out;
  }

  // f acts at the component of the leftmost surviving plus; hitting the head
  // means the truncation was too short.
  std::optional<TensorWord> f(int i) const {
    const Signature red = signature(i).reduced();
    if (red.plus_count() == 0) return std::nullopt;
    const int j = red.entries[red.minus_count()].comp;
    if (j == depth() + 1)
      throw TruncationExhausted("f_" + std::to_string(imod(i, rank())) +
                                " acts on the head; deepen the truncation");
    TensorWord out = *this;
    auto im = component(j).f(i);
    assert(im && "surviving plus implies the component lowers");
    out.factors[factors.size() - j] = *im;
    return out;
  }

  // Head weight plus the sum of the factor weights (classical).
  Weight weight() const {
    Weight w = head ? *head : Weight::zero(rank());
    for (const C& b : factors) w += b.weight();
    return w;
  }

  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

using Word = TensorWord<BoxElem>;

template <CrystalElement C>
TensorWord<C> concat(const TensorWord<C>& left, const TensorWord<C>& right) {
  assert(!right.head);
  TensorWord<C> out = left;
  out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
  return out;
}

// Least superset of the seed closed under the chosen raising/lowering colors.
// Iteration order is the canonical element order, so results are schedule-free.
template <CrystalElement C>
std::set<TensorWord<C>> enumerate(const std::set<TensorWord<C>>& seed,
                                  const std::vector<int>& e_colors,
                                  const std::vector<int>& f_colors,
                                  std::size_t cap = default_cap()) {
  std::set<TensorWord<C>> seen = seed;
  std::vector<TensorWord<C>> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    TensorWord<C> w = queue.back();
    queue.pop_back();
    auto visit = [&](std::optional<TensorWord<C>> img) {
      if (!img) return;
      if (seen.insert(*img).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("enumerate: closure exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(*img));
      }
    };
    for (int i : e_colors) visit(w.e(i));
    for (int i : f_colors) visit(w.f(i));
  }
  return seen;
}

// The subset killed by every e_i with i != 0, paired with classical weights.
template <CrystalElement C>
std::vector<std::pair<TensorWord<C>, Weight>> classical_highest(
    const std::set<TensorWord<C>>& words) {
  std::vector<std::pair<TensorWord<C>, Weight>> out;
  for (const auto& w : words) {
    bool highest = true;
    for (int i = 1; i < w.rank() && highest; ++i)
      if (w.eps(i) != 0) highest = false;
    if (highest) out.emplace_back(w, w.weight());
  }
  return out;
}

// All length-L words over the given alphabet, canonical order.
inline std::vector<Word> all_words(int n, int l, int length) {
  const auto alphabet = box_elements(n, l);
  std::vector<Word> out;
  std::vector<BoxElem> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(Word(cur));
      return;
    }
    for (const auto& b : alphabet) {
      cur.push_back(b);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace pathcrystal
