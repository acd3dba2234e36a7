#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathcrystal/weight.hpp"

namespace pathcrystal {

// Element of the level-l symmetric tensor crystal B^l of affine sl_n:
// a composition (x_0, ..., x_{n-1}) of l.  e_i moves one unit from slot i
// to slot i-1 (cyclically; e_0 moves slot 0 to slot n-1), f_i is the
// inverse move; a step that would drive a coordinate negative is undefined.
struct BoxElem {
  std::vector<int> x;

  BoxElem() = default;
  explicit BoxElem(std::vector<int> coords) : x(std::move(coords)) {}

  int rank() const { return static_cast<int>(x.size()); }
  int level() const { return std::accumulate(x.begin(), x.end(), 0); }

  std::optional<BoxElem> e(int i) const {
    const int n = rank();
    i = imod(i, n);
    BoxElem r = *this;
    const int from = i;
    const int to = imod(i - 1, n);
    if (r.x[from] == 0) return std::nullopt;
    r.x[from] -= 1;
    r.x[to] += 1;
    return r;
  }

  std::optional<BoxElem> f(int i) const {
    const int n = rank();
    i = imod(i, n);
    BoxElem r = *this;
    const int from = imod(i - 1, n);
    const int to = i;
    if (r.x[from] == 0) return std::nullopt;
    r.x[from] -= 1;
    r.x[to] += 1;
    return r;
  }

  int eps(int i) const { return x[imod(i, rank())]; }
  int phi(int i) const { return x[imod(i - 1, rank())]; }

  // eps(b) = sum x_i Lambda_i, phi(b) = sum x_i Lambda_{i+1}.
  Weight eps_weight() const {
    Weight w = Weight::zero(rank());
    for (int i = 0; i < rank(); ++i) w.lam[i] = x[i];
    return w;
  }
  Weight phi_weight() const {
    Weight w = Weight::zero(rank());
    for (int i = 0; i < rank(); ++i) w.lam[imod(i + 1, rank())] += x[i];
    return w;
  }

  // Classical weight phi - eps.
  Weight weight() const { return phi_weight() - eps_weight(); }

  friend auto operator<=>(const BoxElem&, const BoxElem&) = default;
};

// sigma on elements: cyclic left shift, intertwining e_{i-1} sigma = sigma e_i.
inline BoxElem sigma_elem(const BoxElem& b) {
  BoxElem r = b;
  std::rotate(r.x.begin(), r.x.begin() + 1, r.x.end());
  return r;
}

// All of B^l in canonical (lexicographic) order.
inline std::vector<BoxElem> box_elements(int n, int l) {
  std::vector<BoxElem> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[pos] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, l);
  return out;
}

// Dominant classical weights of level l, canonical order.
inline std::vector<Weight> dominant_weights(int n, int l) {
  std::vector<Weight> out;
  for (const BoxElem& b : box_elements(n, l)) out.emplace_back(n, b.x, 0);
  return out;
}

// The unique b with phi(b) = lambda: b(lambda) = (m_1, ..., m_{n-1}, m_0).
inline BoxElem b_of(const Weight& lambda) {
  if (!lambda.dominant())
    throw DomainError("b_of: weight is not dominant");
  const int n = lambda.n;
  std::vector<int> x(n);
  for (int j = 0; j < n; ++j) x[j] = lambda.lam[imod(j + 1, n)];
  return BoxElem(std::move(x));
}

inline BoxElem b_of(const Weight& lambda, int l) {
  if (lambda.level() != l)
    throw LevelMismatch("b_of: weight level " + std::to_string(lambda.level()) +
                        " does not match crystal level " + std::to_string(l));
  return b_of(lambda);
}

// Ground-state factor at position k (1-based from the right): b(sigma^{k-1} lambda).
inline BoxElem ground_elem(int k, const Weight& lambda) {
  return b_of(sigma_pow(lambda, k - 1));
}

// Operational perfectness report for B^l: (a) the tensor square is connected
// under all e_i/f_i, (b) the minimal eps-level equals l, (c) eps and phi
// restrict to bijections between the minimal-level elements and the level-l
// dominant weights.  These clauses are what the path machinery consumes;
// the report does not claim more.
struct PerfectReport {
  int n = 0;
  int l = 0;
  bool connected = false;
  bool min_level = false;
  bool eps_bijective = false;
  bool phi_bijective = false;
  std::size_t min_level_count = 0;
  std::size_t dominant_count = 0;

  bool pass() const { return connected && min_level && eps_bijective && phi_bijective; }
};

inline PerfectReport perfect_check(int n, int l) {
  PerfectReport rep;
  rep.n = n;
  rep.l = l;
  const auto elems = box_elements(n, l);

  // (a) connectedness of B x B under all operator colors.
  using Pair = std::pair<BoxElem, BoxElem>;
  std::set<Pair> seen;
  std::vector<Pair> queue;
  Pair start{elems.front(), elems.front()};
  seen.insert(start);
  queue.push_back(start);
  auto tensor_step = [&](const Pair& p, int i, bool raise) -> std::optional<Pair> {
    // two-factor rule in terms of phi/eps comparison
    const auto& [bl, br] = p;
    if (raise) {
      if (bl.phi(i) >= br.eps(i)) {
        auto im = bl.e(i);
        if (!im) return std::nullopt;
        return Pair{*im, br};
      }
      auto im = br.e(i);
      if (!im) return std::nullopt;
      return Pair{bl, *im};
    }
    if (bl.phi(i) > br.eps(i)) {
      auto im = bl.f(i);
      if (!im) return std::nullopt;
      return Pair{*im, br};
    }
    auto im = br.f(i);
    if (!im) return std::nullopt;
    return Pair{bl, *im};
  };
  while (!queue.empty()) {
    Pair p = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i)
      for (bool raise : {true, false})
        if (auto q = tensor_step(p, i, raise); q && seen.insert(*q).second)
          queue.push_back(*q);
  }
  rep.connected = seen.size() == elems.size() * elems.size();

  // (b) minimal level of eps.
  int min_lv = -1;
  std::vector<BoxElem> minimal;
  for (const auto& b : elems) {
    const int lv = b.eps_weight().level();
    if (min_lv < 0 || lv < min_lv) min_lv = lv;
  }
  for (const auto& b : elems)
    if (b.eps_weight().level() == min_lv) minimal.push_back(b);
  rep.min_level = (min_lv == l);
  rep.min_level_count = minimal.size();

  // (c) eps/phi bijections onto (P_cl^+)_l.
  const auto dom = dominant_weights(n, l);
  rep.dominant_count = dom.size();
  std::set<Weight> dom_set(dom.begin(), dom.end());
  std::set<Weight> eps_im, phi_im;
  for (const auto& b : minimal) {
    eps_im.insert(b.eps_weight());
    phi_im.insert(b.phi_weight());
  }
  rep.eps_bijective = eps_im.size() == minimal.size() && eps_im == dom_set;
  rep.phi_bijective = phi_im.size() == minimal.size() && phi_im == dom_set;
  return rep;
}

inline std::string box_to_string(const BoxElem& b) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < b.rank(); ++i) {
    if (i) os << ',';
    os << b.x[i];
  }
  os << ')';
  return os.str();
}

// Two-letter form of the rank-2 crystal ("00", "01", "11"): a word of l
// letters with x_0 zeros and x_1 ones.
inline std::string box_to_letters(const BoxElem& b) {
  std::string s;
  for (int i = 0; i < b.x[0]; ++i) s += '0';
  for (int i = 0; i < b.x[1]; ++i) s += '1';
  return s;
}

// Accepts "x0,x1,..." for any rank, or the two-letter sugar for n = 2.
inline BoxElem parse_box(const std::string& s, int n, int l) {
  if (n == 2 && !s.empty() && s.find(',') == std::string::npos) {
    int zeros = 0, ones = 0;
    bool letters = true;
    for (char c : s) {
      if (c == '0')
        ++zeros;
      else if (c == '1')
        ++ones;
      else
        letters = false;
    }
    if (letters && zeros + ones == l) return BoxElem({zeros, ones});
  }
  std::vector<int> x;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) x.push_back(std::stoi(tok));
  BoxElem b(std::move(x));
  if (b.rank() != n || b.level() != l)
    throw DomainError("parse_box: '" + s + "' is not an element of the rank-" +
                      std::to_string(n) + " level-" + std::to_string(l) + " crystal");
  for (int v : b.x)
    if (v < 0) throw DomainError("parse_box: negative coordinate in '" + s + "'");
  return b;
}

}  // namespace pathcrystal
