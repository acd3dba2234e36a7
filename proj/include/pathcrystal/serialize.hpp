#pragma once

#include <json.hpp>

#include "pathcrystal/chars.hpp"
#include "pathcrystal/demazure.hpp"
#include "pathcrystal/energy.hpp"

// JSON forms used by the CLI and golden files.
//   weight      {"n":2,"lam":[2,0],"del":0}
//   box element [2,0]
//   tensor word {"head": weight-or-null, "factors": [[...],...]} left-to-right
//   energy      {"n":..,"l":..,"anchor":[[..],[..]],"entries":[[[..],[..]],h],...}
//   checker     {"assumption":"II|III|IV","params":...,"status":...,"witness":...}

namespace pathcrystal {

using nlohmann::json;

inline void to_json(json& j, const Weight& w) {
  j = json{{"n", w.n}, {"lam", w.lam}, {"del", w.del}};
}
inline void from_json(const json& j, Weight& w) {
  w.n = j.at("n").get<int>();
  w.lam = j.at("lam").get<std::vector<int>>();
  w.del = j.at("del").get<int>();
}

inline void to_json(json& j, const BoxElem& b) { j = b.x; }
inline void from_json(const json& j, BoxElem& b) { b.x = j.get<std::vector<int>>(); }

inline void to_json(json& j, const Word& w) {
  j = json::object();
  j["head"] = w.head ? json(*w.head) : json(nullptr);
  j["factors"] = w.factors;
}
inline void from_json(const json& j, Word& w) {
  if (j.at("head").is_null())
    w.head.reset();
  else
    w.head = j.at("head").get<Weight>();
  w.factors = j.at("factors").get<std::vector<BoxElem>>();
}

inline void to_json(json& j, const EnergyTable& t) {
  j = json::object();
  j["n"] = t.n;
  j["l"] = t.l;
  j["anchor"] = json::array({t.anchor.first, t.anchor.second});
  json entries = json::array();
  for (const auto& [pair, h] : t.h)
    entries.push_back(json::array({json::array({pair.first, pair.second}), h}));
  j["entries"] = std::move(entries);
}

inline void to_json(json& j, const DemazureSet& s) {
  j = json::object();
  j["lambda"] = s.lambda;
  j["word"] = s.word.letters;
  j["depth"] = s.depth;
  j["elements"] = s.elems;
}

inline void to_json(json& j, const PerfectReport& r) {
  j = json{{"n", r.n},
           {"l", r.l},
           {"kind", "operational_perfectness"},
           {"connected", r.connected},
           {"min_level", r.min_level},
           {"eps_bijective", r.eps_bijective},
           {"phi_bijective", r.phi_bijective},
           {"minimal_elements", r.min_level_count},
           {"dominant_weights", r.dominant_count},
           {"status", r.pass() ? "pass" : "fail"}};
}

inline json check_ii_json(const CheckIIReport& r, const Weight& lambda) {
  json items = json::array();
  for (const auto& it : r.items)
    items.push_back(json{{"j", it.j},
                         {"status", it.pass ? "pass" : "fail"},
                         {"lhs_size", it.lhs_size},
                         {"rhs_size", it.rhs_size}});
  return json{{"assumption", "II"},
              {"params", json{{"lambda", lambda}, {"kappa", r.kappa}}},
              {"status", r.pass() ? "pass" : "fail"},
              {"witness", items}};
}

inline json check_iii_json(const CheckIIIReport& r, const Weight& lambda) {
  json viols = json::array();
  for (const auto& v : r.violations)
    viols.push_back(json{{"j", v.j},
                         {"a", v.a},
                         {"b", v.b},
                         {"head_pairing", v.head_pairing},
                         {"eps", v.eps}});
  return json{{"assumption", "III"},
              {"params", json{{"lambda", lambda}}},
              {"status", r.pass() ? "pass" : "fail"},
              {"witness", viols}};
}

inline json check_iv_json(const CheckIVReport& r, const Weight& lambda) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json step{{"k", s.k},
              {"letter", s.letter},
              {"status", s.certified ? "certified" : "inconclusive"}};
    if (s.certified) {
      step["probe"] = s.probe;
      step["pairing"] = s.pairing_value;
    }
    steps.push_back(std::move(step));
  }
  return json{{"assumption", "IV"},
              {"params", json{{"lambda", lambda}}},
              {"status", r.all_certified() ? "certified" : "inconclusive"},
              {"witness", steps}};
}

inline void to_json(json& j, const QPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.c) terms.push_back(json{{"exp", e}, {"coef", c}});
  j = json{{"terms", std::move(terms)}};
}

template <class Key>
json laurent_json(const LaurentTable<Key>& t, const std::function<json(const Key&)>& key) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms) terms.push_back(json{{"exp", key(k)}, {"coef", c}});
  return json{{"terms", std::move(terms)}};
}

inline json classical_table_json(const ClassicalTable& t) {
  return laurent_json<Weight>(t, [](const Weight& w) { return json(w.lam); });
}

inline json affine_table_json(const AffineTable& t) {
  return laurent_json<Weight>(
      t, [](const Weight& w) { return json{{"lam", w.lam}, {"del", w.del}}; });
}

inline json graded_table_json(const GradedTable& t) {
  return laurent_json<GradedMono>(
      t, [](const GradedMono& g) { return json{{"q", g.q}, {"x", g.x.e}}; });
}

inline void to_json(json& j, const KirillovReport& r) {
  j = json{{"n", r.n},
           {"l", r.l},
           {"L", r.L},
           {"E0", r.e0},
           {"status", r.pass ? "pass" : "fail"},
           {"lhs", graded_table_json(r.lhs)},
           {"rhs", graded_table_json(r.rhs)}};
  if (r.witness) {
    j["witness"] = json{{"q", r.witness->q},
                        {"x", r.witness->x.e},
                        {"lhs_coef", r.lhs_coef},
                        {"rhs_coef", r.rhs_coef}};
  }
}

}  // namespace pathcrystal
