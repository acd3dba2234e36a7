// Command-line front end: compute crystal graphs, Demazure sets, characters,
// Kostka polynomials and the assumption checkers, and export them as DOT or
// JSON.  Exit codes: 0 success / claim holds, 1 claim verifiably fails,
// 2 usage or resource errors.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "pathcrystal/dot.hpp"
#include "pathcrystal/serialize.hpp"

using namespace pathcrystal;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

Weight parse_lambda(const std::string& csv, int n, int l) {
  std::vector<int> coeffs;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) coeffs.push_back(std::stoi(tok));
  if (static_cast<int>(coeffs.size()) != n)
    throw DomainError("--lambda needs exactly " + std::to_string(n) + " coefficients");
  Weight lambda(n, coeffs);
  if (!lambda.dominant()) throw DomainError("--lambda must be dominant (no negatives)");
  if (lambda.level() != l)
    throw LevelMismatch("--lambda has level " + std::to_string(lambda.level()) +
                        " but --l is " + std::to_string(l));
  return lambda;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw DomainError("cannot open output file " + out_path);
  os << text;
  if (text.empty() || text.back() != '\n') os << '\n';
}

struct Options {
  int n = 2;
  int l = 1;
  std::string lambda_csv;
  int k = 1;
  int L = 2;
  int kappa = 0;  // 0 = determine from the mixing index
  int kappa_max = 4;
  int k_max = 12;
  int depth = 0;
  bool tensor = false;
  bool classical = false;
  std::string format;  // graph: dot|json (default dot); reports: json|text (default json)
  std::string seed;
  std::string mu_csv;
  std::string out;
};

ReflectionTable table_for(const Weight& lambda, int kappa_opt, int kappa_max) {
  const ReflectionTable probe = ReflectionTable::sln_default(lambda.n, 1);
  int kappa = kappa_opt;
  if (kappa <= 0) {
    const auto found = mixing_index(lambda, probe, kappa_max);
    if (!found)
      throw DomainError("no mixing index up to " + std::to_string(kappa_max) +
                        "; pass --kappa explicitly");
    kappa = *found;
  }
  return ReflectionTable::sln_default(lambda.n, kappa);
}

int cmd_graph(const Options& opt) {
  if (opt.tensor) {
    const EnergyTable energy = energy_table(opt.n, opt.l);
    if (opt.format == "json") {
      emit(json(energy).dump(2), opt.out);
    } else {
      emit(tensor_graph(opt.n, opt.l, energy).str(), opt.out);
    }
    return kExitPass;
  }
  if (!opt.seed.empty()) {
    const BoxElem seed = parse_box(opt.seed, opt.n, opt.l);
    std::vector<int> colors;
    for (int i = 0; i < opt.n; ++i) colors.push_back(i);
    const auto closure = enumerate(std::set<Word>{Word({seed})}, colors, colors);
    json elems = json::array();
    for (const Word& w : closure) elems.push_back(w.factors[0]);
    emit(json{{"n", opt.n}, {"l", opt.l}, {"seed", seed}, {"component", elems}}.dump(2),
         opt.out);
    return kExitPass;
  }
  if (opt.format == "json") {
    json edges = json::array();
    for (const BoxElem& b : box_elements(opt.n, opt.l))
      for (int i = 0; i < opt.n; ++i)
        if (auto img = b.f(i))
          edges.push_back(json{{"from", b}, {"to", *img}, {"i", i}});
    emit(json{{"n", opt.n},
              {"l", opt.l},
              {"elements", box_elements(opt.n, opt.l)},
              {"edges", edges}}
             .dump(2),
         opt.out);
    return kExitPass;
  }
  emit(crystal_graph(opt.n, opt.l).str(), opt.out);
  return kExitPass;
}

int cmd_demazure(const Options& opt) {
  const Weight lambda = parse_lambda(opt.lambda_csv, opt.n, opt.l);
  const ReflectionTable rt = table_for(lambda, opt.kappa, opt.kappa_max);
  const DemazureSet s = demazure_recursive(lambda, rt, opt.k, opt.depth);
  json j(s);
  j["kappa"] = rt.kappa;
  emit(j.dump(2), opt.out);
  return kExitPass;
}

int cmd_verify(const Options& opt) {
  const Weight lambda = parse_lambda(opt.lambda_csv, opt.n, opt.l);
  const ReflectionTable rt = table_for(lambda, opt.kappa, opt.kappa_max);
  json steps = json::array();
  std::ostringstream text;
  bool all_pass = true;
  for (int k = 1; k <= opt.k; ++k) {
    const TheoremReport rep = verify_theorem_report(lambda, rt, k);
    all_pass = all_pass && rep.pass();
    steps.push_back(json{{"k", k},
                         {"assumptions", rep.assumptions_ok()},
                         {"lhs_size", rep.lhs_size},
                         {"rhs_size", rep.rhs_size},
                         {"equal", rep.equal},
                         {"status", rep.pass() ? "pass" : "fail"}});
    text << "k=" << k << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.lhs_size
         << " recursive vs " << rep.rhs_size << " tensor-form)\n";
  }
  if (opt.format == "text") {
    text << "status: " << (all_pass ? "pass" : "fail");
    emit(text.str(), opt.out);
  } else {
    emit(json{{"lambda", lambda},
              {"kappa", rt.kappa},
              {"steps", steps},
              {"status", all_pass ? "pass" : "fail"}}
             .dump(2),
         opt.out);
  }
  return all_pass ? kExitPass : kExitClaimFailed;
}

int cmd_character(const Options& opt) {
  const Weight lambda = parse_lambda(opt.lambda_csv, opt.n, opt.l);
  const ReflectionTable rt = table_for(lambda, opt.kappa, opt.kappa_max);
  const DemazureSet s = demazure_recursive(lambda, rt, opt.k, opt.depth);
  json j{{"lambda", lambda}, {"k", opt.k}, {"size", s.elems.size()}};
  if (opt.classical) {
    j["classical_character"] = classical_table_json(clch(s));
  } else {
    const EnergyTable energy = energy_table(opt.n, opt.l);
    j["character"] = affine_table_json(ch_full(s, energy));
    j["classical_character"] = classical_table_json(clch(s));
  }
  emit(j.dump(2), opt.out);
  return kExitPass;
}

int cmd_kostka(const Options& opt) {
  const EnergyTable energy = energy_table(opt.n, opt.l);
  const Partition nu = Partition::rectangle(opt.l, opt.L);
  std::vector<Partition> shapes;
  if (!opt.mu_csv.empty()) {
    std::vector<int> parts;
    std::istringstream is(opt.mu_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
        throw DomainError("--mu must be a weakly decreasing list of positive parts");
    shapes.emplace_back(parts);
    if (shapes.back().sum() != opt.l * opt.L)
      throw DomainError("--mu must be a partition of l*L");
  } else {
    shapes = partitions_max_parts(opt.l * opt.L, opt.n);
  }
  json rows = json::array();
  std::ostringstream text;
  bool all_equal = true;
  for (const Partition& mu : shapes) {
    const QPoly by_energy = kostka_1dsum(mu, opt.n, opt.l, opt.L, energy);
    const QPoly by_charge = kostka_charge(mu, nu);
    const bool equal = by_energy == by_charge;
    all_equal = all_equal && equal;
    rows.push_back(json{{"mu", mu.parts},
                        {"energy_graded", by_energy},
                        {"energy_graded_text", by_energy.str()},
                        {"charge_graded", by_charge},
                        {"charge_graded_text", by_charge.str()},
                        {"value_at_1", by_energy.eval_at_one()},
                        {"equal", equal}});
    text << "K[";
    for (std::size_t i = 0; i < mu.parts.size(); ++i)
      text << (i ? "," : "") << mu.parts[i];
    text << "](q) = " << by_energy.str() << "  |  charge grading: " << by_charge.str()
         << "  |  " << (equal ? "equal" : "DIFFER") << '\n';
  }
  if (opt.format == "text") {
    text << "status: " << (all_equal ? "pass" : "fail");
    emit(text.str(), opt.out);
  } else {
    emit(json{{"n", opt.n},
              {"l", opt.l},
              {"L", opt.L},
              {"polynomials", rows},
              {"status", all_equal ? "pass" : "fail"}}
             .dump(2),
         opt.out);
  }
  return all_equal ? kExitPass : kExitClaimFailed;
}

int cmd_kirillov(const Options& opt) {
  const KirillovReport rep = kirillov_check(opt.n, opt.l, opt.L);
  if (opt.format == "text") {
    std::ostringstream text;
    text << "n=" << rep.n << " l=" << rep.l << " L=" << rep.L << " E0=" << rep.e0
         << ": " << (rep.pass ? "pass" : "fail");
    if (rep.witness) {
      text << "\nfirst differing monomial: q^" << rep.witness->q << " x^(";
      for (std::size_t i = 0; i < rep.witness->x.e.size(); ++i)
        text << (i ? "," : "") << rep.witness->x.e[i];
      text << ")  lhs=" << rep.lhs_coef << " rhs=" << rep.rhs_coef;
    }
    emit(text.str(), opt.out);
  } else {
    emit(json(rep).dump(2), opt.out);
  }
  return rep.pass ? kExitPass : kExitClaimFailed;
}

int cmd_check(const Options& opt) {
  const Weight lambda = parse_lambda(opt.lambda_csv, opt.n, opt.l);
  const ReflectionTable probe = ReflectionTable::sln_default(opt.n, 1);
  const PerfectReport perfect = perfect_check(opt.n, opt.l);
  const auto kappa = mixing_index(lambda, probe, opt.kappa_max);
  const CheckIIIReport iii = check_III(lambda, probe);
  const CheckIVReport iv = check_IV(lambda, probe, opt.k_max);

  const bool ok = perfect.pass() && kappa.has_value() && iii.pass() && iv.all_certified();
  if (opt.format == "text") {
    std::ostringstream text;
    text << "perfectness: " << (perfect.pass() ? "pass" : "fail") << '\n';
    text << "mixing index: ";
    if (kappa)
      text << *kappa;
    else
      text << "not found up to " << opt.kappa_max;
    text << '\n';
    text << "pairing bound (III): " << (iii.pass() ? "pass" : "fail") << '\n';
    text << "Bruhat growth (IV): "
         << (iv.all_certified() ? "certified" : "inconclusive") << " up to k="
         << opt.k_max << '\n';
    text << "status: " << (ok ? "pass" : "fail");
    emit(text.str(), opt.out);
  } else {
    json j{{"perfectness", perfect},
           {"mixing_index", kappa ? json(*kappa) : json(nullptr)},
           {"assumption_III", check_iii_json(iii, lambda)},
           {"assumption_IV", check_iv_json(iv, lambda)}};
    if (kappa) j["assumption_II"] = check_ii_json(check_II(lambda, probe, *kappa), lambda);
    emit(j.dump(2), opt.out);
  }
  return ok ? kExitPass : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine sl_n crystal, path and Demazure-set toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&)> action;

  auto add_common = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--n", opt.n, "rank (number of nodes)")->check(CLI::Range(2, 12));
    sub->add_option("--l", opt.l, "level")->check(CLI::PositiveNumber);
    if (with_lambda)
      sub->add_option("--lambda", opt.lambda_csv,
                      "dominant weight as m_0,...,m_{n-1}, summing to l")
          ->required();
    sub->add_option("-o,--output", opt.out, "write to a file instead of stdout");
  };

  CLI::App* graph = app.add_subcommand("graph", "crystal graph of B^l (or its tensor square)");
  add_common(graph, false);
  graph->add_flag("--tensor", opt.tensor, "emit the tensor square with energies");
  graph->add_option("--format", opt.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--seed", opt.seed,
                    "render the component of one element (rank 2 accepts \"01\" sugar)");
  graph->callback([&] { action = cmd_graph; });

  CLI::App* dem = app.add_subcommand("demazure", "enumerate a Demazure set of truncated paths");
  add_common(dem, true);
  dem->add_option("--k", opt.k, "word length")->check(CLI::NonNegativeNumber);
  dem->add_option("--depth", opt.depth, "truncation depth override");
  dem->add_option("--kappa", opt.kappa, "mixing index override");
  dem->callback([&] { action = cmd_demazure; });

  CLI::App* verify = app.add_subcommand("verify", "check recursion = tensor form for k' <= k");
  add_common(verify, true);
  verify->add_option("--k", opt.k, "verify steps 1..k")->check(CLI::PositiveNumber);
  verify->add_option("--kappa", opt.kappa, "mixing index override");
  verify->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] { action = cmd_verify; });

  CLI::App* character = app.add_subcommand("character", "characters of a Demazure set");
  add_common(character, true);
  character->add_option("--k", opt.k, "word length")->check(CLI::NonNegativeNumber);
  character->add_option("--kappa", opt.kappa, "mixing index override");
  character->add_flag("--classical", opt.classical, "classical character only");
  character->callback([&] { action = cmd_character; });

  CLI::App* kostka = app.add_subcommand("kostka", "Kostka polynomials two ways");
  add_common(kostka, false);
  kostka->add_option("--L", opt.L, "number of tensor factors")->check(CLI::PositiveNumber);
  kostka->add_option("--mu", opt.mu_csv, "one shape as a comma list (default: all)");
  kostka->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  kostka->callback([&] { action = cmd_kostka; });

  CLI::App* kirillov = app.add_subcommand("kirillov", "Demazure character vs Kostka/Schur sum");
  add_common(kirillov, false);
  kirillov->add_option("--L", opt.L, "number of tensor factors (must be divisible by n)")
      ->check(CLI::PositiveNumber);
  kirillov->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  kirillov->callback([&] { action = cmd_kirillov; });

  CLI::App* check = app.add_subcommand("check", "perfectness and assumption reports");
  add_common(check, true);
  check->add_flag("--assumptions", "run the assumption suite (always on)");
  check->add_option("--kappa-max", opt.kappa_max, "largest mixing index to try");
  check->add_option("--k-max", opt.k_max, "certify Bruhat growth up to this step");
  check->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  check->callback([&] { action = cmd_check; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action(opt);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LevelMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (DEMAZURE_CAP overrides the cap)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}
