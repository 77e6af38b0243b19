// fgaut: run verification suites, evaluate expressions, export tree balls, and probe
// fixed words and centralizers.

#include "fgaut/expression.hpp"
#include "fgaut/families.hpp"
#include "fgaut/splittings.hpp"
#include "fgaut/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<std::size_t> n, L, depth;
  std::size_t jobs = 1;
  bool fail_fast = false;
  bool summary = false;
  bool timing = false;
  bool list = false;
};

int cmd_verify(const VerifyOptions& o) {
  using namespace fgaut::verify;
  if (o.list) {
    for (const auto& s : registry()) std::cout << s.name << "\t" << s.anchor << "\n";
    return kExitPass;
  }
  auto suites = select(o.suite);
  if (suites.empty()) {
    std::cerr << "error: no suite matches '" << o.suite << "' (try --list)\n";
    return kExitUsage;
  }
  SuiteParams params{o.seed, o.n, o.L, o.depth};
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  run_suites(suites, params, o.jobs, o.fail_fast, [&](const SuiteReport& r) {
    std::cout << r.to_json(o.timing) << "\n" << std::flush;
    switch (r.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; break;
      case Verdict::inconclusive: ++inconclusive; break;
    }
  });
  if (o.summary) {
    std::cout << "{\"summary\":true,\"suites\":" << pass + fail + inconclusive << ",\"pass\":" << pass
              << ",\"fail\":" << fail << ",\"inconclusive\":" << inconclusive << "}\n";
  }
  return fail ? kExitFail : kExitPass;
}

struct EvalOptions {
  std::string expr;
  bool aut = false, mk = false;
  std::optional<std::size_t> n;
  std::size_t inverse_search = 6;
};

int cmd_eval(const EvalOptions& o) {
  if (o.mk) {
    std::cout << fgaut::eval_mk(fgaut::Basis::standard(2), o.expr, o.inverse_search).to_string() << "\n";
    return kExitPass;
  }
  const fgaut::Basis b = fgaut::Basis::standard(o.n.value_or(fgaut::infer_rank(o.expr)));
  if (o.aut) {
    std::cout << fgaut::eval_automorphism(b, o.expr, o.inverse_search).to_string() << "\n";
  } else {
    std::cout << fgaut::eval_word(b, o.expr).to_string() << "\n";
  }
  return kExitPass;
}

struct BallOptions {
  std::string spec;
  std::string from_json;
  std::size_t L = 2;
  std::string format = "dot";
  std::string output;
};

int cmd_ball(const BallOptions& o) {
  std::optional<fgaut::TreeBall> ball;
  if (!o.from_json.empty()) {
    std::ifstream in(o.from_json);
    if (!in) {
      std::cerr << "error: cannot read " << o.from_json << "\n";
      return kExitUsage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    ball = fgaut::ball_from_json(ss.str());
  } else if (!o.spec.empty()) {
    ball = fgaut::build_ball(fgaut::parse_rose_spec(o.spec), o.L);
  } else {
    std::cerr << "error: give a splitting spec such as rose@N=3,k=1, or --from-json\n";
    return kExitUsage;
  }
  const std::string text = o.format == "json" ? fgaut::to_json(*ball) : fgaut::to_dot(*ball);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return kExitFail;
    }
  }
  return kExitPass;
}

struct FixOptions {
  std::string literal;
  std::size_t L = 3;
  std::optional<std::size_t> n;
  std::size_t inverse_search = 6;
};

int cmd_fix(const FixOptions& o) {
  const fgaut::Basis b = fgaut::Basis::standard(o.n.value_or(fgaut::infer_rank(o.literal)));
  auto phi = fgaut::eval_automorphism(b, o.literal, o.inverse_search);
  for (const auto& w : fgaut::fixed_words(phi, o.L)) std::cout << w.to_string() << "\n";
  return kExitPass;
}

struct CentralizerOptions {
  std::vector<std::string> targets;
  std::size_t depth = 1;
  std::optional<std::size_t> n;
};

int cmd_centralizer(const CentralizerOptions& o) {
  std::vector<fgaut::Automorphism> gens;
  std::size_t rank = o.n.value_or(3);
  // A family spec's head (before '@' or '~') never contains '->'; a conjugator after '~' may.
  const std::string head = o.targets.front().substr(0, o.targets.front().find_first_of("@~"));
  if (o.targets.size() == 1 && head.find("->") == std::string::npos && head != "1") {
    auto spec = fgaut::parse_family_spec(o.targets.front(), rank);
    rank = spec.rank;
    for (const auto& f : fgaut::family_generators(spec.kind, spec.rank, spec.conj)) {
      gens.insert(gens.end(), f.generators.begin(), f.generators.end());
    }
  } else {
    if (!o.n) {
      for (const auto& t : o.targets) rank = std::max(rank, fgaut::infer_rank(t));
    }
    const fgaut::Basis b = fgaut::Basis::standard(rank);
    for (const auto& t : o.targets) gens.push_back(fgaut::eval_automorphism(b, t));
  }
  for (const auto& c : fgaut::centralizer_in(gens, fgaut::stab0_candidates(rank, o.depth))) {
    std::cout << c.to_string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-group automorphisms: products, Nielsen transformations, rose stabilizers"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run seeded property suites; one JSON line per suite");
  verify->add_option("--suite", vo.suite, "Suite name, prefix ('mk.' or 'mk.*') or 'all'");
  verify->add_option("--seed", vo.seed, "64-bit seed");
  verify->add_option("--n", vo.n, "Rank N where a suite takes one")->check(CLI::Range(2, 12));
  verify->add_option("--L", vo.L, "Length bound override");
  verify->add_option("--depth", vo.depth, "Composition depth override");
  verify->add_option("--jobs", vo.jobs, "Concurrent suites")->check(CLI::Range(1, 256));
  verify->add_flag("--fail-fast", vo.fail_fast, "Stop after the first failing suite");
  verify->add_flag("--summary", vo.summary, "Append a summary line");
  verify->add_flag("--timing", vo.timing, "Include elapsed_ms (output is then not reproducible)");
  verify->add_flag("--list", vo.list, "List registered suites");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "Evaluate a product and print its normal form");
  eval->add_option("expression", eo.expr, "Expression")->required();
  auto* aut_flag = eval->add_flag("--aut", eo.aut, "Automorphism expression");
  eval->add_flag("--mk", eo.mk, "M_k(F_2) expression")->excludes(aut_flag);
  eval->add_option("--n", eo.n, "Rank (default: inferred from the letters used)")->check(CLI::Range(1, 64));
  eval->add_option("--inverse-search", eo.inverse_search, "Length bound when searching for inverse witnesses");

  BallOptions bo;
  auto* ball = app.add_subcommand("ball", "Export a ball of a collapsed-rose Bass-Serre tree");
  ball->add_option("spec", bo.spec, "Splitting, e.g. rose@N=4,k=2");
  ball->add_option("--from-json", bo.from_json, "Read a ball exported with --format json");
  ball->add_option("--L", bo.L, "Normal-form length bound");
  ball->add_option("--format", bo.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  ball->add_option("-o,--output", bo.output, "Write to a file instead of stdout");

  FixOptions fo;
  auto* fix = app.add_subcommand("fix", "List reduced words of length <= L fixed by an automorphism");
  fix->add_option("automorphism", fo.literal, "Automorphism literal or expression")->required();
  fix->add_option("--L", fo.L, "Length bound");
  fix->add_option("--n", fo.n, "Rank (default: inferred)")->check(CLI::Range(1, 64));
  fix->add_option("--inverse-search", fo.inverse_search, "Length bound when searching for inverse witnesses");

  CentralizerOptions co;
  auto* centralizer = app.add_subcommand("centralizer", "Bounded centralizer probe over the rose stabilizer");
  centralizer->add_option("targets", co.targets, "Family spec (AutTauCentral@N=3) or automorphism literals")
      ->required();
  centralizer->add_option("--depth", co.depth, "Coordinate length of probe candidates");
  centralizer->add_option("--n", co.n, "Rank (default 3)")->check(CLI::Range(3, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*eval) return cmd_eval(eo);
    if (*ball) return cmd_ball(bo);
    if (*fix) return cmd_fix(fo);
    if (*centralizer) return cmd_centralizer(co);
  } catch (const fgaut::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
