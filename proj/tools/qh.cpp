// qh: small quantum cohomology of one- and two-curve blow-ups of P3/Q3.
//
// Exit codes: 0 success, 1 input error, 2 underdetermined, 3 inconsistent,
// 4 ambiguous solution, 5 budget exceeded, 6 verification mismatch,
// 7 semisimplicity inconclusive.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qh/descriptor.hpp"
#include "qh/pipeline.hpp"
#include "qh/report.hpp"
#include "qh/semisimple.hpp"

#ifdef QH_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using namespace qh;
using Clock = std::chrono::steady_clock;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUnderdetermined = 2;
constexpr int kInconsistent = 3;
constexpr int kAmbiguous = 4;
constexpr int kBudget = 5;
constexpr int kVerifyMismatch = 6;
constexpr int kInconclusive = 7;

struct Timer {
  std::string stage;
  Clock::time_point start = Clock::now();
  explicit Timer(std::string s) : stage(std::move(s)) {}
  ~Timer() {
    std::chrono::duration<double> d = Clock::now() - start;
    std::cerr << "[time] " << stage << ": " << d.count() << "s\n";
  }
};

BuchbergerOptions budget_options() {
  BuchbergerOptions opts;
  if (const char* env = std::getenv("QH_BUDGET")) {
    try {
      opts.step_budget = std::stol(env);
    } catch (...) {
      throw std::invalid_argument("QH_BUDGET must be an integer");
    }
  }
  return opts;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return kOk;
    case SolveStatus::Underdetermined: return kUnderdetermined;
    case SolveStatus::Inconsistent: return kInconsistent;
    case SolveStatus::Ambiguous: return kAmbiguous;
  }
  return kInputError;
}

std::string solution_line(const QContext& ctx, const std::map<VarId, Rational>& values, int pos) {
  const auto& sym = ctx.essential().symbols[pos];
  return "x" + std::to_string(pos + 1) + " = " + symbol_key(ctx.ring(), ctx.lattice(), sym) +
         " = " + values.at(ctx.x_var(pos)).str();
}

int cmd_describe(const std::string& path) {
  auto d = load_descriptor(path);
  auto data = build_blowup_ring(d);
  RunReport rep;
  rep.name = d.name;
  std::cout << "name: " << d.name << "\n"
            << "ambient: " << ambient_name(d.ambient) << "\n";
  for (const auto& c : d.curves)
    std::cout << "curve " << c.index << ": rational, degree " << c.degree << "\n";
  std::cout << "b2 = " << data.ring.b2() << ", hodge length = " << hodge_length(data.ring) << "\n";
  std::cout << "-K = ";
  for (std::size_t i = 0; i < data.ring.divisors().size(); ++i) {
    long c = data.ring.anticanonical()[i];
    std::cout << (i ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : ""))
              << (std::abs(c) != 1 ? std::to_string(std::abs(c)) : "")
              << data.ring.basis_name(data.ring.divisors()[i]);
  }
  std::cout << "\n";
  for (int i = 0; i < data.lattice.rank(); ++i)
    std::cout << "deg q" << i << " = " << data.lattice.minus_k_basis(i) << "\n";
  auto gen = make_gen_ring(data.ring, data.lattice);
  std::cout << "classical relations:\n";
  for (const auto& r : classical_relations(data.ring, gen)) std::cout << "  " << r.str() << "\n";
  return kOk;
}

int cmd_essential(const std::string& path, bool list) {
  Timer t("essential");
  QContext ctx(load_descriptor(path));
  std::cout << "N = " << ctx.essential().size() << "\n";
  if (list)
    for (int i = 0; i < ctx.essential().size(); ++i)
      std::cout << "  x" << (i + 1) << " = "
                << symbol_key(ctx.ring(), ctx.lattice(), ctx.essential().symbols[i]) << "\n";
  return kOk;
}

int cmd_assoc(const std::string& path, bool analyze, const std::string& order_name) {
  Timer t("assoc");
  QContext ctx(load_descriptor(path));
  const auto& gens = ctx.assoc_ideal().generators;
  std::cout << "N = " << ctx.essential().size() << "\n";
  std::cout << "generators = " << gens.size() << "\n";
  for (const auto& g : gens) {
    std::cout << "P(" << g.i << "," << g.j << "," << g.k << ") ["
              << ctx.ring().basis_name(g.basis_index) << ", "
              << ctx.exp_ring()->monomial_str(ctx.q_monomial(g.q_class)) << "]: " << g.poly.str()
              << "\n";
  }
  if (analyze) {
    OrderKind kind;
    if (order_name == "degrevlex") kind = OrderKind::DegRevLex;
    else if (order_name == "lex") kind = OrderKind::Lex;
    else throw std::invalid_argument("--order must be degrevlex or lex");
    if (kind == OrderKind::Lex) {
      // Lex bases are computable but carry no Hilbert data here.
      Ideal ideal{ctx.x_ring(), {}};
      for (const auto& g : gens) ideal.generators.push_back(g.poly);
      try {
        GroebnerBasis gb = buchberger(ideal, MonomialOrder{OrderKind::Lex, {}, 0}, budget_options());
        std::cout << "lex basis size = " << gb.elements.size()
                  << " (steps " << gb.reduction_steps << ")\n";
      } catch (const BudgetExceeded& e) {
        std::cout << "budget exceeded after " << e.steps << " steps\n";
        return kBudget;
      }
      return kOk;
    }
    auto res = analyze_associativity(ctx, budget_options());
    if (!res.completed) {
      std::cout << "budget exceeded after " << res.reduction_steps << " steps\n";
      return kBudget;
    }
    std::cout << "dim A = " << res.dimension << "\n"
              << "deg A = " << res.degree << "\n"
              << "steps = " << res.reduction_steps << "\n";
  }
  return kOk;
}

int cmd_solve(const std::string& path) {
  Timer t("solve");
  QContext ctx(load_descriptor(path));
  auto jg = build_geometric(ctx);
  auto out = solve_system(ctx, jg, budget_options());
  std::cout << "status: " << solve_status_name(out.status) << "\n";
  if (out.status == SolveStatus::Unique) {
    for (int i = 0; i < ctx.essential().size(); ++i)
      std::cout << "  " << solution_line(ctx, out.values, i) << "\n";
  } else if (out.status == SolveStatus::Underdetermined) {
    std::cout << "residual dimension = " << out.residual_dimension
              << " (more geometric relations needed)\n";
  } else if (out.status == SolveStatus::Ambiguous) {
    std::cout << "residual degree = " << out.residual_degree << "\n";
  }
  return status_exit(out.status);
}

struct PipelineRun {
  QContext ctx;
  SolveOutcome outcome;
  QuantumPresentation pres;

  explicit PipelineRun(const ThreefoldDescriptor& d) : ctx(d) {
    auto jg = build_geometric(ctx);
    outcome = solve_system(ctx, jg, budget_options());
    if (outcome.status == SolveStatus::Unique) pres = quantize_presentation(ctx, outcome.values);
  }
};

int cmd_present(const std::string& path) {
  Timer t("present");
  PipelineRun run(load_descriptor(path));
  if (run.outcome.status != SolveStatus::Unique) {
    std::cout << "status: " << solve_status_name(run.outcome.status) << "\n";
    return status_exit(run.outcome.status);
  }
  for (const auto& r : run.pres.relations) std::cout << r.str() << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& expect_path) {
  Timer t("verify");
  auto expected_data = load_expected(expect_path);
  PipelineRun run(load_descriptor(path));
  if (run.outcome.status != SolveStatus::Unique) {
    std::cout << "status: " << solve_status_name(run.outcome.status) << "\n";
    return status_exit(run.outcome.status);
  }
  bool ok = true;
  if (expected_data.essential_count >= 0) {
    bool match = run.ctx.essential().size() == expected_data.essential_count;
    std::cout << "N: computed " << run.ctx.essential().size() << ", expected "
              << expected_data.essential_count << (match ? " [ok]" : " [MISMATCH]") << "\n";
    ok = ok && match;
  }
  if (expected_data.dim_a >= 0) {
    auto res = analyze_associativity(run.ctx, budget_options());
    if (!res.completed) {
      std::cout << "dim/deg A: budget exceeded after " << res.reduction_steps
                << " steps, skipping\n";
    } else {
      bool match = res.dimension == expected_data.dim_a && res.degree == expected_data.deg_a;
      std::cout << "dim A, deg A: computed (" << res.dimension << ", " << res.degree
                << "), expected (" << expected_data.dim_a << ", " << expected_data.deg_a << ")"
                << (match ? " [ok]" : " [MISMATCH]") << "\n";
      ok = ok && match;
    }
  }
  std::vector<Polynomial> expected;
  for (const auto& s : expected_data.relations)
    expected.push_back(Polynomial::parse(run.pres.gen.ring.get(), s));
  auto rep = verify_against_expected(run.pres, expected);
  std::cout << "relations: ideal equality " << (rep.ideal_equal ? "[ok]" : "[MISMATCH]")
            << ", syntactic match " << (rep.syntactic_equal ? "[yes]" : "[no]") << "\n";
  for (std::size_t i = 0; i < run.pres.relations.size(); ++i)
    std::cout << "  computed: " << run.pres.relations[i].str() << "\n";
  ok = ok && rep.ideal_equal;
  return ok ? kOk : kVerifyMismatch;
}

void print_trials(const GenericSemisimplicity& res, const std::vector<VarId>& qvars,
                  const PolyRing* ring);

int cmd_semisimple(const std::string& path, std::uint64_t seed, int trials) {
  Timer t("semisimple");
  std::string text = read_file(path);
  GenericSemisimplicity res;
  std::vector<VarId> qvars;
  if (looks_like_presentation(text)) {
    auto lp = parse_presentation(text);
    qvars = lp.input.q_vars;
    res = generic_semisimplicity(lp.input, trials, seed);
    print_trials(res, qvars, lp.input.ring);
  } else {
    PipelineRun run(parse_descriptor(text));
    if (run.outcome.status != SolveStatus::Unique) {
      std::cout << "status: " << solve_status_name(run.outcome.status) << "\n";
      return status_exit(run.outcome.status);
    }
    auto in = presentation_input(run.pres);
    res = generic_semisimplicity(in, trials, seed);
    print_trials(res, in.q_vars, in.ring);
  }
  bool ss = res.verdict == SemisimpleVerdict::Semisimple;
  std::cout << "verdict: " << (ss ? "SEMISIMPLE" : "INCONCLUSIVE-LIKELY-NOT") << "\n";
  return ss ? kOk : kInconclusive;
}

int cmd_all(const std::vector<std::string>& paths, std::uint64_t seed, int trials) {
  Timer t("all");
  std::vector<ThreefoldDescriptor> descs;
  for (const auto& p : paths) descs.push_back(load_descriptor(p));
  std::vector<RunReport> reports(descs.size());
  std::vector<int> codes(descs.size(), kOk);
  // One pipeline per descriptor; output gathered in input order.
  auto run_one = [&](std::size_t i) {
    RunReport& rep = reports[i];
    rep.name = descs[i].name;
    try {
      PipelineRun run(descs[i]);
      rep.essential_count = run.ctx.essential().size();
      auto res = analyze_associativity(run.ctx, budget_options());
      rep.groebner_steps = res.reduction_steps;
      if (res.completed)
        rep.analysis = "dim A = " + std::to_string(res.dimension) +
                       ", deg A = " + std::to_string(res.degree);
      else
        rep.analysis = "budget exceeded";
      rep.solve_status = solve_status_name(run.outcome.status);
      if (run.outcome.status != SolveStatus::Unique) {
        codes[i] = status_exit(run.outcome.status);
        return;
      }
      for (int s = 0; s < run.ctx.essential().size(); ++s)
        rep.solution.push_back(solution_line(run.ctx, run.outcome.values, s));
      for (const auto& r : run.pres.relations) rep.relations.push_back(r.str());
      auto in = presentation_input(run.pres);
      auto ss = generic_semisimplicity(in, trials, seed);
      for (std::size_t k = 0; k < ss.trials.size(); ++k) {
        const auto& tr = ss.trials[k];
        std::string line = "trial " + std::to_string(k) + ": ";
        if (tr.degenerate) {
          line += "degenerate specialization";
        } else {
          line += "q = (";
          for (std::size_t qi = 0; qi < in.q_vars.size(); ++qi)
            line += (qi ? ", " : "") + tr.q_point.at(in.q_vars[qi]).str();
          line += "), dim " + std::to_string(tr.dimension) + ", det(G) = " + tr.gram_det.str() +
                  (tr.semisimple ? " (semisimple)" : " (not semisimple)");
        }
        rep.semisimplicity.push_back(line);
      }
      rep.verdict = ss.verdict == SemisimpleVerdict::Semisimple ? "SEMISIMPLE"
                                                                : "INCONCLUSIVE-LIKELY-NOT";
      if (ss.verdict != SemisimpleVerdict::Semisimple) codes[i] = kInconclusive;
    } catch (const BudgetExceeded&) {
      rep.analysis = "budget exceeded";
      codes[i] = kBudget;
    } catch (const std::exception& e) {
      rep.solve_status = std::string("error: ") + e.what();
      codes[i] = kInputError;
    }
  };
#ifdef QH_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < descs.size(); ++i) run_one(i);
  std::cout << render_reports(reports);
  for (int c : codes)
    if (c != kOk) return c;
  return kOk;
}

void print_trials(const GenericSemisimplicity& res, const std::vector<VarId>& qvars,
                  const PolyRing* ring) {
  for (std::size_t k = 0; k < res.trials.size(); ++k) {
    const auto& tr = res.trials[k];
    std::cout << "trial " << k << ": ";
    if (tr.degenerate) {
      std::cout << "degenerate specialization after retries\n";
      continue;
    }
    std::cout << "q = (";
    for (std::size_t qi = 0; qi < qvars.size(); ++qi)
      std::cout << (qi ? ", " : "") << ring->name(qvars[qi]) << " = "
                << tr.q_point.at(qvars[qi]).str();
    std::cout << "), dim " << tr.dimension << ", det(G) = " << tr.gram_det.str()
              << (tr.semisimple ? " (semisimple)" : " (not semisimple)") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small quantum cohomology of one- and two-curve blow-ups of P3 and Q3"};
  app.require_subcommand(1);

  std::string file, expect_file, order_name = "degrevlex";
  std::vector<std::string> files;
  bool analyze = false, list_symbols = false;
  std::uint64_t seed = 1;
  int trials = 3;

  auto* describe = app.add_subcommand("describe", "classical data of a descriptor");
  describe->add_option("file", file)->required();
  auto* essential = app.add_subcommand("essential", "essential invariant count and symbols");
  essential->add_option("file", file)->required();
  essential->add_flag("--list", list_symbols, "list the symbols");
  auto* assoc = app.add_subcommand("assoc", "associativity ideal with provenance");
  assoc->add_option("file", file)->required();
  assoc->add_flag("--analyze", analyze, "dimension and degree of the ideal");
  assoc->add_option("--order", order_name, "degrevlex|lex");
  auto* solve = app.add_subcommand("solve", "solve J_A + J_G for the invariants");
  solve->add_option("file", file)->required();
  auto* present = app.add_subcommand("present", "quantized presentation");
  present->add_option("file", file)->required();
  auto* verify = app.add_subcommand("verify", "compare against an expected-results file");
  verify->add_option("file", file)->required();
  verify->add_option("--expect", expect_file)->required();
  auto* semisimple = app.add_subcommand("semisimple", "generic semisimplicity verdict");
  semisimple->add_option("file", file)->required();
  semisimple->add_option("--seed", seed);
  semisimple->add_option("--trials", trials);
  auto* all = app.add_subcommand("all", "full pipeline over one or more descriptors");
  all->add_option("files", files)->required();
  all->add_option("--seed", seed);
  all->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) return cmd_describe(file);
    if (essential->parsed()) return cmd_essential(file, list_symbols);
    if (assoc->parsed()) return cmd_assoc(file, analyze, order_name);
    if (solve->parsed()) return cmd_solve(file);
    if (present->parsed()) return cmd_present(file);
    if (verify->parsed()) return cmd_verify(file, expect_file);
    if (semisimple->parsed()) return cmd_semisimple(file, seed, trials);
    if (all->parsed()) return cmd_all(files, seed, trials);
  } catch (const qh::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
