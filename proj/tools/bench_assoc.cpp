// Compares the serial reference and OpenMP lanes of the two data-parallel
// kernels: associativity triple expansion and semisimplicity trials.

#include <chrono>
#include <iostream>

#include "qh/descriptor.hpp"
#include "qh/pipeline.hpp"
#include "qh/semisimple.hpp"

#ifdef QH_HAVE_OPENMP
#include <omp.h>
#endif

using namespace qh;
using Clock = std::chrono::steady_clock;

namespace {

double time_expand(const QContext& ctx, ExecutionPolicy policy, int reps) {
  auto t0 = Clock::now();
  std::size_t sink = 0;
  for (int r = 0; r < reps; ++r) sink += expand_triples(ctx, policy).size();
  std::chrono::duration<double> d = Clock::now() - t0;
  if (!sink) std::cerr << "";  // keep the loop observable
  return d.count() / reps;
}

double time_trials(const PresentationInput& in, ExecutionPolicy policy, int trials) {
  auto t0 = Clock::now();
  auto res = generic_semisimplicity(in, trials, 42, policy);
  std::chrono::duration<double> d = Clock::now() - t0;
  if (res.verdict != SemisimpleVerdict::Semisimple) std::cerr << "warning: inconclusive\n";
  return d.count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> files;
  for (int i = 1; i < argc; ++i) files.push_back(argv[i]);
  if (files.empty())
    for (const char* n : {"M2_21", "M3_25", "M3_10"})
      files.push_back(std::string(QH_BENCH_DATA_DIR) + "/" + n + ".fano");

#ifdef QH_HAVE_OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both lanes run serially\n";
#endif
  std::cout << "kernel                          serial[s]   parallel[s]  speedup\n";
  for (const auto& f : files) {
    auto d = load_descriptor(f);
    QContext ctx(d);
    const int reps = ctx.ring().b2() == 2 ? 50 : 10;
    double ts = time_expand(ctx, ExecutionPolicy::Serial, reps);
    double tp = time_expand(ctx, ExecutionPolicy::Parallel, reps);
    // The two lanes must agree exactly before timings mean anything.
    auto a = expand_triples(ctx, ExecutionPolicy::Serial);
    auto b = expand_triples(ctx, ExecutionPolicy::Parallel);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].coeff == b[i].coeff;
    std::printf("expand %-24s %10.5f %12.5f %8.2fx%s\n", d.name.c_str(), ts, tp,
                ts / (tp > 0 ? tp : 1e-12), same ? "" : "  MISMATCH");

    auto jg = build_geometric(ctx);
    auto out = solve_system(ctx, jg);
    if (out.status == SolveStatus::Unique) {
      auto pres = quantize_presentation(ctx, out.values);
      auto in = presentation_input(pres);
      const int trials = 8;
      double ss = time_trials(in, ExecutionPolicy::Serial, trials);
      double sp = time_trials(in, ExecutionPolicy::Parallel, trials);
      std::printf("trials %-24s %10.5f %12.5f %8.2fx\n", d.name.c_str(), ss, sp,
                  ss / (sp > 0 ? sp : 1e-12));
    }
  }
  return 0;
}
