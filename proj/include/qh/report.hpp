#ifndef QH_REPORT_HPP
#define QH_REPORT_HPP

#include <string>
#include <vector>

namespace qh {

// Deterministic per-run report: identical inputs and seeds produce
// byte-identical renderings (wall-clock timings go to stderr, never here).
struct RunReport {
  std::string name;
  int essential_count = -1;
  std::string analysis;  // "dim A = 3, deg A = 1" or budget note, "" if skipped
  std::string solve_status;
  std::vector<std::string> solution;       // "x3 = I(...) = -1"
  std::vector<std::string> relations;      // canonical polynomials f^C - f^Q
  std::vector<std::string> semisimplicity; // per-trial lines
  std::string verdict;
  long groebner_steps = 0;

  std::string render() const;
};

std::string render_reports(const std::vector<RunReport>& reports);

}  // namespace qh

#endif
