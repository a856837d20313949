#include "qh/report.hpp"

#include <sstream>

namespace qh {

std::string RunReport::render() const {
  std::ostringstream os;
  os << "== " << name << " ==\n";
  if (essential_count >= 0) os << "essential invariants: N = " << essential_count << "\n";
  if (!analysis.empty()) os << "associativity ideal: " << analysis << "\n";
  if (!solve_status.empty()) os << "solve: " << solve_status << "\n";
  for (const auto& s : solution) os << "  " << s << "\n";
  if (!relations.empty()) {
    os << "relations:\n";
    for (const auto& r : relations) os << "  " << r << "\n";
  }
  for (const auto& s : semisimplicity) os << s << "\n";
  if (!verdict.empty()) os << "semisimplicity: " << verdict << "\n";
  if (groebner_steps > 0) os << "groebner reduction steps: " << groebner_steps << "\n";
  return os.str();
}

std::string render_reports(const std::vector<RunReport>& reports) {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += "\n";
    out += reports[i].render();
  }
  return out;
}

}  // namespace qh
