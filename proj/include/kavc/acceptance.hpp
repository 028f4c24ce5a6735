// The acceptance battery: exhaustive and randomized checks of every decision
// procedure against independent oracles. Shared by the acceptance test binary
// and `kavc selftest`.

#ifndef KAVC_ACCEPTANCE_HPP
#define KAVC_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kavc/search.hpp"

namespace kavc {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool correct = false;  // every check agreed
  std::string detail;    // counts and a digest of everything produced
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const { return correct && seconds <= budget_seconds; }
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  Execution execution = Execution::parallel;
};

inline constexpr int kCriterionCount = 8;

// id in 1..kCriterionCount.
CriterionReport run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& opts);

// One line per criterion: "[PASS] 3 title: detail". Timings are left out so
// the text is reproducible; render_timings gives them separately.
std::string render(const std::vector<CriterionReport>& reports);
std::string render_timings(const std::vector<CriterionReport>& reports);

}  // namespace kavc

#endif  // KAVC_ACCEPTANCE_HPP
