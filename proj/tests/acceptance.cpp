// Runs every acceptance criterion once and prints one line per criterion.
//
//   kavc_acceptance_suite [--seed N] [--expect-fail ID]...
//
// Exit status is 0 when the failing criteria are exactly those named with
// --expect-fail (none by default), 1 otherwise. Known failures stay visible
// as FAIL lines; the flag only keeps them from masking new ones.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

#include "kavc/acceptance.hpp"

int main(int argc, char** argv) {
  kavc::AcceptanceOptions opts;
  std::vector<int> expected;
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", opts.seed, "corpus seed");
  app.add_option("--expect-fail", expected, "criterion known to fail")
      ->check(CLI::Range(1, kavc::kCriterionCount));
  CLI11_PARSE(app, argc, argv);

  const auto reports = kavc::run_acceptance(opts);
  std::set<int> failed;
  for (const auto& r : reports) {
    std::printf("%s criterion %d (%s): %.2fs of %.0fs budget; %s\n", r.passed() ? "PASS" : "FAIL",
                r.id, r.title.c_str(), r.seconds, r.budget_seconds, r.detail.c_str());
    if (!r.passed()) failed.insert(r.id);
  }
  std::printf("%zu/%zu criteria passed (seed %llu)\n", reports.size() - failed.size(),
              reports.size(), static_cast<unsigned long long>(opts.seed));

  const std::set<int> known(expected.begin(), expected.end());
  if (failed == known) {
    if (!known.empty()) std::printf("failures match the expected set\n");
    return 0;
  }
  for (int id : failed) {
    if (known.count(id) == 0) std::printf("unexpected failure: criterion %d\n", id);
  }
  for (int id : known) {
    if (failed.count(id) == 0) std::printf("expected failure did not occur: criterion %d\n", id);
  }
  return 1;
}
