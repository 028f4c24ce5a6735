#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

using namespace kavc;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide reports verdicts through the exit status") {
  const Run valid = run({"decide", "x <= x + y"});
  CHECK(valid.status == kExitValid);
  CHECK(valid.out.find("verdict: valid") != std::string::npos);

  const Run refuted = run({"decide", "~x = ~x.~x"});
  CHECK(refuted.status == kExitRefuted);
  CHECK(refuted.out.find("witness:") != std::string::npos);

  const Run unknown = run({"--max-witness-len", "3", "decide", "~x* <= x + ~x*"});
  CHECK(unknown.status == kExitUnknown);
  CHECK(unknown.out.find("words up to length 3") != std::string::npos);
}

TEST_CASE("decide JSON lists each inclusion") {
  const Run r = run({"--json", "decide", "y <= ~x"});
  REQUIRE(r.status == kExitRefuted);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "refuted");
  REQUIRE(doc["inclusions"].size() == 1);
  const auto& part = doc["inclusions"][0];
  CHECK(part["direction"] == "lhs_not_in_rhs");
  CHECK(part["procedure"] == "composition_free");
  CHECK(part["counterexample"]["assignment"].contains("x"));
  CHECK(part["counterexample"]["assignment"].contains("y"));
}

TEST_CASE("separate and the one-variable commands") {
  const Run s = run({"separate", "x . ~y", "x . ~y . x"});
  CHECK(s.status == kExitRefuted);
  CHECK(run({"separate", "x", "x"}).status == kExitValid);

  CHECK(run({"lang1", "z . ~z", "~z . z"}).status == kExitValid);
  const Run l1 = run({"--json", "lang1", "z . z", "z"});
  CHECK(l1.status == kExitRefuted);
  CHECK(nlohmann::json::parse(l1.out)["counterexample"].contains("direction"));

  const Run l2 = run({"--json", "lang2", "z . ~z", "~z . z"});
  CHECK(l2.status == kExitRefuted);
  const auto doc = nlohmann::json::parse(l2.out);
  CHECK(doc["procedure"] == "lang2");
  CHECK(doc["counterexample"]["alphabet"] == 2);
  CHECK(run({"lang2", "z . z", "z"}).out.find("(lang1)") != std::string::npos);
}

TEST_CASE("langeq compares over either alphabet") {
  CHECK(run({"langeq", "~x", "~x . ~x"}).status == kExitRefuted);
  CHECK(run({"--over", "v", "langeq", "~x", "~x . ~x"}).status == kExitValid);
  const Run r = run({"langeq", "x . y", "y . x"});
  CHECK(r.out == "not equivalent; separator: x y\n");
}

TEST_CASE("from-dnf emits the reductions") {
  const Run valid = run({"from-dnf"}, "p\n!p\n");
  CHECK(valid.status == kExitValid);
  CHECK(valid.out.find("term: p + ~p") != std::string::npos);
  CHECK(valid.out.find("identity: 1 <= p + ~p") != std::string::npos);
  CHECK(valid.out.find("fresh-variable: _z0 <= _z0 . (p + ~p)") != std::string::npos);

  const Run invalid = run({"--json", "from-dnf", "-"}, "p & q\n");
  CHECK(invalid.status == kExitRefuted);
  CHECK(nlohmann::json::parse(invalid.out)["valid"] == false);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"--over", "w", "langeq", "x", "y"}).status == kExitUsage);
  CHECK(run({"separate", "x + y", "x"}).status == kExitUsage);
  CHECK(run({"lang1", "x", "y"}).status == kExitUsage);
  const Run bad = run({"decide", "x <= (y"});
  CHECK(bad.status == kExitInput);
  CHECK(bad.err.find("line 1") != std::string::npos);
  CHECK(run({"from-dnf", "/nonexistent/file"}).status == kExitInput);
  CHECK(run({"from-dnf"}, "p &\n").status == kExitInput);
  CHECK(run({"--help"}).status == kExitValid);
}

TEST_CASE("selftest runs a single criterion") {
  const Run r = run({"selftest", "--criterion", "1"});
  CHECK(r.status == kExitValid);
  CHECK(r.out.find("[PASS] 1 ") != std::string::npos);
}
