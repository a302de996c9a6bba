#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "drg/errors.hpp"
#include "drg/pipeline.hpp"
#include "drg/problem.hpp"
#include "drg/report.hpp"

using namespace drg;

namespace {

std::string problem_path(const std::string& name) { return std::string(DRG_PROBLEMS_DIR) + "/" + name; }

struct Output {
  std::string out;
  int status = -1;
};

Output run_cli(const std::string& args) {
  Output o;
  std::string cmd = std::string(DRG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) o.out.append(buf.data(), got);
  int raw = pclose(pipe.release());
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string with_datum(const std::string& datum, const std::string& rest = "") {
  return R"({"schema": "drg-problem/1", "name": "t", "root_datum": )" + datum + rest + "}";
}

}  // namespace

TEST_CASE("problem files parse") {
  ProblemFile p = parse_problem(problem_path("sl2_z2.json"));
  CHECK(p.datum().datum().rank() == 1);
  CHECK(p.gamma.order() == 2);
  CHECK(p.ad.images.size() == 2);
  for (const char* f : {"pgl2_z2.json", "gl2_z2.json", "pgl3_z2.json", "d4_adjoint.json", "torus_inversion.json",
                        "g2.json", "spin8_triality.json"})
    CHECK_NOTHROW(parse_problem(problem_path(f)));
  ProblemFile t = parse_problem_text(with_datum(R"({"type": "B2", "form": "simply_connected"})"));
  CHECK(t.gamma.order() == 1);
  ProblemFile s = parse_problem_text(with_datum(R"({"rank": 2, "simple_roots": [[2, -1], [-1, 2]],
                                                    "simple_coroots": [[1, 0], [0, 1]]})"));
  CHECK(s.datum().datum().num_roots() == 6);
  ProblemFile tab = parse_problem_text(
      with_datum(R"({"rank": 1, "roots": [], "coroots": []})", R"(, "gamma": {"table": [[0, 1], [1, 0]], "generators": [1]}, "ad": [[[-1]]])"));
  CHECK(tab.gamma.order() == 2);
}

TEST_CASE("problem errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_problem_text(text);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"schema": "drg-problem/1", "root_datum": {"rank": 1, "roots": [[1], [-1]], "coroots": [[1], [-1]]}})")
            .find("root_datum") != std::string::npos);
  std::string bad_ad = message(with_datum(R"({"type": "A2", "form": "adjoint"})",
                                          R"(, "gamma": {"degree": 2, "generators": [[1, 0]]}, "ad": [[[-1, 0], [0, -1]]])"));
  CHECK(bad_ad.find("ad[0]") != std::string::npos);
  CHECK(message(R"({"schema": "drg-problem/2"})").find("schema") != std::string::npos);
  CHECK(message("{\n  \"schema\": ,\n}").find("line") != std::string::npos);
  CHECK(message(with_datum(R"({"type": "A2", "form": "adjoint"})", R"(, "gamma": {"degree": 2, "generators": [[0, 0]]})"))
            .find("gamma.generators") != std::string::npos);
  CHECK_THROWS_AS(parse_problem(problem_path("missing.json")), ValidationError);
}

TEST_CASE("commands") {
  ProblemFile sl2 = parse_problem(problem_path("sl2_z2.json"));
  Report r = run("classify", sl2, {});
  REQUIRE(r.classify);
  CHECK(r.classify->h2_factors == make_vector({2}));
  CHECK(r.classify->classes.size() == 2);
  CHECK(r.classify->classes[0].split);
  CHECK_FALSE(r.classify->classes[1].split);
  CHECK(r.exit_code() == 0);
  Report d = run("dynkin", parse_problem(problem_path("d4_adjoint.json")), {});
  REQUIRE(d.dynkin);
  CHECK(d.dynkin->vertices == 4);
  CHECK(d.dynkin->automorphisms == 6);
  Report w = run("weyl", parse_problem(problem_path("g2.json")), {});
  REQUIRE(w.weyl);
  CHECK(w.weyl->order == 12);
  CHECK(w.weyl->positive_systems == 12);
  Report c = run("center", parse_problem(problem_path("gl2_z2.json")), {});
  REQUIRE(c.center);
  CHECK(c.center->torus_rank == 1);
  Report t = run("classify", parse_problem(problem_path("torus_inversion.json")), {});
  REQUIRE(t.classify);
  CHECK(t.classify->classes.size() == 2);
  CHECK(run("classify", parse_problem(problem_path("pgl2_z2.json")), {}).classify->classes.size() == 1);
  CHECK_THROWS_AS(run("bogus", sl2, {}), ValidationError);
  RunOptions tight;
  tight.budget = 3;
  CHECK_THROWS_AS(run("classify", sl2, tight), BudgetExceeded);
}

TEST_CASE("check passes on every bundled problem") {
  for (const char* f : {"sl2_z2.json", "pgl2_z2.json", "gl2_z2.json", "pgl3_z2.json", "d4_adjoint.json",
                        "torus_inversion.json", "g2.json", "spin8_triality.json"}) {
    CAPTURE(f);
    Report r = run("check", parse_problem(problem_path(f)), {});
    REQUIRE(r.checks);
    for (const auto& item : *r.checks) {
      CAPTURE(item.name);
      CAPTURE(item.detail);
      CHECK(item.ok);
    }
    CHECK(r.exit_code() == 0);
  }
}

TEST_CASE("reports round-trip through JSON") {
  for (const char* f : {"sl2_z2.json", "gl2_z2.json", "pgl3_z2.json", "spin8_triality.json"})
    for (const char* cmd : {"classify", "weyl", "dynkin", "center", "check"}) {
      CAPTURE(f);
      CAPTURE(cmd);
      ProblemFile p = parse_problem(problem_path(f));
      Report r;
      try {
        r = run(cmd, p, {});
      } catch (const ValidationError& e) {
        r = error_report(cmd, "validation", e.what());
      }
      std::string j = report_to_json(r);
      Report back = report_from_json(j);
      CHECK(back == r);
      CHECK(report_to_json(back) == j);
      CHECK_FALSE(report_to_text(r).empty());
    }
  Report e = error_report("classify", "budget", "too big");
  CHECK(e.exit_code() == 2);
  CHECK(report_from_json(report_to_json(e)) == e);
  CHECK_THROWS_AS(report_from_json("{\"schema\": 3}"), ValidationError);
  // Integers beyond a machine word survive.
  Report big;
  big.command = "center";
  big.center = CenterSection{0, Vector{Integer("340282366920938463463374607431768211456")}};
  CHECK(report_from_json(report_to_json(big)) == big);
}

TEST_CASE("command-line tool") {
  Output a = run_cli("classify --input " + problem_path("sl2_z2.json") + " --format json");
  Output b = run_cli("classify --input " + problem_path("sl2_z2.json") + " --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(report_from_json(a.out).classify->classes.size() == 2);
  CHECK(run_cli("check --input " + problem_path("d4_adjoint.json") + " --seed 5").status == 0);
  CHECK(run_cli("classify --input " + problem_path("sl2_z2.json") + " --budget 3 --format json").status == 2);
  Output bad = run_cli("classify --input " + std::string(DRG_PROBLEMS_DIR) + "/../tests/data/bad_pairing.json --format json");
  CHECK(bad.status == 1);
  CHECK(report_from_json(bad.out).error->kind == "validation");
  CHECK(run_cli("classify").status != 0);
}
