#include <string>

#include "doctest.h"
#include "jt/commands.hpp"
#include "jt/problem.hpp"

using namespace jt;

namespace {

std::string problem(const std::string& name) { return std::string(JT_PROBLEMS_DIR) + "/" + name; }

Outcome run(const std::string& cmd, const std::string& file, std::optional<std::size_t> i = {},
            std::optional<std::size_t> j = {}) {
  CommandArgs a;
  a.command = cmd;
  a.input = problem(file);
  a.i = i;
  a.j = j;
  return run_command(a);
}

std::string parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("problem files parse") {
  ProblemFile p = load_problem(problem("matrix_pair.json"));
  CHECK(p.backend == Backend::matrix);
  CHECK(p.dim == 3);
  CHECK(p.matrices.size() == 2);
  CHECK(p.matrices[1].at(2, 2) == Scalar::parse(p.field, "3/7"));
  ProblemFile g = load_problem(problem("matrix_triple_gf.json"));
  CHECK(g.field == FieldSpec::prime_field(10007));
  CHECK(g.matrix_b1.has_value());
  ProblemFile f = load_problem(problem("tame_2z1_z2.json"));
  CHECK(f.polys.size() == 2);
  CHECK(f.polys[0].to_string() == "2*z - 2");
  ProblemFile m = load_problem(problem("cauchy_polydisc.json"));
  CHECK(m.multi->nvars() == 2);
  CHECK(m.point->size() == 2);
}

TEST_CASE("schema violations are located") {
  CHECK(parse_error(R"({"backend": "matrix", "operators": [[["1/0"]]]})").find("operators[0][0][0]") == 0);
  CHECK(parse_error(R"({"backend": "matrix", "operators": [[[0.5]]]})").find("operators[0][0][0]") == 0);
  CHECK(parse_error(R"({"backend": "matrix", "operators": [[["1", "2"]]]})").find("not square") != std::string::npos);
  CHECK(parse_error(R"({"backend": "tensor", "operators": []})").find("backend") == 0);
  CHECK(parse_error(R"({"backend": "poly", "operators": [["1"]], "extra": 1})").find("extra") == 0);
  CHECK(parse_error(R"({"field": {"GF": 10}, "backend": "poly", "operators": [["1"]]})").find("field.GF") == 0);
  CHECK(parse_error(R"({"backend": "poly", "operators": [["1", "2"]],
      "factored": [{"lead": "1", "roots": [{"root": "5", "multiplicity": 1}]}]})")
            .find("does not expand") != std::string::npos);
  CHECK(parse_error("{not json").find("invalid JSON") == 0);
  CHECK(parse_error(R"({"backend": "poly", "operators": [["1"]]})").empty());
}

TEST_CASE("non-commuting matrices name the pair") {
  Outcome o = run("torsion", "noncommuting.json");
  CHECK(o.exit_code == kPrecondition);
  CHECK(o.report["result"]["error"] == "non-commuting");
  CHECK(o.report["result"]["pair"] == Json::array({1, 2}));
}

TEST_CASE("malformed rational exits 3") {
  Outcome o = run("index", "bad_rational.json");
  CHECK(o.exit_code == kParse);
  CHECK(o.report["status"] == "error");
  CHECK(!o.report["input_digest"].is_null());
}

TEST_CASE("command golden values") {
  CHECK(run("torsion", "tame_z1_z2.json", 1, 2).report["result"]["tau"] == "-1");
  CHECK(run("torsion", "tame_z1_z2.json", 2, 1).report["result"]["tau"] == "-1");
  CHECK(run("index", "shift_z.json").report["result"]["index"] == -1);
  CHECK(run("torsion", "matrix_pair.json").report["result"]["tau"] == "1");
  CHECK(run("torsion", "matrix_triple_gf.json", 3, 1).report["result"]["tau"] == "1");
  CHECK(run("tame-symbol", "tame_2z1_z2.json").report["result"]["tau"] == "-2");
  CHECK(run("lefschetz", "tame_product.json").report["result"]["tau"] == "1");
  CHECK(run("local", "cauchy_local.json").report["result"]["tau"] == "3");
  Outcome h = run("homology", "shift_z.json");
  CHECK(h.report["result"]["invariant_factors"]["plus"] == Json::array({"z"}));
}

TEST_CASE("precondition failures exit 2") {
  CHECK(run("torsion", "tame_z1_z2.json", 1, 1).exit_code == kPrecondition);
  CHECK(run("torsion", "tame_z1_z2.json", 1, 3).exit_code == kPrecondition);
  CHECK(run("tame-symbol", "matrix_pair.json").exit_code == kPrecondition);
  CHECK(run("index", "cauchy_polydisc.json").exit_code == kPrecondition);
  CommandArgs a;
  a.command = "polydisc";
  a.input = problem("cauchy_polydisc.json");
  a.j = 2;
  a.alpha = "1,-4";
  Outcome o = run_command(a);
  CHECK(o.exit_code == kPrecondition);
  CHECK(std::string(o.report["result"]["message"]).find("f(alpha) = 0") != std::string::npos);
  a.alpha = "0,0";
  CHECK(run_command(a).report["result"]["tau"] == "3");
  a.alpha = "0,x";
  CHECK(run_command(a).exit_code == kParse);
}

TEST_CASE("bitriangle command") {
  for (const char* c : {"trivial", "Xm", "X1"}) {
    CommandArgs a;
    a.command = "bitriangle";
    a.input = problem("matrix_triple_gf.json");
    a.construction = c;
    a.m = 3;
    Outcome o = run_command(a);
    INFO(render_text(o.report));
    CHECK(o.exit_code == kOk);
    CHECK(o.report["result"]["valid"] == true);
    CHECK(o.report["result"]["comparison"]["comparison"] == "1");
  }
  CommandArgs a;
  a.command = "bitriangle";
  a.input = problem("tame_z1_z2.json");
  a.construction = "X1";
  CHECK(run_command(a).exit_code == kPrecondition);  // no b1
}

TEST_CASE("reports are deterministic") {
  CHECK(run("torsion", "matrix_pair.json").report.dump() == run("torsion", "matrix_pair.json").report.dump());
  CommandArgs a;
  a.command = "verify";
  a.suite = "cocycle";
  a.trials = 6;
  a.seed = 7;
  a.config.jobs = 1;
  std::string serial = run_command(a).report.dump();
  a.config.jobs = 3;
  CHECK(run_command(a).report.dump() == serial);
}

TEST_CASE("verify reports and replays") {
  for (const auto& s : suite_catalog()) {
    CommandArgs a;
    a.command = "verify";
    a.suite = s.name;
    a.trials = 4;
    a.seed = 3;
    a.config.max_dim = 3;
    Outcome o = run_command(a);
    INFO(render_text(o.report));
    CHECK(o.exit_code == kOk);
    CHECK(o.report["result"]["theorem"] == s.theorem);
    CHECK(o.report["result"]["checks"].get<std::size_t>() > 0);
  }
  TrialResult t = run_trial("triviality", 5, 11);
  CHECK(t.seed == trial_seed(11, 5));
  CommandArgs a;
  a.command = "verify";
  a.suite = "triviality";
  a.seed = 11;
  a.replay_trial = 5;
  Outcome o = run_command(a);
  CHECK(o.report["result"]["replay"]["seed"] == t.seed);
  CHECK(o.report["result"]["replay"]["checks"] == t.checks);
  a.suite = "no-such-suite";
  CHECK(run_command(a).exit_code == kParse);
}

TEST_CASE("text rendering") {
  Json j{{"a", 1}, {"b", {{"c", "x"}, {"d", Json::array({1, 2})}}}, {"e", Json::array()}};
  CHECK(render_text(j) == "a: 1\nb.c: x\nb.d: 1 2\ne: []\n");
}

TEST_CASE("fnv1a digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
