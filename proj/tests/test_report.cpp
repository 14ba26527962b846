#include <catch2/catch_amalgamated.hpp>

#include "stieltjes/stieltjes.hpp"

using namespace stieltjes;

namespace {

json parse_ok(const json& j) { return json::parse(j.dump()); }  // round-trip guard

template <typename Fn>
std::string expect_failure(errc want, Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    CHECK(e.code() == want);
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

}  // namespace

TEST_CASE("problem input parsing rejects malformed fields by name") {
  auto parse = [](const json& j) { return parse_problem_input(j); };

  CHECK(expect_failure(errc::malformed_input, [&] { parse(json::array()); })
            .find("object") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input, [&] { parse({{"parity", "odd"}}); })
            .find("moments") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", json::array()}}); })
            .find("moments") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", {"1"}}, {"parity", "both"}}); })
            .find("parity") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", {"1"}}, {"kappa", -1}}); })
            .find("kappa") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", {"1"}}, {"free_tail", 5}}); })
            .find("free_tail") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", {"1"}}, {"tau", 0}}); })
            .find("tau") != std::string::npos);
  CHECK(expect_failure(errc::malformed_input,
                       [&] { parse({{"moments", {"1"}}, {"extra", 1}}); })
            .find("extra") != std::string::npos);
  CHECK_THROWS_AS(parse({{"moments", {"x"}}}), error);

  ProblemInput in = parse_problem_input(
      {{"moments", {"1", "-2/3"}}, {"parity", "even"}, {"kappa", 0}, {"k", 0},
       {"free_tail", "1/2"}, {"tau", "infinity"}});
  CHECK(in.moment_texts.size() == 2);
  CHECK(in.parity == Parity::even);
  CHECK(in.kappa_budget == 0);
  CHECK(in.k_budget == 0);
  CHECK(in.free_tail == Rational(1, 2));
  REQUIRE(in.tau);
  CHECK(is_infinity(*in.tau));
}

TEST_CASE("analyze reports indices, inertia, and solvability") {
  json out = cmd_analyze(parse_problem_input(
      {{"moments", {"1", "1"}}, {"kappa", 0}, {"k", 0}}));
  CHECK(out["command"] == "analyze");
  CHECK(out["parity"] == "even");
  CHECK(out["normal_indices"]["indices"] == json::array({1}));
  CHECK(out["normal_indices"]["regular"] == true);
  CHECK(out["normal_indices"]["degenerate_tail"] == false);
  CHECK(out["kappa"] == 0);
  CHECK(out["k"] == 0);
  CHECK(out["solvable"] == true);
  CHECK(out["inertia"]["hankel"][0]["nu_plus"] == 1);
  CHECK(out["inertia"]["shifted_hankel"][0]["order"] == 1);
  CHECK(parse_ok(out) == out);
}

TEST_CASE("analyze serves non-regular and prescribed-parity input") {
  // odd-parity reading of four moments: indices from the odd-case tables
  json out = cmd_analyze(parse_problem_input(
      {{"moments", {"0", "1", "0", "0"}}, {"parity", "odd"}}));
  CHECK(out["parity"] == "odd");
  CHECK(out["kappa"] == 1);
  CHECK(out["k"] == 0);
  CHECK(out["normal_indices"]["regular"] == false);
  CHECK_FALSE(out.contains("solvable"));

  json nr = cmd_analyze(parse_problem_input({{"moments", {"1", "0", "1"}}}));
  CHECK(nr["normal_indices"]["regular"] == false);
  CHECK(nr["normal_indices"]["nu_type"] == json::array({1}));
  CHECK(nr["normal_indices"]["mu_type"] == json::array({2}));

  json dg = cmd_analyze(parse_problem_input({{"moments", {"1", "1", "1", "1"}}}));
  CHECK(dg["normal_indices"]["degenerate_tail"] == true);

  expect_failure(errc::no_normal_index,
                 [] { cmd_analyze(parse_problem_input({{"moments", {"0", "0"}}})); });
}

TEST_CASE("expand emits the full dissection of the library example") {
  json out = cmd_expand(parse_problem_input({{"moments", {"1", "1"}}}));
  CHECK(out["parity"] == "even");
  REQUIRE(out["steps"].size() == 1);
  CHECK(out["steps"][0]["m"] == json::array({"1"}));
  CHECK(out["steps"][0]["l"] == "1");
  CHECK(out["steps"][0]["b"] == "1");
  CHECK(out["matrix"]["w11"] == json::array({"1"}));
  CHECK(out["matrix"]["w12"] == json::array({"1"}));
  CHECK(out["matrix"]["w21"] == json::array({"0", "-1"}));
  CHECK(out["matrix"]["w22"] == json::array({"1", "-1"}));
  CHECK(out["verification"]["match"] == true);
  CHECK(out["verification"]["tau"].contains("num"));  // canonical even tau = 0
  CHECK(out["stieltjes"]["first_index"] == -1);
  CHECK(out["stieltjes"]["Pplus"][0] == json::array());  // P+_{-1} = 0

  json deep = cmd_expand(parse_problem_input({{"moments", {"1", "1", "2", "6"}}}));
  CHECK(deep["steps"].size() == 2);
  CHECK(deep["steps"][1]["l"] == "1/2");
  CHECK(deep["verification"]["match"] == true);
  CHECK(deep["pfraction"]["a"][1] == json::array({"-3", "1"}));
  CHECK(deep["orthogonal"]["P"][2] == json::array({"2", "-4", "1"}));
  CHECK(deep["kappa"] == 0);
  CHECK(deep["intermediate_sequences"][0] == json::array({"1", "2"}));
}

TEST_CASE("expand surfaces free tails and honors a supplied tau") {
  json out = cmd_expand(parse_problem_input(
      {{"moments", {"1", "1", "2"}}, {"free_tail", "5"}}));
  CHECK(out["parity"] == "odd");
  CHECK(out["free_tail_used"] == "5");
  CHECK(out["verification"]["tau"] == "infinity");
  CHECK(out["verification"]["match"] == true);

  json taud = cmd_expand(parse_problem_input(
      {{"moments", {"1", "1"}},
       {"tau", {{"num", {"-1"}}, {"den", {"-2", "1"}}}}}));
  CHECK(taud["verification"]["match"] == true);
  CHECK(taud["verification"]["tau"]["num"] == json::array({"-1"}));

  expect_failure(errc::inadmissible_parameter, [] {
    cmd_expand(parse_problem_input({{"moments", {"1", "1"}}, {"tau", "infinity"}}));
  });
  expect_failure(errc::malformed_input, [] {
    cmd_expand(parse_problem_input({{"moments", {"1", "1"}}, {"parity", "odd"}}));
  });
}

TEST_CASE("expand rejects non-regular data with the failing index") {
  try {
    cmd_expand(parse_problem_input({{"moments", {"1", "0", "1"}}}));
    FAIL("expected not-regular");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_regular);
    json j = error_json(e);
    CHECK(j["error"]["kind"] == "not-regular");
    CHECK(j["error"]["index"] == 1);
  }
}

TEST_CASE("solve requires tau and reports the verified function") {
  expect_failure(errc::malformed_input,
                 [] { cmd_solve(parse_problem_input({{"moments", {"1", "1"}}})); });

  json out = cmd_solve(parse_problem_input(
      {{"moments", {"1", "1"}}, {"tau", {{"num", json::array()}, {"den", {"1"}}}}}));
  CHECK(out["command"] == "solve");
  CHECK(out["solution"]["num"] == json::array({"-1"}));
  CHECK(out["solution"]["den"] == json::array({"-1", "1"}));
  CHECK(out["verification"]["match"] == true);
  CHECK(out["verification"]["reproduced_moments"] == json::array({"1", "1"}));

  json odd = cmd_solve(parse_problem_input(
      {{"moments", {"1", "1", "2"}}, {"tau", "infinity"}}));
  CHECK(odd["verification"]["match"] == true);
}

TEST_CASE("string command emits the classification") {
  json out = cmd_string(parse_problem_input({{"moments", {"1", "1", "2", "6"}}}));
  CHECK(out["classification"] == "classical");
  CHECK(out["masses"] == json::array({json::array({"1"}), json::array({"1"})}));
  CHECK(out["lengths"] == json::array({json::array({"1"}), json::array({"1/2"})}));

  json sg = cmd_string(parse_problem_input({{"moments", {"-1", "1"}}}));
  CHECK(sg["classification"] == "signed");

  json mp = cmd_string(parse_problem_input({{"moments", {"0", "1", "0"}}}));
  CHECK(mp["classification"] == "multipole");
}

TEST_CASE("reports are byte-deterministic and echo their input") {
  json in = {{"moments", {"1", "1", "2", "6"}}, {"kappa", 0}, {"k", 0}};
  json a = cmd_expand(parse_problem_input(in));
  json b = cmd_expand(parse_problem_input(in));
  CHECK(a.dump() == b.dump());
  CHECK(a["input"]["moments"] == json::array({"1", "1", "2", "6"}));
  CHECK(a["solvable"] == true);
}

TEST_CASE("error serialization carries kind, message, and exit code") {
  error e(errc::not_regular, "stage sequence lost regularity", 3);
  json j = error_json(e);
  CHECK(j["error"]["kind"] == "not-regular");
  CHECK(j["error"]["index"] == 3);
  CHECK(exit_code(errc::not_regular) == 3);
  CHECK(exit_code(errc::no_normal_index) == 5);
  CHECK(exit_code(errc::insufficient_moments) == 4);
  CHECK(exit_code(errc::inadmissible_parameter) == 6);
  CHECK(exit_code(errc::internal_consistency) == 7);
  CHECK(exit_code(errc::malformed_input) == 2);
  CHECK(std::string(errc_name(errc::requires_polynomial_l)) == "requires-polynomial-l");
}

TEST_CASE("selftest runs green and reports injected faults") {
  bool ok = false;
  json out = selftest::run_selftest(7, false, &ok);
  CHECK(ok);
  CHECK(out["all_passed"] == true);

  json again = selftest::run_selftest(7, false, nullptr);
  CHECK(out.dump() == again.dump());

  bool faulted = true;
  json bad = selftest::run_selftest(7, true, &faulted);
  CHECK_FALSE(faulted);
  CHECK(bad["all_passed"] == false);
  bool found_counter = false;
  for (const auto& s : bad["suites"])
    if (s.contains("counterexample") && s["counterexample"].contains("moments"))
      found_counter = true;
  CHECK(found_counter);
}
