// Command line front end: reads one ProblemInput as JSON from stdin (or one
// per line with --batch), writes one report object per input to stdout, and
// keeps stdout byte-deterministic.  Human summaries go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "stieltjes/stieltjes.hpp"

namespace {

using stieltjes::json;

void pretty_lines(const std::string& cmd, const json& out) {
  std::ostream& err = std::cerr;
  if (out.contains("error")) {
    err << "error (" << out["error"]["kind"].get<std::string>()
        << "): " << out["error"]["message"].get<std::string>() << "\n";
    return;
  }
  if (cmd == "analyze") {
    err << "parity " << out["parity"].get<std::string>() << ", normal indices [";
    const json& idx = out["normal_indices"]["indices"];
    for (std::size_t i = 0; i < idx.size(); ++i) err << (i ? " " : "") << idx[i].get<int>();
    err << "], regular " << (out["normal_indices"]["regular"].get<bool>() ? "yes" : "no")
        << ", kappa " << out["kappa"].get<int>() << ", k " << out["k"].get<int>();
    if (out.contains("solvable"))
      err << ", solvable " << (out["solvable"].get<bool>() ? "yes" : "no");
    err << "\n";
    return;
  }
  if (cmd == "expand") {
    for (const auto& st : out["steps"])
      err << "step n=" << st["n"].get<int>() << ": m = " << st["m"]["pretty"].get<std::string>()
          << (st["l"].is_null() ? ""
                                : ", l = " + st["l"]["pretty"].get<std::string>())
          << "\n";
    err << "kappa " << out["kappa"].get<int>() << ", k " << out["k"].get<int>()
        << ", verification match "
        << (out["verification"]["match"].get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  if (cmd == "solve") {
    err << "f = " << out["solution"]["pretty"].get<std::string>() << ", match "
        << (out["verification"]["match"].get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  if (cmd == "string") {
    err << "class " << out["classification"].get<std::string>() << ", kappa "
        << out["kappa"].get<int>() << ", k " << out["k"].get<int>() << "\n";
    return;
  }
  if (cmd == "selftest") {
    for (const auto& s : out["suites"])
      err << s["name"].get<std::string>() << ": " << s["cases"].get<int>() << " cases, "
          << (s["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    err << (out["all_passed"].get<bool>() ? "all suites passed" : "FAILURES above") << "\n";
  }
}

json dispatch(const std::string& cmd, const stieltjes::ProblemInput& in) {
  if (cmd == "analyze") return stieltjes::cmd_analyze(in);
  if (cmd == "expand") return stieltjes::cmd_expand(in);
  if (cmd == "solve") return stieltjes::cmd_solve(in);
  return stieltjes::cmd_string(in);
}

// Runs one input line; prints exactly one JSON object to stdout.
int run_one(const std::string& cmd, const std::string& text, bool pretty,
            const std::string& free_tail, const std::string& parity) {
  json out;
  int code = 0;
  try {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      stieltjes::fail(stieltjes::errc::malformed_input, "input is not a JSON object");
    if (!free_tail.empty()) j["free_tail"] = free_tail;
    if (!parity.empty()) j["parity"] = parity;
    out = dispatch(cmd, stieltjes::parse_problem_input(j));
  } catch (const stieltjes::error& e) {
    out = stieltjes::error_json(e);
    code = stieltjes::exit_code(e.code());
  } catch (const std::exception& e) {
    out = stieltjes::error_json(
        stieltjes::error(stieltjes::errc::internal_consistency, e.what()));
    code = stieltjes::exit_code(stieltjes::errc::internal_consistency);
  }
  std::cout << out.dump() << "\n";
  if (pretty) pretty_lines(cmd, out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for truncated indefinite moment problems"};
  app.require_subcommand(1);
  app.fallthrough();  // parent flags like --pretty may follow the subcommand

  bool pretty = false;
  std::string batch_path, free_tail, parity;
  std::uint64_t seed = 0;
  bool inject_fault = false;

  app.add_flag("--pretty", pretty, "human-readable summary on stderr");

  const char* names[] = {"analyze", "expand", "solve", "string"};
  const char* descs[] = {"normal indices, inertia tables, solvability indices",
                         "full Schur expansion, polynomials, solution matrix",
                         "solution for a given parameter tau",
                         "string classification, masses and lengths"};
  for (int i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--batch", batch_path, "file with one JSON input per line");
    sub->add_option("--free-tail", free_tail, "placeholder tail value (rational)");
    sub->add_option("--parity", parity, "odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
  }
  CLI::App* st = app.add_subcommand("selftest", "deterministic invariant corpus");
  st->add_option("--seed", seed, "RNG seed");
  st->add_flag("--inject-fault", inject_fault, "corrupt one case to prove the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : stieltjes::exit_code(stieltjes::errc::malformed_input);
  }

  std::string cmd = app.get_subcommands().front()->get_name();

  if (cmd == "selftest") {
    bool ok = false;
    json out = stieltjes::selftest::run_selftest(seed, inject_fault, &ok);
    std::cout << out.dump() << "\n";
    if (pretty) pretty_lines(cmd, out);
    return ok ? 0 : stieltjes::exit_code(stieltjes::errc::internal_consistency);
  }

  if (!batch_path.empty()) {
    std::ifstream f(batch_path);
    if (!f) {
      std::cerr << "cannot open " << batch_path << "\n";
      return stieltjes::exit_code(stieltjes::errc::malformed_input);
    }
    int first_fail = 0;
    std::string line;
    while (std::getline(f, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      int c = run_one(cmd, line, pretty, free_tail, parity);
      if (first_fail == 0) first_fail = c;
    }
    return first_fail;
  }

  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return run_one(cmd, buf.str(), pretty, free_tail, parity);
}
