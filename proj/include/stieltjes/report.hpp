#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "stieltjes/solution.hpp"

namespace stieltjes {

using json = nlohmann::ordered_json;  // insertion order kept: byte-stable output

// ---- serialization helpers ------------------------------------------------

inline json rational_json(const Rational& r) { return r.str(); }

inline json sequence_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

// ascending powers; the zero polynomial is the empty list
inline json poly_json(const Polynomial& p) { return sequence_json(p.coeffs()); }

inline json poly_list_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(poly_json(p));
  return a;
}

inline json matrix_json(const PolyMatrix2& w) {
  return {{"w11", poly_json(w.w11)},
          {"w12", poly_json(w.w12)},
          {"w21", poly_json(w.w21)},
          {"w22", poly_json(w.w22)}};
}

inline json inertia_json(const Inertia& i) {
  return {{"nu_minus", i.nu_minus}, {"nu_zero", i.nu_zero}, {"nu_plus", i.nu_plus}};
}

inline json tau_json(const Parameter& tau) {
  if (is_infinity(tau)) return "infinity";
  const auto& f = std::get<RationalFunction>(tau);
  return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

inline json error_json(const error& e) {
  json inner = {{"kind", errc_name(e.code())}, {"message", e.what()}};
  if (e.index()) inner["index"] = *e.index();
  return {{"error", inner}};
}

// ---- problem input --------------------------------------------------------

struct ProblemInput {
  std::vector<std::string> moment_texts;
  std::optional<Parity> parity;
  std::optional<int> kappa_budget;
  std::optional<int> k_budget;
  std::optional<Rational> free_tail;
  std::optional<Parameter> tau;

  MomentSequence moments() const { return MomentSequence::parse(moment_texts); }
};

namespace detail {

inline Polynomial poly_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) fail(errc::malformed_input, field + " must be a list of rational strings");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) fail(errc::malformed_input, field + " entries must be rational strings");
    c.push_back(Rational::parse(e.get<std::string>()));
  }
  return Polynomial(std::move(c));
}

}  // namespace detail

inline ProblemInput parse_problem_input(const json& j) {
  if (!j.is_object()) fail(errc::malformed_input, "problem input must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "moments" && key != "parity" && key != "kappa" && key != "k" &&
        key != "free_tail" && key != "tau")
      fail(errc::malformed_input, "unknown field \"" + key + "\" in problem input");
  }
  ProblemInput in;
  if (!j.contains("moments") || !j["moments"].is_array() || j["moments"].empty())
    fail(errc::malformed_input, "moments must be a nonempty list of rational strings");
  for (const auto& e : j["moments"]) {
    if (!e.is_string()) fail(errc::malformed_input, "moments entries must be rational strings");
    in.moment_texts.push_back(e.get<std::string>());
  }
  (void)in.moments();  // parse now so bad strings surface as a field error

  if (j.contains("parity")) {
    std::string p = j["parity"].is_string() ? j["parity"].get<std::string>() : std::string();
    if (p == "odd")
      in.parity = Parity::odd;
    else if (p == "even")
      in.parity = Parity::even;
    else
      fail(errc::malformed_input, "parity must be \"odd\" or \"even\"");
  }
  for (const std::string key : {"kappa", "k"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number_integer() || j[key].get<long long>() < 0)
      fail(errc::malformed_input, key + " must be a nonnegative integer");
    if (key == "kappa")
      in.kappa_budget = j[key].get<int>();
    else
      in.k_budget = j[key].get<int>();
  }
  if (j.contains("free_tail")) {
    if (!j["free_tail"].is_string())
      fail(errc::malformed_input, "free_tail must be a rational string");
    in.free_tail = Rational::parse(j["free_tail"].get<std::string>());
  }
  if (j.contains("tau")) {
    const json& t = j["tau"];
    if (t.is_string() && t.get<std::string>() == "infinity") {
      in.tau = Parameter(Infinity{});
    } else if (t.is_object() && t.contains("num") && t.contains("den")) {
      in.tau = Parameter(RationalFunction(detail::poly_from_json(t["num"], "tau.num"),
                                          detail::poly_from_json(t["den"], "tau.den")));
    } else {
      fail(errc::malformed_input, "tau must be {num: [...], den: [...]} or \"infinity\"");
    }
  }
  return in;
}

inline json echo_input(const ProblemInput& in) {
  json j;
  j["moments"] = in.moment_texts;
  if (in.parity) j["parity"] = parity_name(*in.parity);
  if (in.kappa_budget) j["kappa"] = *in.kappa_budget;
  if (in.k_budget) j["k"] = *in.k_budget;
  if (in.free_tail) j["free_tail"] = in.free_tail->str();
  if (in.tau) j["tau"] = tau_json(*in.tau);
  return j;
}

// ---- shared report sections -----------------------------------------------

namespace detail {

inline json normal_indices_json(const NormalIndexReport& rep, int ell) {
  return {{"indices", rep.indices},
          {"nu_type", rep.nu_subset},
          {"mu_type", rep.mu_subset},
          {"regular", rep.regular},
          {"degenerate_tail", ell > 2 * rep.indices.back() - 1}};
}

inline json steps_json(const SchurExpansion& e) {
  json steps = json::array();
  for (const auto& st : e.steps) {
    json s = {{"nu", st.nu},     {"n", st.n},
              {"b", st.b.str()}, {"a", poly_json(st.a)},
              {"m", poly_json(st.m)}};
    s["l"] = st.l ? json(st.l->str()) : json(nullptr);
    s["kappa_zm"] = st.kappa_zm;
    s["kappa_m"] = st.kappa_m;
    s["kappa_zl"] = st.kappa_zl;
    s["kappa_l"] = st.kappa_l;
    steps.push_back(std::move(s));
  }
  return steps;
}

inline json verification_json(const Parameter& tau, const MomentSequence& expected,
                              const RationalFunction& f) {
  LaurentTail tail = laurent_expand_at_infinity(f, -(expected.ell() + 2));
  check_internal(tail_matches_moments(tail, expected.values()),
                 "solution does not expand to the prescribed moments");
  std::vector<Rational> reproduced = moments_from_tail(tail, expected.ell());
  return {{"tau", tau_json(tau)},
          {"expected_moments", sequence_json(expected.values())},
          {"reproduced_moments", sequence_json(reproduced)},
          {"match", reproduced == expected.values()}};
}

// expand/solve/string run the strict pipeline: a supplied parity must agree
// with the one the data imply
inline void require_parity_consistent(const ProblemInput& in, int ell) {
  if (in.parity && *in.parity != parity_of_length(ell))
    fail(errc::malformed_input,
         std::string("parity: ") + parity_name(*in.parity) +
             " disagrees with the moment count (an " + parity_name(parity_of_length(ell)) +
             " problem has " + (parity_of_length(ell) == Parity::odd ? "an odd" : "an even") +
             " number of moments)");
}

// tau = 0 solves every even problem, tau = infinity every odd one
inline Parameter canonical_tau(Parity parity) {
  if (parity == Parity::odd) return Parameter(Infinity{});
  return Parameter(RationalFunction());
}

}  // namespace detail

// ---- commands ---------------------------------------------------------------

// Index/inertia analysis only: reports what the Hankel data say about the
// problem without running the expansion, so it also serves non-regular and
// oddly truncated inputs.
inline json cmd_analyze(const ProblemInput& in) {
  MomentSequence s = in.moments();
  NormalIndexReport rep = normal_indices(s);
  int n_top = rep.indices.back();
  Parity parity = in.parity ? *in.parity
                            : (s.ell() == 2 * n_top - 1 ? Parity::even : Parity::odd);
  SolvabilityIndices si = solvability_indices(s, parity);

  json j;
  j["command"] = "analyze";
  j["input"] = echo_input(in);
  j["parity"] = parity_name(parity);
  j["normal_indices"] = detail::normal_indices_json(rep, s.ell());
  json hankel_table = json::array();
  for (int n = 1; 2 * n - 2 <= s.ell(); ++n) {
    json row = inertia_json(inertia(hankel(s, n, 0)));
    row["order"] = n;
    hankel_table.push_back(std::move(row));
  }
  json shifted_table = json::array();
  for (int n = 1; 2 * n - 1 <= s.ell(); ++n) {
    json row = inertia_json(inertia(hankel(s, n, +1)));
    row["order"] = n;
    shifted_table.push_back(std::move(row));
  }
  j["inertia"] = {{"hankel", hankel_table}, {"shifted_hankel", shifted_table}};
  j["kappa"] = si.kappa;
  j["k"] = si.k;
  if (in.kappa_budget && in.k_budget)
    j["solvable"] = si.kappa <= *in.kappa_budget && si.k <= *in.k_budget;
  return j;
}

// Full expansion: steps, continued fraction data, polynomials, the solution
// matrix, and a verified canonical solution.
inline json cmd_expand(const ProblemInput& in) {
  MomentSequence s = in.moments();
  detail::require_parity_consistent(in, s.ell());
  SchurExpansion e = schur_expand(s, in.free_tail);
  OrthogonalSystem os = orthogonal_system(e);
  StieltjesSystem sys = stieltjes_system(e, os);
  verify_zero_value_identities(e, os);
  PolyMatrix2 w = verify_factorization(e, sys);

  Parameter tau = in.tau ? *in.tau : detail::canonical_tau(e.parity);
  require_admissible(e.parity, tau);
  RationalFunction f = lft_apply(w, tau);

  json j;
  j["command"] = "expand";
  j["input"] = echo_input(in);
  j["parity"] = parity_name(e.parity);
  if (e.free_tail_used) j["free_tail_used"] = e.free_tail_used->str();
  j["normal_indices"] = detail::normal_indices_json(e.report, s.ell());
  j["steps"] = detail::steps_json(e);
  json inter = json::array();
  for (const auto& v : e.intermediates) inter.push_back(sequence_json(v));
  j["intermediate_sequences"] = inter;
  j["kappa"] = e.kappa;
  j["k"] = e.k;
  if (in.kappa_budget && in.k_budget) {
    SolvabilityCheck sc = check_solvable(e, *in.kappa_budget, *in.k_budget);
    j["solvable"] = sc.solvable;
  }
  j["pfraction"] = {{"a", poly_list_json(os.a)},
                    {"b", sequence_json(os.b)},
                    {"last_a_derived", os.last_a_derived}};
  j["orthogonal"] = {{"indices", os.n}, {"P", poly_list_json(os.p)}, {"Q", poly_list_json(os.q)}};
  // Stieltjes lists start at index -1: P+_{-1} = 0, Q+_{-1} = 1
  std::vector<Polynomial> pplus = {Polynomial::zero()}, qplus = {Polynomial::one()};
  pplus.insert(pplus.end(), sys.pp.begin(), sys.pp.end());
  qplus.insert(qplus.end(), sys.qq.begin(), sys.qq.end());
  j["stieltjes"] = {{"Pplus", poly_list_json(pplus)},
                    {"Qplus", poly_list_json(qplus)},
                    {"first_index", -1}};
  j["matrix"] = matrix_json(w);
  j["verification"] = detail::verification_json(tau, s, f);
  return j;
}

// Solve for one supplied parameter: the solution function plus its tail check.
inline json cmd_solve(const ProblemInput& in) {
  if (!in.tau) fail(errc::malformed_input, "tau: required for solve");
  MomentSequence s = in.moments();
  detail::require_parity_consistent(in, s.ell());
  SchurExpansion e = schur_expand(s, in.free_tail);
  SolutionDescription desc = describe_solution(e, *in.tau);

  json j;
  j["command"] = "solve";
  j["input"] = echo_input(in);
  j["parity"] = parity_name(e.parity);
  if (e.free_tail_used) j["free_tail_used"] = e.free_tail_used->str();
  j["kappa"] = e.kappa;
  j["k"] = e.k;
  j["matrix"] = matrix_json(desc.w);
  j["solution"] = {{"num", poly_json(desc.f.num())},
                   {"den", poly_json(desc.f.den())},
                   {"pretty", desc.f.pretty()}};
  j["verification"] = detail::verification_json(*in.tau, s, desc.f);
  return j;
}

// String reading of the factor chain.
inline json cmd_string(const ProblemInput& in) {
  MomentSequence s = in.moments();
  detail::require_parity_consistent(in, s.ell());
  SchurExpansion e = schur_expand(s, in.free_tail);
  StringData sd = string_data(e);

  json j;
  j["command"] = "string";
  j["input"] = echo_input(in);
  j["parity"] = parity_name(e.parity);
  j["classification"] = string_class_name(sd.cls);
  j["masses"] = poly_list_json(sd.masses);
  j["lengths"] = poly_list_json(sd.lengths);
  j["kappa"] = e.kappa;
  j["k"] = e.k;
  return j;
}

}  // namespace stieltjes
