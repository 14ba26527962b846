#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace stieltjes {

// Failure classes surfaced by the library.  The CLI maps these to process
// exit codes; everything else (success) exits 0.
enum class errc {
  malformed_input,       // unparsable or structurally invalid input
  insufficient_moments,  // an entry s_j beyond the supplied length is required
  no_normal_index,       // no usable normal index (all-zero data or degenerate tail)
  not_regular,           // a step-down hit frak_s(-1) = 0 mid-pipeline
  not_basic_form,        // sequence is not in the basic shape an operation expects
  not_normal_index,      // an index argument is not a normal index of the data
  not_applicable,        // operation undefined for this input (e.g. Frobenius with a zero minor)
  non_invertible,        // Toeplitz reciprocal of a series with zero constant term
  requires_polynomial_l, // frak_s(-1) = 0: the l-factor is not a constant
  degenerate_parameter,  // parameter makes the solution denominator vanish identically
  inadmissible_parameter,// parameter violates the asymptotic admissibility condition
  internal_consistency   // a cross-checked identity failed; indicates a bug
};

inline int exit_code(errc c) {
  switch (c) {
    case errc::malformed_input:
    case errc::not_basic_form:
    case errc::not_normal_index:
    case errc::not_applicable:
    case errc::non_invertible: return 2;
    case errc::not_regular:
    case errc::requires_polynomial_l: return 3;
    case errc::insufficient_moments: return 4;
    case errc::no_normal_index: return 5;
    case errc::degenerate_parameter:
    case errc::inadmissible_parameter: return 6;
    case errc::internal_consistency: return 7;
  }
  return 7;
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_input: return "malformed-input";
    case errc::insufficient_moments: return "insufficient-moments";
    case errc::no_normal_index: return "no-normal-index";
    case errc::not_regular: return "not-regular";
    case errc::not_basic_form: return "not-basic-form";
    case errc::not_normal_index: return "not-normal-index";
    case errc::not_applicable: return "not-applicable";
    case errc::non_invertible: return "non-invertible";
    case errc::requires_polynomial_l: return "requires-polynomial-l";
    case errc::degenerate_parameter: return "degenerate-parameter";
    case errc::inadmissible_parameter: return "inadmissible-parameter";
    case errc::internal_consistency: return "internal-consistency";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  error(errc code, std::string message, int index)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  errc code() const { return code_; }
  // For not-regular: the first normal index n_j whose l_j fails to be a
  // nonzero constant.  For insufficient-moments: the missing moment index.
  std::optional<int> index() const { return index_; }

 private:
  errc code_;
  std::optional<int> index_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}
[[noreturn]] inline void fail(errc code, const std::string& message, int index) {
  throw error(code, message, index);
}

// Guard for identities the implementation re-derives along independent
// routes.  A trip here is a bug, never a property of the input.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(errc::internal_consistency, what);
}

}  // namespace stieltjes
