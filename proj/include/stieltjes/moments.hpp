#pragma once

#include <string>
#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

// A truncated moment problem with ell+1 moments is "odd" when ell is even
// (ell = 2n - 2) and "even" when ell is odd (ell = 2n - 1); the parity names
// follow the oddness of the number of prescribed moments' count convention
// used throughout: even problems end on an l-factor, odd ones on an m-factor.
enum class Parity { odd, even };

inline const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// Finite real moment data s_0, ..., s_ell, exact rationals.
class MomentSequence {
 public:
  MomentSequence() = default;
  explicit MomentSequence(std::vector<Rational> values) : s_(std::move(values)) {
    if (s_.empty()) fail(errc::malformed_input, "empty moment sequence");
  }

  static MomentSequence parse(const std::vector<std::string>& texts) {
    std::vector<Rational> v;
    v.reserve(texts.size());
    for (const auto& t : texts) v.push_back(Rational::parse(t));
    return MomentSequence(std::move(v));
  }

  int ell() const { return static_cast<int>(s_.size()) - 1; }
  int count() const { return static_cast<int>(s_.size()); }

  const Rational& at(int j) const {
    if (j < 0 || j > ell())
      fail(errc::insufficient_moments,
           "moment s_" + std::to_string(j) + " required but only s_0..s_" +
               std::to_string(ell()) + " supplied",
           j);
    return s_[static_cast<std::size_t>(j)];
  }

  const std::vector<Rational>& values() const { return s_; }

  bool all_zero() const {
    for (const auto& x : s_)
      if (!x.is_zero()) return false;
    return true;
  }

  // Longest prefix, as a new sequence with ell' = new_ell.
  MomentSequence prefix(int new_ell) const {
    if (new_ell > ell()) at(new_ell);  // raises insufficient-moments
    return MomentSequence(
        std::vector<Rational>(s_.begin(), s_.begin() + new_ell + 1));
  }

 private:
  std::vector<Rational> s_;
};

}  // namespace stieltjes
