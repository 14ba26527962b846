#include <catch2/catch_amalgamated.hpp>

#include "stieltjes/stieltjes.hpp"

using namespace stieltjes;

namespace {

MomentSequence seq(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return MomentSequence(std::move(r));
}

Polynomial poly(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long x : asc) c.emplace_back(x);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing round-trips and stays canonical") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse("0/5") == Rational(0));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), error);
  CHECK_THROWS_AS(Rational::parse("a"), error);
  CHECK_THROWS_AS(Rational::parse("1.5"), error);
  CHECK_THROWS_AS(Rational::parse(""), error);

  Rational a(2, 3), b(-1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK(a.reciprocal().str() == "3/2");
  CHECK(b.sign() == -1);
  CHECK(Rational(-2, 4).pow(3).str() == "-1/8");
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(Rational(0).reciprocal(), error);
}

TEST_CASE("polynomial arithmetic, division, and evaluation") {
  Polynomial p = poly({-1, 0, 1});  // z^2 - 1
  Polynomial d = poly({-1, 1});     // z - 1
  CHECK(p.degree() == std::optional<int>(2));
  CHECK(Polynomial::zero().degree() == std::nullopt);
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK(p.leading_coeff() == Rational(1));

  auto dm = p.divmod(d);
  CHECK(dm.quotient == poly({1, 1}));
  CHECK(dm.remainder.is_zero());

  auto dm2 = poly({1, 0, 1}).divmod(d);
  CHECK(dm2.remainder == poly({2}));

  CHECK(p * d == poly({1, -1, -1, 1}));
  CHECK(p.shifted_up(2) == poly({0, 0, -1, 0, 1}));
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(poly_gcd(p, d) == d);

  // trailing zero coefficients are trimmed away
  CHECK(Polynomial(std::vector<Rational>{Rational(1), Rational(0)}) == poly({1}));
  CHECK(poly({0, 0, 3}).pretty("z") == "3*z^2");
}

TEST_CASE("negative index of a polynomial") {
  CHECK(poly_negative_index(Polynomial::zero()) == 0);
  CHECK(poly_negative_index(poly({5})) == 0);
  CHECK(poly_negative_index(poly({-5})) == 0);
  CHECK(poly_negative_index(poly({0, 1})) == 0);    // z
  CHECK(poly_negative_index(poly({0, -1})) == 1);   // -z
  CHECK(poly_negative_index(poly({0, 0, 1})) == 1);
  CHECK(poly_negative_index(poly({0, 0, -1})) == 1);
  CHECK(poly_negative_index(poly({0, 0, 0, 1})) == 1);
  CHECK(poly_negative_index(poly({0, 0, 0, -1})) == 2);
  // only the leading coefficient and the degree matter
  CHECK(poly_negative_index(poly({9, -9, 4, -7, 0, -2})) == 3);
}

TEST_CASE("rational functions normalize to a monic denominator") {
  RationalFunction f(poly({1}), poly({1, -1}));   // 1/(1-z)
  RationalFunction g(poly({-1}), poly({-1, 1}));  // -1/(z-1)
  CHECK(f == g);
  CHECK(f.den().leading_coeff() == Rational(1));
  CHECK((f + g).num() == poly({-2}));
  CHECK((f * f.reciprocal()) == RationalFunction(Polynomial::one(), Polynomial::one()));
  CHECK(RationalFunction().is_zero());
  CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial::zero()), error);
}

TEST_CASE("laurent expansion at infinity reads off moments") {
  RationalFunction f(poly({1}), poly({1, -1}));  // 1/(1-z) = -1/z - 1/z^2 - ...
  LaurentTail t = laurent_expand_at_infinity(f, -4);
  CHECK(t.coeff(-1) == Rational(-1));
  CHECK(t.coeff(-2) == Rational(-1));
  CHECK(t.coeff(-3) == Rational(-1));
  CHECK(t.coeff(0) == Rational(0));
  std::vector<Rational> m{Rational(1), Rational(1), Rational(1)};
  CHECK(tail_matches_moments(t, m));
  CHECK(moments_from_tail(t, 2) == m);

  // -(z-1)/(z(z-2)) generates 1, 1, 2, 4, ...
  RationalFunction g(poly({1, -1}), poly({0, -2, 1}));
  LaurentTail tg = laurent_expand_at_infinity(g, -5);
  CHECK(moments_from_tail(tg, 3) ==
        std::vector<Rational>({Rational(1), Rational(1), Rational(2), Rational(4)}));

  // a polynomial part at infinity never matches a moment tail
  RationalFunction h(poly({0, 0, 1}), poly({0, 1}));
  CHECK_FALSE(tail_matches_moments(laurent_expand_at_infinity(h, -3), m));
}

TEST_CASE("hankel blocks and exact determinants") {
  MomentSequence s = seq({1, 1, 2, 6});
  CHECK(hankel_det(s, 0, 0) == Rational(1));
  CHECK(hankel_det(s, 1, 0) == Rational(1));
  CHECK(hankel_det(s, 2, 0) == Rational(1));
  CHECK(hankel_det(s, 1, +1) == Rational(1));
  CHECK(hankel_det(s, 2, +1) == Rational(2));
  CHECK_THROWS_AS(hankel_det(s, 3, 0), error);  // needs s_4

  SymmetricMatrix sp = hankel(s, 2, +1);
  CHECK(sp.at(0, 0) == Rational(1));
  CHECK(sp.at(1, 1) == Rational(6));

  // shifted down by one: needs an s_{-1} value
  SymmetricMatrix sm = hankel(s, 2, -1, Rational(7));
  CHECK(sm.at(0, 0) == Rational(7));
  CHECK(sm.at(1, 1) == Rational(1));

  Matrix m(3, 3);
  long v[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(v[i][j]);
  CHECK(determinant(m) == Rational(6));
}

TEST_CASE("congruence inertia agrees with the Sturm oracle on hand cases") {
  auto check_both = [](const SymmetricMatrix& m, Inertia want) {
    CHECK(inertia(m) == want);
    CHECK(sturm_inertia(m) == want);
  };

  SymmetricMatrix d2(2);
  d2.at(0, 0) = Rational(1);
  d2.at(1, 1) = Rational(-1);
  check_both(d2, Inertia{1, 0, 1});

  SymmetricMatrix off(2);
  off.at(0, 1) = off.at(1, 0) = Rational(1);
  check_both(off, Inertia{1, 0, 1});

  SymmetricMatrix zero(2);
  check_both(zero, Inertia{0, 2, 0});

  SymmetricMatrix pos(2);
  pos.at(0, 0) = Rational(1);
  pos.at(0, 1) = pos.at(1, 0) = Rational(1, 2);
  pos.at(1, 1) = Rational(1, 3);
  check_both(pos, Inertia{0, 0, 2});

  SymmetricMatrix rank1(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rank1.at(i, j) = Rational(-2);
  check_both(rank1, Inertia{1, 2, 0});
}

TEST_CASE("normal indices and their two types") {
  auto r = normal_indices(seq({1, 1, 2, 6}));
  CHECK(r.indices == std::vector<int>({1, 2}));
  CHECK(r.nu_subset == std::vector<int>({1, 2}));
  CHECK(r.mu_subset == std::vector<int>({1, 2}));
  CHECK(r.regular);

  auto nr = normal_indices(seq({1, 0, 1}));
  CHECK(nr.indices == std::vector<int>({1, 2}));
  CHECK(nr.nu_subset == std::vector<int>({1}));
  CHECK(nr.mu_subset == std::vector<int>({2}));
  CHECK_FALSE(nr.regular);

  CHECK(first_normal_index(seq({0, 0, 1, 0, 0})) == 3);
  CHECK(normal_indices(seq({0, 0, 1, 0, 0})).indices == std::vector<int>({3}));
  // first nonzero moment too late: det S_3 is not evaluable from three moments
  CHECK_THROWS_AS(first_normal_index(seq({0, 0, 5})), error);
  CHECK_THROWS_AS(first_normal_index(seq({0, 0, 0})), error);
  CHECK_THROWS_AS(normal_indices(seq({0, 0})), error);

  // boundary order: mu-type decidable at n even though 2n-1 exceeds ell
  auto rb = normal_indices(seq({0, 1, 0}));
  CHECK(rb.indices == std::vector<int>({2}));
  CHECK(rb.mu_subset.empty());
}

TEST_CASE("solvability indices from pure inertia counts") {
  auto si = solvability_indices(seq({1, 1}), Parity::even);
  CHECK(si.kappa == 0);
  CHECK(si.k == 0);

  auto sn = solvability_indices(seq({-1, 1}), Parity::even);
  CHECK(sn.kappa == 1);
  CHECK(sn.k == 0);

  auto so = solvability_indices(seq({0, 1, 0, 0}), Parity::odd);
  CHECK(so.kappa == 1);
  CHECK(so.k == 0);
}

TEST_CASE("moment sequence parsing and slicing") {
  MomentSequence s = MomentSequence::parse({"1", "-2/3", "0"});
  CHECK(s.ell() == 2);
  CHECK(s.count() == 3);
  CHECK(s.at(1) == Rational(-2, 3));
  CHECK_THROWS_AS(s.at(3), error);
  CHECK_THROWS_AS(MomentSequence::parse({}), error);
  CHECK(seq({0, 0}).all_zero());
  CHECK_FALSE(s.all_zero());
}
