#include "doctest.h"

#include <vector>

#include "stex/diophantine.hpp"
#include "stex/errors.hpp"

using namespace stex;

namespace {
BigFloat bf(const char* s) { return BigFloat(s); }

bool rel_close(const BigFloat& got, const char* want, const char* tol) {
  const BigFloat w = bf(want);
  return abs(got - w) <= bf(tol) * abs(w);
}

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.convert_to<long>());
  return out;
}
}  // namespace

TEST_CASE("exact rational expansion terminates in the trailing-1 form") {
  const ContinuedFraction cf = cf_expand(BigRat(355, 113), 10);
  CHECK(cf.a0 == 3);
  REQUIRE(cf.quotients.size() == 3);
  CHECK(cf.quotients[0] == 7);
  CHECK(cf.quotients[1] == 15);
  CHECK(cf.quotients[2] == 1);
  CHECK(!cf.precision_exhausted);
  CHECK(cf_determinant_ok(cf));
  CHECK(cf_value(cf) == BigRat(355, 113));

  const ContinuedFraction cut = cf_expand(BigRat(355, 113), 2);
  REQUIRE(cut.convergents.size() == 3);
  CHECK(cut.convergents[2].first == 333);
  CHECK(cut.convergents[2].second == 106);

  const ContinuedFraction half = cf_expand(BigRat(1, 2), 10);
  REQUIRE(half.quotients.size() == 2);
  CHECK(half.quotients[0] == 1);
  CHECK(half.quotients[1] == 1);
  CHECK(cf_value(half) == BigRat(1, 2));

  const ContinuedFraction five = cf_expand(BigRat(5, 1), 3);
  CHECK(five.a0 == 5);
  CHECK(five.quotients.empty());

  CHECK_THROWS_AS(cf_expand(BigRat(1, 2), 0), DomainError);
}

TEST_CASE("real expansion: classical quotients and precision exhaustion") {
  const BigFloat root2 = sqrt(BigFloat(2));
  const ContinuedFraction cf = cf_expand(root2, 12);
  CHECK(cf.a0 == 1);
  REQUIRE(cf.quotients.size() == 12);
  for (const auto& a : cf.quotients) CHECK(a == 2);
  CHECK(!cf.precision_exhausted);
  CHECK(cf_determinant_ok(cf));
  // approximation quality invariant |x - p_n/q_n| < 1/(q_n q_{n+1})
  for (std::size_t n = 0; n + 1 < cf.convergents.size(); ++n) {
    const auto& [p, q] = cf.convergents[n];
    const auto& [p2, q2] = cf.convergents[n + 1];
    const BigFloat gap = abs(root2 - to_bigfloat(BigRat(p, q)));
    CHECK(gap < 1 / (to_bigfloat(q) * to_bigfloat(q2)));
  }

  // at depth far beyond what 34 digits determine, the expansion stops early
  const ContinuedFraction deep = cf_expand(root2, 200);
  CHECK(deep.precision_exhausted);
  CHECK(deep.quotients.size() >= 25);
  CHECK(deep.quotients.size() < 60);
  CHECK(cf_determinant_ok(deep));

  const ContinuedFraction pi3 = cf_expand(pi_value(), 3);
  REQUIRE(pi3.convergents.size() == 4);
  CHECK(pi3.convergents[1] == std::make_pair(BigInt(22), BigInt(7)));
  CHECK(pi3.convergents[2] == std::make_pair(BigInt(333), BigInt(106)));
  CHECK(pi3.convergents[3] == std::make_pair(BigInt(355), BigInt(113)));
}

TEST_CASE("integer shift moves every convergent numerator") {
  const ContinuedFraction cf = cf_expand(sqrt(BigFloat(2)), 8);
  const ContinuedFraction down = cf_shift(cf, BigInt(-1));
  CHECK(down.a0 == 0);
  CHECK(down.quotients == cf.quotients);
  CHECK(cf_determinant_ok(down));
  CHECK(cf_value(down) == cf_value(cf) - 1);
}

TEST_CASE("growth tests: bounded quotients never witness") {
  const ContinuedFraction root2 = cf_expand(sqrt(BigFloat(2)), 20);
  const ContinuedFraction golden =
      cf_expand((1 + sqrt(BigFloat(5))) / 2, 20);

  for (const ContinuedFraction* cf : {&root2, &golden}) {
    const MembershipVerdict lt = test_L_tilde(*cf, BigFloat(2), bf("0.1"));
    CHECK(lt.verdict == Verdict::no_witness_up_to_bound);
    CHECK(lt.witness.empty());
    const MembershipVerdict l = test_L(*cf, BigFloat(2));
    CHECK(l.verdict == Verdict::no_witness_up_to_bound);
  }
  // golden ratio: minimal quotients fail for b arbitrarily close to 1
  CHECK(test_L_tilde(golden, bf("1.0001"), bf("0.01")).verdict ==
        Verdict::no_witness_up_to_bound);

  ContinuedFraction tiny;
  tiny.a0 = 1;
  tiny.convergents.emplace_back(BigInt(1), BigInt(1));
  CHECK_THROWS_AS(test_L_tilde(tiny, BigFloat(2), bf("0.1")), DomainError);
  CHECK_THROWS_AS(test_L(tiny, BigFloat(2)), DomainError);
}

TEST_CASE("constructed expansion: frozen quotients and growth certificate") {
  const ContinuedFraction cf = construct_L_tilde(BigFloat(2), bf("0.1"));
  CHECK(cf.constructed);
  CHECK(cf.a0 == 0);
  REQUIRE(cf.quotients.size() == 3);
  CHECK(cf.quotients[0] == 2);
  CHECK(cf.quotients[1] == 4);                 // ceil(2^1.3364...) + 1
  CHECK(cf.quotients[2] == 2756894);           // ceil(2^21.39461...) + 1
  REQUIRE(cf.convergents.size() == 4);
  CHECK(cf.convergents[2] == std::make_pair(BigInt(4), BigInt(9)));
  CHECK(cf.convergents[3] ==
        std::make_pair(BigInt(11027577), BigInt(24812048)));
  CHECK(cf_determinant_ok(cf));

  // every constructed level satisfies the defining inequality
  const MembershipVerdict v = test_L_tilde(cf, BigFloat(2), bf("0.1"));
  CHECK(v.verdict == Verdict::witnessed_yes);
  CHECK(as_longs(v.witness) == std::vector<long>{1, 2});

  // || alpha q_n || < q_n b^{-q_n ln(q_n)^{1+eps}} at constructed levels
  for (std::size_t n = 1; n + 1 < cf.convergents.size(); ++n) {
    const BigFloat qn = to_bigfloat(cf.convergents[n].second);
    const BigFloat norm_ub =
        1 / to_bigfloat(cf.convergents[n + 1].second);  // ||a q_n|| <= 1/q_{n+1}
    CHECK(norm_ub < qn * exp(-qn * pow(log(qn), bf("1.1")) * log(BigFloat(2))));
  }

  LtConstructConfig boost;
  boost.min_last_quotient = BigInt(1) << 96;
  const ContinuedFraction big = construct_L_tilde(BigFloat(2), bf("0.1"), boost);
  CHECK(big.quotients[2] == BigInt(1) << 96);
  CHECK(big.convergents[3].second == (BigInt(9) << 96) + 2);
  CHECK(test_L_tilde(big, BigFloat(2), bf("0.1")).verdict ==
        Verdict::witnessed_yes);

  LtConstructConfig four;
  four.levels = 4;
  CHECK_THROWS_AS(construct_L_tilde(BigFloat(2), bf("0.1"), four),
                  ResourceError);
  CHECK_THROWS_AS(construct_L_tilde(BigFloat(1), bf("0.1")), DomainError);
  CHECK_THROWS_AS(construct_L_tilde(BigFloat(2), BigFloat(0)), DomainError);
  LtConstructConfig shallow;
  shallow.levels = 1;
  CHECK_THROWS_AS(construct_L_tilde(BigFloat(2), bf("0.1"), shallow),
                  DomainError);
}

TEST_CASE("divergence witness: exact lower bound at the constructed level") {
  LtConstructConfig boost;
  boost.min_last_quotient = BigInt(1) << 96;
  const ContinuedFraction alpha =
      cf_shift(construct_L_tilde(BigFloat(2), bf("0.1"), boost), BigInt(1));
  const BigFloat rho = BigFloat(3) / 5;

  const WitnessResult w = divergence_witness(alpha, rho, BigFloat(1), BigInt(9));
  CHECK(w.exceeds_one);
  CHECK(rel_close(w.lower_bound, "3011912.6979336097431", "1e-12"));

  // monotone in x: the bound scales by x^q exactly
  const WitnessResult w2 = divergence_witness(alpha, rho, BigFloat(2), BigInt(9));
  const WitnessResult wh =
      divergence_witness(alpha, rho, bf("0.5"), BigInt(9));
  CHECK(w2.lower_bound > w.lower_bound);
  CHECK(w.lower_bound > wh.lower_bound);
  CHECK(abs(w2.lower_bound - 512 * w.lower_bound) < bf("1e-24"));
  CHECK(rel_close(wh.lower_bound, "5882.642", "1e-6"));
  CHECK(wh.exceeds_one);  // the x^q attenuation still leaves a large bound

  // the rule-built (unboosted) level is far too shallow to exceed 1
  const ContinuedFraction rule =
      cf_shift(construct_L_tilde(BigFloat(2), bf("0.1")), BigInt(1));
  const WitnessResult wr = divergence_witness(rule, rho, BigFloat(1), BigInt(9));
  CHECK(!wr.exceeds_one);
  CHECK(rel_close(wr.lower_bound, "1.0480504e-16", "1e-6"));

  // guards
  CHECK_THROWS_AS(divergence_witness(alpha, rho, BigFloat(1), BigInt(7)),
                  DomainError);
  CHECK_THROWS_AS(
      divergence_witness(alpha, rho, BigFloat(1), (BigInt(9) << 96) + 2),
      ResourceError);
  CHECK_THROWS_AS(divergence_witness(alpha, BigFloat(0), BigFloat(1), BigInt(9)),
                  DomainError);
  CHECK_THROWS_AS(divergence_witness(alpha, rho, BigFloat(0), BigInt(9)),
                  DomainError);
  const ContinuedFraction unshifted =
      construct_L_tilde(BigFloat(2), bf("0.1"), boost);
  CHECK_THROWS_AS(divergence_witness(unshifted, rho, BigFloat(1), BigInt(9)),
                  DomainError);
  const ContinuedFraction rational = cf_expand(BigRat(3, 2), 5);
  CHECK_THROWS_AS(divergence_witness(rational, rho, BigFloat(1), BigInt(2)),
                  DomainError);
}

TEST_CASE("resonance set for rational and irrational alpha") {
  const StableParams p32 =
      make_params(alpha_from_rational(3, 2), BigFloat(3) / 5);
  const auto c32 = set_C(p32, 100);
  REQUIRE(c32.size() == 2);
  CHECK(c32[0].first == 2);
  CHECK(abs(c32[0].second - BigFloat(1) / 3) < bf("1e-33"));
  CHECK(c32[1].first == 1);
  CHECK(abs(c32[1].second - BigFloat(2) / 3) < bf("1e-33"));

  const StableParams p53 =
      make_params(alpha_from_rational(5, 3), BigFloat(1) / 2);
  const auto c53 = set_C(p53, 100);
  REQUIRE(c53.size() == 4);
  const long expect_l[] = {2, 4, 1, 3};
  for (int j = 0; j < 4; ++j) {
    CHECK(c53[j].first == expect_l[j]);
    CHECK(abs(c53[j].second - BigFloat(j + 1) / 5) < bf("1e-33"));
  }

  const StableParams irr = make_params(
      alpha_from_real(bf("1.5") + sqrt(BigFloat(2)) / 50), BigFloat(3) / 5);
  const auto ci = set_C(irr, 8);
  REQUIRE(ci.size() == 16);
  for (std::size_t i = 1; i < ci.size(); ++i) CHECK(ci[i - 1].second <= ci[i].second);
  for (const auto& [l, v] : ci) CHECK(abs(v - frac(l / irr.alpha.value)) == 0);
}

TEST_CASE("B(alpha) scan evaluates the literal inequality") {
  // small n always witness: the threshold exceeds 1/2 for n <= 4
  const MembershipVerdict gen =
      test_B_alpha(sqrt(BigFloat(2)) / 2 + 1, bf("0.3718232885293837"), 10000);
  CHECK(gen.verdict == Verdict::witnessed_yes);
  CHECK(as_longs(gen.witness) ==
        std::vector<long>{1, 2, 3, 4, 5, 6, 9, 16, 26});

  // resonant rho = {2/alpha}: witnesses keep arriving (C(a) inside B(a))
  const BigFloat alpha_t = BigFloat(3) / 2 + bf("1e-9");
  const MembershipVerdict res = test_B_alpha(alpha_t, frac(2 / alpha_t), 35);
  CHECK(res.verdict == Verdict::witnessed_yes);
  CHECK(as_longs(res.witness) ==
        std::vector<long>{1, 2, 3, 4, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25,
                          27, 29, 31, 33, 35});

  CHECK_THROWS_AS(test_B_alpha(sqrt(BigFloat(2)), bf("0.5"), 1), DomainError);
}

TEST_CASE("Doney class search agrees with the resonance set") {
  const auto hit1 = doney_search(
      make_params(alpha_from_rational(3, 2), BigFloat(1) / 3), 16, 32);
  REQUIRE(hit1.has_value());
  CHECK(hit1->first == 1);
  CHECK(hit1->second == 2);

  const auto hit2 = doney_search(
      make_params(alpha_from_rational(3, 2), BigFloat(2) / 3), 16, 32);
  REQUIRE(hit2.has_value());
  CHECK(hit2->first == 0);
  CHECK(hit2->second == 1);

  const auto miss = doney_search(
      make_params(alpha_from_rational(3, 2), BigFloat(3) / 5), 16, 32);
  CHECK(!miss.has_value());
}

TEST_CASE("bounded inhomogeneous approximation replaces Cassels") {
  const Alpha root2 = alpha_from_real(sqrt(BigFloat(2)));
  const BigFloat half = bf("0.5");

  const InhomApprox a8 = inhom_approx(root2, half, 8);
  CHECK(a8.l == 5);
  CHECK(rel_close(a8.error, "0.035533906", "1e-6"));
  const InhomApprox a16 = inhom_approx(root2, half, 16);
  CHECK(a16.l == 12);
  CHECK(rel_close(a16.error, "0.014718626", "1e-6"));
  const InhomApprox a64 = inhom_approx(root2, half, 64);
  CHECK(a64.l == 29);
  const InhomApprox a256 = inhom_approx(root2, half, 256);
  CHECK(a256.l == 169);

  // weak decrease under doubling, and the empirical 1/q_bound rate
  CHECK(a16.error <= a8.error);
  CHECK(a64.error <= a16.error);
  CHECK(a256.error <= a64.error);
  CHECK(a8.error < BigFloat(1) / 8);
  CHECK(a64.error < BigFloat(1) / 64);
  CHECK(a256.error < BigFloat(1) / 256);

  // exact hit: rho = {3/alpha}
  const InhomApprox hit = inhom_approx(root2, frac(3 / root2.value), 10);
  CHECK(hit.l == 3);
  CHECK(hit.error == 0);

  CHECK_THROWS_AS(inhom_approx(alpha_from_rational(3, 2), half, 10),
                  DomainError);
}
