#include "doctest.h"

#include "stex/alpha_expr.hpp"
#include "stex/errors.hpp"

using namespace stex;

TEST_CASE("exact rational forms") {
  const AlphaParse a = parse_alpha("3/2");
  CHECK(a.alpha.exact_rational);
  CHECK(a.alpha.num == 3);
  CHECK(a.alpha.den == 2);
  CHECK(a.canonical == "3/2");
  CHECK(!a.decimal_literal);

  const AlphaParse b = parse_alpha(" 6 / 4 ");  // reduced, whitespace ignored
  CHECK(b.alpha.num == 3);
  CHECK(b.alpha.den == 2);

  const AlphaParse c = parse_alpha("+3/5");
  CHECK(c.alpha.num == 3);
  CHECK(c.alpha.den == 5);
}

TEST_CASE("decimal literals become exact rationals with a flag") {
  const AlphaParse a = parse_alpha("1.5");
  CHECK(a.alpha.exact_rational);
  CHECK(a.alpha.num == 3);
  CHECK(a.alpha.den == 2);
  CHECK(a.decimal_literal);
  CHECK(a.canonical == "3/2");

  const AlphaParse b = parse_alpha("0.6");
  CHECK(b.alpha.num == 3);
  CHECK(b.alpha.den == 5);
  CHECK(b.decimal_literal);

  // the denominator 10^25 does not fit a machine integer
  CHECK_THROWS_AS((void)parse_alpha("0.1414213562373095048801689"), DomainError);
}

TEST_CASE("surd forms evaluate exactly and normalize") {
  // evaluation and the reference may round in different orders, so allow
  // a last-digit slack at 34-digit working precision
  const BigFloat ulp("1e-32");

  const AlphaParse a = parse_alpha("3/2+sqrt(2)/50");
  CHECK(!a.alpha.exact_rational);
  CHECK(a.canonical == "3/2+sqrt(2)/50");
  const BigFloat want = BigFloat(3) / 2 + sqrt(BigFloat(2)) / 50;
  CHECK(abs(a.alpha.value - want) < ulp);

  const AlphaParse b = parse_alpha("3/2-sqrt(2)/100");
  CHECK(b.canonical == "3/2-sqrt(2)/100");
  CHECK(abs(b.alpha.value - (BigFloat(3) / 2 - sqrt(BigFloat(2)) / 100)) < ulp);

  const AlphaParse c = parse_alpha("sqrt(2)");
  CHECK(c.canonical == "sqrt(2)");
  CHECK(c.alpha.value == sqrt(BigFloat(2)));  // single rounding: exact match

  const AlphaParse d = parse_alpha("3*sqrt(2)/4");
  CHECK(d.canonical == "3*sqrt(2)/4");
  CHECK(abs(d.alpha.value - 3 * sqrt(BigFloat(2)) / 4) < ulp);

  // radicand normalization: sqrt(18) = 3 sqrt(2)
  const AlphaParse e = parse_alpha("1/2+sqrt(18)/10");
  CHECK(e.canonical == "1/2+3*sqrt(2)/10");
  CHECK(abs(e.alpha.value - (BigFloat(1) / 2 + 3 * sqrt(BigFloat(2)) / 10)) <
        ulp);
}

TEST_CASE("perfect squares fold back to exact rationals") {
  const AlphaParse a = parse_alpha("1+sqrt(4)/4");
  CHECK(a.alpha.exact_rational);
  CHECK(a.alpha.num == 3);
  CHECK(a.alpha.den == 2);
  CHECK(a.canonical == "3/2");

  const AlphaParse b = parse_alpha("sqrt(9)/2");
  CHECK(b.alpha.exact_rational);
  CHECK(b.alpha.num == 3);
  CHECK(b.alpha.den == 2);
}

TEST_CASE("range and syntax errors") {
  CHECK_THROWS_AS((void)parse_alpha(""), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("abc"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("3/0"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("1"), DomainError);     // alpha = 1 excluded
  CHECK_THROWS_AS((void)parse_alpha("5/2"), DomainError);   // above 2
  CHECK_THROWS_AS((void)parse_alpha("-1/2"), DomainError);  // negative
  CHECK_THROWS_AS((void)parse_alpha("3/2+sqrt(2)"), DomainError);  // 2.91...
  CHECK_THROWS_AS((void)parse_alpha("3/2+2"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("3/2+sqrt(2)/50x"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("sqrt(2"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("sqrt(-2)"), DomainError);
  CHECK_THROWS_AS((void)parse_alpha("3/2 1/2"), DomainError);
}

TEST_CASE("parse_real shares the grammar") {
  CHECK(parse_real("3/5") == BigFloat(3) / 5);
  CHECK(parse_real("0.6") == BigFloat(3) / 5);
  CHECK(parse_real("1/3") == BigFloat(1) / 3);
  CHECK(parse_real("-1/3") == -(BigFloat(1) / 3));
  CHECK(parse_real("1/2+sqrt(2)/4") == BigFloat(1) / 2 + sqrt(BigFloat(2)) / 4);
  CHECK(parse_real("42") == 42);
  CHECK_THROWS_AS((void)parse_real("one"), DomainError);
}
