#include "stex/alpha_expr.hpp"

#include <cctype>
#include <limits>

#include "stex/errors.hpp"

namespace stex {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    skip_ws();
    std::size_t j = i;
    for (const char* p = w; *p; ++p, ++j)
      if (j >= s.size() || s[j] != *p) return false;
    i = j;
    return true;
  }
};

[[noreturn]] void fail(const Cursor& c, const std::string& why) {
  throw DomainError("cannot parse \"" + c.s + "\": " + why);
}

BigInt parse_digits(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) fail(c, "expected digits at position " + std::to_string(start));
  return BigInt(c.s.substr(start, c.i - start));
}

// rational or decimal literal; sets *decimal when a '.' form was used
BigRat parse_value(Cursor& c, bool* decimal) {
  int sign = 1;
  if (c.eat('-')) sign = -1;
  else c.eat('+');
  BigInt whole = parse_digits(c);
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    std::size_t start = c.i;
    BigInt frac = parse_digits(c);
    BigInt den = 1;
    for (std::size_t k = start; k < c.i; ++k) den *= 10;
    *decimal = true;
    return BigRat(sign * (whole * den + frac), den);
  }
  if (c.peek() == '/') {
    c.eat('/');
    BigInt den = parse_digits(c);
    if (den == 0) fail(c, "zero denominator");
    return BigRat(sign * whole, den);
  }
  return BigRat(sign * whole);
}

bool starts_surd(Cursor& c) {
  c.skip_ws();
  return c.s.compare(c.i, 4, "sqrt") == 0;
}

// 'sqrt' '(' integer ')' ['/' integer]; divides the divisor into *coef
void parse_sqrt_tail(Cursor& c, BigRat* coef, BigInt* radicand) {
  if (!c.eat_word("sqrt")) fail(c, "expected sqrt(...)");
  if (!c.eat('(')) fail(c, "expected '(' after sqrt");
  *radicand = parse_digits(c);
  if (!c.eat(')')) fail(c, "expected ')' after sqrt argument");
  if (c.peek() == '/') {
    c.eat('/');
    BigInt den = parse_digits(c);
    if (den == 0) fail(c, "zero denominator");
    *coef /= BigRat(den);
  }
}

// [value '*'] 'sqrt' '(' integer ')' ['/' integer]
void parse_surd(Cursor& c, bool* decimal, BigRat* coef, BigInt* radicand) {
  *coef = 1;
  if (!starts_surd(c)) {
    *coef = parse_value(c, decimal);
    if (!c.eat('*')) fail(c, "expected '*' between coefficient and sqrt");
  }
  parse_sqrt_tail(c, coef, radicand);
}

struct Expr {
  BigRat rational;       // exact part
  BigRat surd_coef;      // 0 when the expression is exactly rational
  BigInt radicand = 0;   // square-free part not folded out
  bool decimal = false;
};

Expr parse_expr(const std::string& text) {
  Cursor c{text};
  Expr e;
  e.rational = 0;
  e.surd_coef = 0;
  if (c.done()) throw DomainError("cannot parse \"\": empty input");

  int surd_sign = 1;
  bool have_surd = false;
  BigRat coef;
  BigInt rad;
  if (starts_surd(c)) {
    have_surd = true;
    parse_surd(c, &e.decimal, &coef, &rad);
  } else {
    e.rational = parse_value(c, &e.decimal);
    if (c.peek() == '*') {  // the value was a surd coefficient
      c.eat('*');
      have_surd = true;
      coef = e.rational;
      e.rational = 0;
      parse_sqrt_tail(c, &coef, &rad);
    } else if (!c.done()) {
      if (c.eat('+')) surd_sign = 1;
      else if (c.eat('-')) surd_sign = -1;
      else fail(c, "expected '+' or '-' before the sqrt term");
      have_surd = true;
      parse_surd(c, &e.decimal, &coef, &rad);
    }
  }
  if (have_surd) {
    if (!c.done()) fail(c, "trailing input after the sqrt term");
    // fold the largest square factor out of the radicand
    BigInt root = sqrt(rad);  // floor square root
    if (root * root == rad) {
      e.rational += surd_sign * coef * BigRat(root);
    } else {
      BigInt square_free = rad, outside = 1;
      for (BigInt d = 2; d * d <= square_free && d < 1000000; ++d) {
        while (square_free % (d * d) == 0) {
          square_free /= d * d;
          outside *= d;
        }
      }
      e.surd_coef = surd_sign * coef * BigRat(outside);
      e.radicand = square_free;
    }
  }
  return e;
}

long to_long_checked(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<long>::max() ||
      v < std::numeric_limits<long>::min())
    throw DomainError(std::string(what) + " exceeds machine integer range");
  return v.convert_to<long>();
}

std::string rat_str(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string canonical_of(const Expr& e) {
  if (e.surd_coef == 0) return rat_str(e.rational);
  const BigRat c = abs(e.surd_coef);
  std::string surd;
  if (numerator(c) != 1) surd = numerator(c).str() + "*";
  surd += "sqrt(" + e.radicand.str() + ")";
  if (denominator(c) != 1) surd += "/" + denominator(c).str();
  if (e.rational == 0) return (e.surd_coef < 0 ? "-" : "") + surd;
  return rat_str(e.rational) + (e.surd_coef < 0 ? "-" : "+") + surd;
}

BigFloat eval(const Expr& e) {
  BigFloat v = to_bigfloat(e.rational);
  if (e.surd_coef != 0)
    v += to_bigfloat(e.surd_coef) * sqrt(to_bigfloat(e.radicand));
  return v;
}

}  // namespace

AlphaParse parse_alpha(const std::string& text) {
  const Expr e = parse_expr(text);
  AlphaParse out;
  out.decimal_literal = e.decimal;
  out.canonical = canonical_of(e);
  if (e.surd_coef == 0) {
    const long num = to_long_checked(numerator(e.rational), "alpha numerator");
    const long den =
        to_long_checked(denominator(e.rational), "alpha denominator");
    out.alpha = alpha_from_rational(num, den);
  } else {
    out.alpha = alpha_from_real(eval(e));
  }
  return out;
}

RealParse parse_real_full(const std::string& text) {
  const Expr e = parse_expr(text);
  RealParse out;
  out.is_rational = e.surd_coef == 0;
  if (out.is_rational) out.rational = e.rational;
  out.value = eval(e);
  out.decimal_literal = e.decimal;
  out.canonical = canonical_of(e);
  return out;
}

BigFloat parse_real(const std::string& text) { return eval(parse_expr(text)); }

}  // namespace stex
