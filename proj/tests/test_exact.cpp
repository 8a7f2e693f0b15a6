#include <doctest.h>

#include "trijac/exact.hpp"
#include "trijac/relation_engine.hpp"

using namespace trijac;
using namespace trijac::sym;

TEST_CASE("rational invariants") {
  ExactScalar q(6, 4);
  CHECK(q.numerator() == 3);
  CHECK(q.denominator() == 2);
  CHECK(ExactScalar(-4, -8).to_text() == "1/2");
  CHECK(ExactScalar(0, 5).to_text() == "0");
  CHECK(ExactScalar::from_text("-7/21").to_text() == "-1/3");
  CHECK_THROWS_AS(ExactScalar(1, 0), DenominatorVanishes);
}

TEST_CASE("polynomial products") {
  CHECK(x() * x() == x().pow(2));
  CHECK(((a() + 1) * ParamPoly(0)).is_zero());
  // (a+1)(a+b+2) = a^2 + ab + 3a + b + 2
  ParamPoly expanded = a() * a() + a() * b() + 3 * a() + b() + 2;
  CHECK((a() + 1) * (a() + b() + 2) == expanded);
}

TEST_CASE("derivation") {
  CHECK(x().pow(2) * y() == parse_poly_expr("x^2*y"));
  CHECK((x().pow(2) * y()).derive(Var::x) == 2 * x() * y());
  CHECK((a() + 1).derive(Var::y).is_zero());
  CHECK((x() * (1 - x())).derive(Var::x) == 1 - 2 * x());
}

TEST_CASE("fraction equality is cross-multiplied") {
  ParamFrac f(2 * a() + 2, ParamPoly(2));
  ParamFrac g(a() + 1, ParamPoly(1));
  CHECK(frac_eq(f, g));
  CHECK_FALSE(frac_eq(ParamFrac(ParamPoly(1), n() + 1), ParamFrac(ParamPoly(1), n() + 2)));
  // (a^2 - b^2)/(a - b) = (a + b) without any gcd reduction
  CHECK(frac_eq(ParamFrac(a() * a() - b() * b(), a() - b()), ParamFrac(a() + b())));
}

TEST_CASE("exact evaluation") {
  ParamPoly p = x() * x() + 1;
  CHECK(p.eval({{Var::x, ExactScalar(3, 2)}}) == ExactScalar(13, 4));
  ParamFrac f(a() + 1, a() + 2);
  CHECK(f.eval({{Var::a, ExactScalar(0)}}) == ExactScalar(1, 2));
  ParamFrac vanishing(ParamPoly(1), a());
  CHECK_THROWS_AS(vanishing.eval({{Var::a, ExactScalar(0)}}), DenominatorVanishes);
  CHECK_THROWS_AS(p.eval({}), UnknownIndeterminate);
}

TEST_CASE("recurrence coefficient sample value") {
  // -(n-k+1)(n+k+a+b+c+2) / ((2n+a+b+c+2)(2n+a+b+c+3)) at the origin
  ParamPoly s = a() + b() + c();
  ParamFrac coeff(-((n() - k() + 1) * (n() + k() + s + 2)),
                  (2 * n() + s + 2) * (2 * n() + s + 3));
  std::map<Var, ExactScalar> at;
  for (Var v : {Var::a, Var::b, Var::c, Var::n, Var::k}) at[v] = ExactScalar(0);
  CHECK(coeff.eval(at) == ExactScalar(-1, 3));
}

TEST_CASE("substitution") {
  ParamPoly p = x().pow(2) + a() * x() + b();
  ParamPoly q = p.subst(Var::x, 1 - x() - y());
  std::map<Var, ExactScalar> at = {{Var::x, ExactScalar(1, 3)},
                                   {Var::y, ExactScalar(1, 5)},
                                   {Var::a, ExactScalar(2)},
                                   {Var::b, ExactScalar(-1, 7)}};
  std::map<Var, ExactScalar> moved = at;
  moved[Var::x] = ExactScalar(1) - at[Var::x] - at[Var::y];
  CHECK(q.eval(at) == p.eval(moved));
}

TEST_CASE("text round trip") {
  for (const char* text : {"0", "1", "-3/2", "x", "a + 1",
                           "x^2*y - 3/2*x + 1", "2*a*b*c - n*k + l - tau"}) {
    ParamPoly p = ParamPoly::parse(text);
    CHECK(ParamPoly::parse(p.to_text()) == p);
    CHECK(p.to_text() == ParamPoly::parse(p.to_text()).to_text());
  }
}

TEST_CASE("grouped bivariate form") {
  ParamPoly j11 = (b() + 1) * (1 - x()) - (b() + c() + 2) * y();
  CHECK(j11.to_text_grouped(Var::x, Var::y) == "(b+1) - (b+1)*x - (b+c+2)*y");
  CHECK(ParamPoly(1).to_text_grouped(Var::x, Var::y) == "1");
}

// Property-style checks over seeded random instances.
namespace {
ParamPoly random_poly(SplitMix64& rng, int max_terms = 6, int max_deg = 3) {
  ParamPoly p;
  int terms = 1 + static_cast<int>(rng.next() % max_terms);
  for (int t = 0; t < terms; ++t) {
    ParamPoly mono(ExactScalar(rng.range(-9, 9), rng.range(1, 4)));
    for (Var v : {Var::x, Var::y, Var::a, Var::b, Var::c}) {
      int e = static_cast<int>(rng.next() % (max_deg + 1));
      if (e) mono *= ParamPoly::variable(v).pow(e);
    }
    p += mono;
  }
  return p;
}
}  // namespace

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 220; ++i) {
    ParamPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
  }
}

TEST_CASE("derivation rule on random pairs") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ParamPoly p = random_poly(rng), q = random_poly(rng);
    for (Var v : {Var::x, Var::a}) {
      CHECK((p * q).derive(v) == p.derive(v) * q + p * q.derive(v));
    }
  }
}

TEST_CASE("fraction equality is an equivalence relation") {
  SplitMix64 rng(99);
  for (int i = 0; i < 60; ++i) {
    ParamPoly pn = random_poly(rng), pd = random_poly(rng) + 1;
    ParamPoly scale1 = random_poly(rng) + 1, scale2 = random_poly(rng) + 2;
    ParamFrac f(pn, pd);
    ParamFrac g(pn * scale1, pd * scale1);
    ParamFrac h(pn * scale2, pd * scale2);
    CHECK(frac_eq(f, f));
    CHECK(frac_eq(f, g));
    CHECK(frac_eq(g, f));
    CHECK((frac_eq(f, g) && frac_eq(g, h) ? frac_eq(f, h) : true));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(33);
  for (int i = 0; i < 120; ++i) {
    ParamPoly p = random_poly(rng), q = random_poly(rng);
    std::map<Var, ExactScalar> at;
    for (Var v : {Var::x, Var::y, Var::a, Var::b, Var::c})
      at[v] = ExactScalar(rng.range(-6, 6), rng.range(1, 5));
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(a(), 0) == ParamPoly(1));
  CHECK(pochhammer(a(), 3) == a() * (a() + 1) * (a() + 2));
}
