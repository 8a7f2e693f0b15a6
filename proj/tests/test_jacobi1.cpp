#include <doctest.h>

#include "trijac/jacobi1.hpp"

using namespace trijac;
using namespace trijac::sym;

namespace {
ExactScalar fact(int n) {
  ExactScalar f(1);
  for (int i = 2; i <= n; ++i) f *= ExactScalar(i);
  return f;
}
}  // namespace

TEST_CASE("explicit low-degree members") {
  CHECK(uni_jacobi(-1).is_zero());
  CHECK(uni_jacobi(0) == ParamPoly(1));
  CHECK(uni_jacobi(1) == (a() + 1) - (a() + b() + 2) * x());
  // shifted Legendre at zero parameters
  ParamPoly j2 = uni_jacobi(2).subst(Var::a, ParamPoly(0)).subst(Var::b, ParamPoly(0));
  CHECK(j2 == 1 - 6 * x() + 6 * x().pow(2));
  CHECK_THROWS_AS(uni_jacobi(-2), Error);
}

TEST_CASE("degree and value at the origin") {
  for (int n = 0; n <= 12; ++n) {
    ParamPoly p = uni_jacobi(n);
    CHECK(p.degree_in(Var::x) == n);
    ParamPoly val0 = p.subst(Var::x, ParamPoly(0));
    CHECK(val0 == pochhammer(a() + 1, n).scaled(ExactScalar(1) / fact(n)));
  }
}

TEST_CASE("normalized moments") {
  CHECK(frac_eq(uni_moment(0), ParamFrac(1)));
  CHECK(frac_eq(uni_moment(1), ParamFrac(a() + 1, a() + b() + 2)));
  CHECK(frac_eq(uni_inner(ParamPoly(1), ParamPoly(1)), ParamFrac(1)));
}

TEST_CASE("orthogonality and the closed-form diagonal") {
  for (int nn = 0; nn <= 8; ++nn)
    for (int m = 0; m <= nn; ++m) {
      ParamFrac v = uni_inner(uni_jacobi(nn), uni_jacobi(m));
      if (nn == m)
        CHECK(frac_eq(v, uni_norm_diag(nn)));
      else
        CHECK(v.is_zero());
    }
  // cross-check one diagonal value numerically: a=b=0, n=1 gives 1/3
  CHECK(uni_norm_diag(1).eval({{Var::a, ExactScalar(0)}, {Var::b, ExactScalar(0)}}) ==
        ExactScalar(1, 3));
}

TEST_CASE("identity suite to degree ten") {
  for (const auto& id : uni_identity_ids()) {
    VerificationReport r = uni_verify(id, 10);
    INFO("identity ", id, " witness ", r.witness);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(uni_verify("no_such_identity", 3), UnknownIdentity);
  CHECK_THROWS_AS(uni_verify("diffeq", -1), Error);
}

TEST_CASE("three-term recurrence at the lower boundary") {
  // (1-2x) * 1 equals the stated combination at n = 0 with the below-range
  // member set to zero.
  VerificationReport r = uni_verify("recurrence", 0);
  CHECK(r.pass);
}

TEST_CASE("quadratic algebra realization") {
  auto reports = rank1_verify();
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}
