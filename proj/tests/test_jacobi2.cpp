#include <doctest.h>

#include "trijac/jacobi2.hpp"

using namespace trijac;
using namespace trijac::sym;

TEST_CASE("low-index members") {
  Jacobi2 family;
  CHECK(family.poly(0, 0) == ParamPoly(1));
  CHECK(family.poly(1, 0) == (a() + 1) - (a() + b() + c() + 3) * x());
  CHECK(family.poly(1, 1) == (b() + 1) * (1 - x()) - (b() + c() + 2) * y());
  CHECK(family.poly(0, 1).is_zero());
  CHECK(family.poly(2, 3).is_zero());
  CHECK(family.poly(-1, 0).is_zero());
}

TEST_CASE("total degree invariant") {
  Jacobi2 family;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const ParamPoly& p = family.poly(n, k);
      int deg = 0;
      for (const auto& [m, coeff] : p.terms())
        deg = std::max<int>(deg, m[Var::x] + m[Var::y]);
      CHECK(deg == n);
    }
}

TEST_CASE("parameter-shifted families come from substitution") {
  Jacobi2 family;
  ParamPoly direct = family.poly(2, 1);
  ParamPoly shifted = family.poly_shifted(2, 1, 0, 1, -1);
  std::map<Var, ExactScalar> at = {{Var::x, ExactScalar(1, 3)},  {Var::y, ExactScalar(1, 4)},
                                   {Var::a, ExactScalar(1, 2)},  {Var::b, ExactScalar(5, 2)},
                                   {Var::c, ExactScalar(-1, 3)}};
  std::map<Var, ExactScalar> moved = at;
  moved[Var::b] = at[Var::b] + ExactScalar(1);
  moved[Var::c] = at[Var::c] - ExactScalar(1);
  CHECK(shifted.eval(at) == direct.eval(moved));
}

TEST_CASE("triangle moments") {
  CHECK(frac_eq(triangle_moment(0, 0), ParamFrac(1)));
  CHECK(frac_eq(triangle_moment(1, 0), ParamFrac(a() + 1, a() + b() + c() + 3)));
  CHECK(frac_eq(inner(ParamPoly(1), ParamPoly(1)), ParamFrac(1)));
  CHECK(frac_eq(inner(x(), ParamPoly(1)), ParamFrac(a() + 1, a() + b() + c() + 3)));
}

TEST_CASE("orthogonality to constants") {
  Jacobi2 family;
  CHECK(inner(family.poly(1, 0), ParamPoly(1)).is_zero());
  CHECK(inner(family.poly(1, 1), ParamPoly(1)).is_zero());
}

TEST_CASE("norm closed form against the moment oracle") {
  Jacobi2 family;
  CHECK(frac_eq(norm_h(0, 0), ParamFrac(1)));
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      ParamFrac byinner = inner(family.poly(n, k), family.poly(n, k));
      CHECK(frac_eq(byinner, norm_h(n, k)));
    }
  CHECK_THROWS_AS(norm_h(1, 2), Error);
}

TEST_CASE("norm at zero parameters for the first mixed index") {
  // (b+c+2)(b+1)(c+1)/((a+b+c+4)(a+b+c+3)) -> 1/6 at the origin
  std::map<Var, ExactScalar> zero = {
      {Var::a, ExactScalar(0)}, {Var::b, ExactScalar(0)}, {Var::c, ExactScalar(0)}};
  CHECK(norm_h(1, 1).eval(zero) == ExactScalar(1, 6));
}

TEST_CASE("joint eigenfunctions") {
  Jacobi2 family;
  for (const auto& r : verify_eigen(4, family)) {
    INFO(r.relation, " ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("eigenvalue pairs separate indices") {
  // (-n(n+a+b+c+2), -k(k+b+c+1)) as polynomial pairs, pairwise distinct
  auto order = basis_order(6);
  std::vector<std::pair<ParamPoly, ParamPoly>> eigs;
  for (auto [n, k] : order)
    eigs.push_back({-(ParamPoly(n) * (ParamPoly(n + 2) + a() + b() + c())),
                    -(ParamPoly(k) * (ParamPoly(k + 1) + b() + c()))});
  for (size_t i = 0; i < eigs.size(); ++i)
    for (size_t j = i + 1; j < eigs.size(); ++j) {
      bool same = eigs[i].first == eigs[j].first && eigs[i].second == eigs[j].second;
      CHECK_FALSE(same);
    }
}

TEST_CASE("recurrences including boundary indices") {
  Jacobi2 family;
  CHECK(verify_recurrence(Recurrence::MultByX, 4, family).pass);
  CHECK(verify_recurrence(Recurrence::MultByComplement, 4, family).pass);
}

TEST_CASE("recurrence failure carries a witness") {
  Jacobi2 family;
  DegreeOp broken = dbuiltin("X1h") + DegreeOp::diagonal(ParamFrac(1));
  VerificationReport r = verify_recurrence(Recurrence::MultByX, 2, family, broken);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("(n,k)=(0,0)") != std::string::npos);
}

TEST_CASE("multiplication action at the origin index") {
  Jacobi2 family;
  RationalPoly r = dapply(dbuiltin("X1h"), 0, 0, family);
  CHECK((x() * r.den - r.num).is_zero());
  RationalPoly r3 = dapply(dbuiltin("X3h"), 0, 0, family);
  CHECK(((1 - x() - y()) * r3.den - r3.num).is_zero());
  RationalPoly zero = dapply(dbuiltin("M1h"), 2, 1, family);
  CHECK(zero.num.is_zero());
}

TEST_CASE("diagonal action reproduces the eigenvalue") {
  Jacobi2 family;
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      RationalPoly r = dapply(dbuiltin("Lh"), n, k, family);
      ParamPoly expected = -(ParamPoly(n) * (ParamPoly(n + 2) + a() + b() + c())) * family.poly(n, k);
      CHECK((r.num - expected * r.den).is_zero());
    }
  CHECK_THROWS_AS(dapply(dbuiltin("Lh"), 1, 2, family), Error);
}

TEST_CASE("ladder actions on the family") {
  Jacobi2 family;
  for (const auto& r : verify_sactions(4, family)) {
    INFO(r.relation, " ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("ladder bilinear combination acts as a scalar") {
  // s2s*s2 + s3s*s3 - s2 - s3 multiplies J_{n,k} by
  // -n(n+a+b+c+2) + k(k+b+c+1) - a - b - ab - ac.
  Jacobi2 family;
  DiffOp op = compose(builtin("s2s"), builtin("s2")) + compose(builtin("s3s"), builtin("s3")) -
              builtin("s2") - builtin("s3");
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      ParamPoly lambda = -(ParamPoly(n) * (ParamPoly(n + 2) + a() + b() + c())) +
                         ParamPoly(k) * (ParamPoly(k + 1) + b() + c()) - a() - b() -
                         a() * b() - a() * c();
      CHECK(apply(op, family.poly(n, k)) == lambda * family.poly(n, k));
    }
}

TEST_CASE("gram matrix shape") {
  Jacobi2 family;
  auto g = gram_matrix(1, family);
  REQUIRE(g.size() == 3);
  CHECK(frac_eq(g[0][0], ParamFrac(1)));
  CHECK(g[0][1].is_zero());
  CHECK(g[1][0].is_zero());
  CHECK(frac_eq(g[1][1], norm_h(1, 0)));
  CHECK(frac_eq(g[2][2], norm_h(1, 1)));
}

TEST_CASE("gram checks at a small bound") {
  Jacobi2 family;
  for (const auto& r : verify_gram(3, family)) {
    INFO(r.relation, " ", r.witness);
    CHECK(r.pass);
  }
}
