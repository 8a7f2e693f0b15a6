#include <doctest.h>

#include "trijac/relation_engine.hpp"
#include "trijac/weyl.hpp"

using namespace trijac;
using namespace trijac::sym;

TEST_CASE("canonical Weyl relation") {
  DiffOp dx = DiffOp::derivative(1, 0);
  DiffOp mx = DiffOp::scalar(x());
  // dx o x = x dx + 1
  DiffOp expect = DiffOp{}.with(1, 0, x()).with(0, 0, ParamPoly(1));
  CHECK(compose(dx, mx) == expect);
  CHECK(compose(DiffOp::identity(), mx) == mx);
  // dx o x^2 = x^2 dx + 2x
  DiffOp expect2 = DiffOp{}.with(1, 0, x() * x()).with(0, 0, 2 * x());
  CHECK(compose(dx, DiffOp::scalar(x() * x())) == expect2);
}

TEST_CASE("apply matches composition") {
  SplitMix64 rng(5);
  const char* names[] = {"L", "L1", "L3", "X1", "X3", "N1", "M3", "s1", "s2s"};
  for (int i = 0; i < 110; ++i) {
    DiffOp A = builtin(names[rng.next() % 9]);
    DiffOp B = builtin(names[rng.next() % 9]);
    ParamPoly p;
    for (int t = 0; t < 3; ++t)
      p += ParamPoly(ExactScalar(rng.range(-5, 5))) * x().pow(rng.next() % 4) *
           y().pow(rng.next() % 3);
    CHECK(apply(compose(A, B), p) == apply(A, apply(B, p)));
  }
}

TEST_CASE("apply basics") {
  CHECK(apply(builtin("L"), ParamPoly(1)).is_zero());
  // s2 multiplies x by its degree plus a
  CHECK(apply(builtin("s2"), x()) == (a() + 1) * x());
  // L1 eigenvector at the first nontrivial index
  ParamPoly j11 = (b() + 1) * (1 - x()) - (b() + c() + 2) * y();
  CHECK(apply(builtin("L1"), j11) == -((b() + c() + 2)) * j11);
}

TEST_CASE("builtin catalogue") {
  CHECK(builtin("X1") == DiffOp::scalar(x()));
  CHECK(builtin("M1").is_zero());
  CHECK(builtin("J3").is_zero());
  DiffOp s1 = DiffOp{}.with(0, 1, x() + y() - 1).with(0, 0, c());
  CHECK(builtin("s1") == s1);
  CHECK_THROWS_AS(builtin("Q7"), UnknownGenerator);
}

TEST_CASE("primary commutators against printed forms") {
  CHECK(bracket(builtin("L"), builtin("L1")).is_zero());
  CHECK(bracket(builtin("X1"), builtin("X3")).is_zero());
  CHECK(bracket(builtin("L"), builtin("X1")) == builtin("N1"));
  CHECK(bracket(builtin("L"), builtin("X3")) == builtin("N3"));
  CHECK(bracket(builtin("L1"), builtin("X1")).is_zero());
  CHECK(bracket(builtin("L1"), builtin("X3")) == builtin("M3"));
  CHECK(bracket(builtin("L3"), builtin("X1")) == builtin("J1"));
  CHECK(bracket(builtin("L3"), builtin("X3")).is_zero());
}

TEST_CASE("bracket bilinearity and antisymmetry") {
  DiffOp A = builtin("L"), B = builtin("X1"), C = builtin("L3");
  CHECK(bracket(A, A).is_zero());
  CHECK((bracket(A, B) + bracket(B, A)).is_zero());
  CHECK(bracket(A + C, B) == bracket(A, B) + bracket(C, B));
}

TEST_CASE("Jacobi identity on random builtin triples") {
  SplitMix64 rng(11);
  const char* names[] = {"L", "L1", "L2", "L3", "X1", "X2", "X3", "N1", "N3", "M3", "J1", "G13"};
  for (int i = 0; i < 40; ++i) {
    DiffOp A = builtin(names[rng.next() % 12]);
    DiffOp B = builtin(names[rng.next() % 12]);
    DiffOp C = builtin(names[rng.next() % 12]);
    DiffOp total =
        bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B));
    CHECK(total.is_zero());
  }
}

TEST_CASE("operator sum decomposition and symmetries") {
  DiffOp L = builtin("L");
  CHECK(L == builtin("L1") + builtin("L2") + builtin("L3"));
  for (const char* part : {"L1", "L2", "L3"}) CHECK(bracket(L, builtin(part)).is_zero());
}

TEST_CASE("first-order combination of the primary commutators") {
  CHECK(builtin("J1") == -builtin("M3") + builtin("N1") + builtin("N3"));
}

TEST_CASE("ladder factorizations") {
  DiffOp I = DiffOp::identity();
  CHECK(builtin("L3") == compose(builtin("s3s") - I, builtin("s3")) + I.scaled(b() * (a() + 1)));
  CHECK(builtin("L3") == compose(builtin("s3") + I, builtin("s3s")) + I.scaled(a() * (b() + 1)));
  ParamPoly sym_part = a() + b() + c() + a() * b() + a() * c() + b() * c();
  DiffOp lhs1 = compose(builtin("s1s"), builtin("s1")) + compose(builtin("s2s"), builtin("s2")) +
                compose(builtin("s3s"), builtin("s3")) - builtin("s1") - builtin("s2") -
                builtin("s3") + I.scaled(sym_part);
  CHECK(builtin("L") == lhs1);
  DiffOp lhs2 = compose(builtin("s1"), builtin("s1s")) + compose(builtin("s2"), builtin("s2s")) +
                compose(builtin("s3"), builtin("s3s")) + builtin("s1s") + builtin("s2s") +
                builtin("s3s") + I.scaled(sym_part);
  CHECK(builtin("L") == lhs2);
}

TEST_CASE("weight conjugations") {
  CHECK(conjugate_check(1));
  CHECK(conjugate_check(2));
  CHECK(conjugate_check(3));
}

TEST_CASE("mutated builtins differ") {
  DiffOpMutation mut{"L", {1, 0}, ParamPoly(1)};
  CHECK(builtin_mutated("L", mut) != builtin("L"));
  CHECK(builtin_mutated("L1", mut) == builtin("L1"));
}
