#include "trijac/jacobi1.hpp"

#include <chrono>
#include <functional>

namespace trijac {

namespace {
using sym::a;
using sym::b;
using sym::x;

ExactScalar factorial(int n) {
  ExactScalar f(1);
  for (int i = 2; i <= n; ++i) f *= ExactScalar(i);
  return f;
}
}  // namespace

ParamPoly uni_jacobi(int n) {
  if (n == -1) return ParamPoly(0);
  if (n < -1) throw Error("uni_jacobi: degree below -1");
  // (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; x), term m carries
  // (-1)^m C(n,m) (a+m+1)_(n-m) (n+a+b+1)_m / n!.
  ParamPoly result;
  ExactScalar inv_nfact = ExactScalar(1) / factorial(n);
  ExactScalar binom(1);
  for (int m = 0; m <= n; ++m) {
    ParamPoly coeff =
        pochhammer(a() + ParamPoly(m + 1), n - m) * pochhammer(a() + b() + ParamPoly(n + 1), m);
    ExactScalar scale = binom * inv_nfact;
    if (m % 2) scale = -scale;
    result += coeff.scaled(scale) * x().pow(m);
    binom *= ExactScalar(n - m) / ExactScalar(m + 1);
  }
  return result;
}

ParamPoly uni_jacobi_shifted(int n, const ParamPoly& pa, const ParamPoly& pb) {
  // Substitute through a neutral slot to avoid collisions between old and
  // new parameter names.
  ParamPoly p = uni_jacobi(n);
  p = p.subst(Var::a, ParamPoly::variable(Var::ell));
  p = p.subst(Var::b, ParamPoly::variable(Var::tau));
  p = p.subst(Var::ell, pa);
  return p.subst(Var::tau, pb);
}

ParamFrac uni_moment(int m) {
  return ParamFrac(pochhammer(a() + 1, m), pochhammer(a() + b() + 2, m));
}

ParamFrac uni_inner(const ParamPoly& p, const ParamPoly& q) {
  ParamPoly prod = p * q;
  int deg = prod.degree_in(Var::x);
  // Common denominator (a+b+2)_deg keeps the accumulation polynomial.
  ParamPoly den = pochhammer(a() + b() + 2, deg);
  ParamPoly num;
  for (const auto& [mono, coeff] : prod.terms()) {
    int m = mono[Var::x];
    Mono rest = mono;
    rest[Var::x] = 0;
    ParamPoly base = ParamPoly::from_terms({{rest, coeff}});
    num += base * pochhammer(a() + 1, m) * pochhammer(a() + b() + ParamPoly(m + 2), deg - m);
  }
  return ParamFrac(num, den);
}

ParamFrac uni_norm_diag(int n) {
  if (n == 0) return ParamFrac(1);
  ParamPoly num = pochhammer(a() + 1, n) * pochhammer(b() + 1, n);
  ParamPoly den = (ParamPoly(2 * n + 1) + a() + b()) * ParamPoly(factorial(n)) *
                  pochhammer(a() + b() + 2, n - 1);
  return ParamFrac(num, den);
}

namespace {

// Shared harness: runs check(n) for 0 <= n <= n_max and reports the first
// failing degree with its residual.
VerificationReport run_per_degree(const std::string& id, int n_max,
                                  const std::function<ParamPoly(int)>& residual) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.relation = id;
  r.representation = "variable";
  r.mode = "symbolic";
  r.pass = true;
  for (int n = 0; n <= n_max; ++n) {
    ParamPoly res = residual(n);
    if (!res.is_zero()) {
      r.pass = false;
      r.witness = "n=" + std::to_string(n) + " residual leading term " +
                  ParamPoly::from_terms({{res.leading().first, res.leading().second}}).to_text();
      break;
    }
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ParamPoly lin(long c0, long ca, long cb, int n) {
  // c0 + ca*a + cb*b + n
  return ParamPoly(c0 + n) + ca * a() + cb * b();
}

}  // namespace

const std::vector<std::string>& uni_identity_ids() {
  static const std::vector<std::string> ids = {
      "diffeq",      "recurrence",   "shift_down",   "shift_up",      "structure",
      "christoffel_a", "geronimus_a", "christoffel_b", "geronimus_b",
      "xminus1_dx",  "x_dx",         "mixed_contig_1", "mixed_contig_2"};
  return ids;
}

VerificationReport uni_verify(const std::string& id, int n_max) {
  if (n_max < 0) throw Error("uni_verify: n_max must be nonnegative");
  auto J = [](int n) { return uni_jacobi(n); };
  auto Jab = [](int n, int da, int db) {
    return uni_jacobi_shifted(n, a() + ParamPoly(da), b() + ParamPoly(db));
  };

  if (id == "diffeq") {
    DiffOp H = builtin("H");
    return run_per_degree(id, n_max, [&](int n) {
      return apply(H, J(n)) + J(n) * lin(1, 1, 1, n).scaled(ExactScalar(n));
    });
  }
  if (id == "recurrence") {
    return run_per_degree(id, n_max, [&](int n) {
      // Cleared by (2n+a+b)(2n+a+b+1)(2n+a+b+2).
      ParamPoly d0 = lin(0, 1, 1, 2 * n), d1 = lin(1, 1, 1, 2 * n), d2 = lin(2, 1, 1, 2 * n);
      ParamPoly lhs = (1 - 2 * x()) * J(n) * d0 * d1 * d2;
      ParamPoly rhs = 2 * ParamPoly(n + 1) * lin(1, 1, 1, n) * d0 * J(n + 1) -
                      (a() - b()) * (a() + b()) * d1 * J(n) +
                      2 * (ParamPoly(n) + a()) * (ParamPoly(n) + b()) * d2 * J(n - 1);
      return lhs - rhs;
    });
  }
  if (id == "shift_down") {
    return run_per_degree(id, n_max, [&](int n) {
      return J(n).derive(Var::x) + lin(1, 1, 1, n) * Jab(n - 1, 1, 1);
    });
  }
  if (id == "shift_up") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = x() * (1 - x()) * J(n).derive(Var::x) + (a() - (a() + b()) * x()) * J(n);
      return lhs - ParamPoly(n + 1) * Jab(n + 1, -1, -1);
    });
  }
  if (id == "structure") {
    DiffOp K3 = builtin("K3");
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly d = lin(1, 1, 1, 2 * n);
      ParamPoly lhs = apply(K3, J(n)) * d;
      ParamPoly rhs = ParamPoly(n + 1) * lin(1, 1, 1, n) * J(n + 1) -
                      (ParamPoly(n) + a()) * (ParamPoly(n) + b()) * J(n - 1);
      return lhs - rhs;
    });
  }
  if (id == "christoffel_a") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = x() * J(n) * lin(1, 1, 1, 2 * n);
      return lhs - ((ParamPoly(n) + a()) * Jab(n, -1, 0) - ParamPoly(n + 1) * Jab(n + 1, -1, 0));
    });
  }
  if (id == "geronimus_a") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = J(n) * lin(1, 1, 1, 2 * n);
      return lhs - (lin(1, 1, 1, n) * Jab(n, 1, 0) - (ParamPoly(n) + b()) * Jab(n - 1, 1, 0));
    });
  }
  if (id == "christoffel_b") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = (1 - x()) * J(n) * lin(1, 1, 1, 2 * n);
      return lhs - (ParamPoly(n + 1) * Jab(n + 1, 0, -1) + (ParamPoly(n) + b()) * Jab(n, 0, -1));
    });
  }
  if (id == "geronimus_b") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = J(n) * lin(1, 1, 1, 2 * n);
      return lhs - (lin(1, 1, 1, n) * Jab(n, 0, 1) + (ParamPoly(n) + a()) * Jab(n - 1, 0, 1));
    });
  }
  if (id == "xminus1_dx") {
    return run_per_degree(id, n_max, [&](int n) {
      return (x() - 1) * J(n).derive(Var::x) - lin(1, 1, 1, n) * (Jab(n, 1, 0) - J(n));
    });
  }
  if (id == "x_dx") {
    return run_per_degree(id, n_max, [&](int n) {
      return x() * J(n).derive(Var::x) - lin(1, 1, 1, n) * (Jab(n, 0, 1) - J(n));
    });
  }
  if (id == "mixed_contig_1") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = ParamPoly(n) * Jab(n, 0, -1);
      ParamPoly rhs = lin(1, 1, 1, n) * (1 - x()) * Jab(n - 1, 1, 1) -
                      (ParamPoly(n) * (1 - x()) + b()) * Jab(n - 1, 1, 0);
      return lhs - rhs;
    });
  }
  if (id == "mixed_contig_2") {
    return run_per_degree(id, n_max, [&](int n) {
      ParamPoly lhs = (ParamPoly(n + 1) + a()) * Jab(n, 0, 1);
      ParamPoly rhs = lin(2, 1, 1, n) * Jab(n, 1, 1) - (ParamPoly(n + 1) + b()) * Jab(n, 1, 0);
      return lhs - rhs;
    });
  }
  throw UnknownIdentity("unknown univariate identity '" + id + "'");
}

std::vector<VerificationReport> rank1_verify() {
  std::vector<VerificationReport> out;
  DiffOp K1 = builtin("K1"), K2 = builtin("K2"), K3p = builtin("K3");
  DiffOp I = DiffOp::identity();
  ParamPoly ab = a() + b();

  auto record = [&](const std::string& id, bool pass, const std::string& witness) {
    VerificationReport r;
    r.relation = id;
    r.representation = "variable";
    r.mode = "symbolic";
    r.pass = pass;
    if (!pass) r.witness = witness;
    out.push_back(r);
  };

  // [K1,[K1,K2]] + 2{K1,K2} - 2K1 - (a+b)(a+b+2)K2 + (a+b)(a+1)I = 0
  DiffOp rel1 = bracket(K1, bracket(K1, K2)) + antibracket(K1, K2).scaled(ParamPoly(2)) -
                K1.scaled(ParamPoly(2)) - K2.scaled(ab * (ab + 2)) + I.scaled(ab * (a() + 1));
  record("rank1_first", rel1.is_zero(), rel1.to_text());

  DiffOp rel2 = bracket(K2, bracket(K2, K1)) + compose(K2, K2).scaled(ParamPoly(2)) -
                K2.scaled(ParamPoly(2));
  record("rank1_second", rel2.is_zero(), rel2.to_text());

  DiffOp k3 = bracket(K1, K2) - K3p;
  record("rank1_commutator_form", k3.is_zero(), k3.to_text());

  // Commutator action: two-term expansion with degree-independent weights.
  bool ok = true;
  std::string witness;
  for (int n = 0; n <= 8 && ok; ++n) {
    ParamPoly d = ParamPoly(2 * n + 1) + a() + b();
    ParamPoly lhs = apply(K3p, uni_jacobi(n)) * d;
    ParamPoly rhs = ParamPoly(n + 1) * (ParamPoly(n + 1) + a() + b()) * uni_jacobi(n + 1) -
                    (ParamPoly(n) + a()) * (ParamPoly(n) + b()) * uni_jacobi(n - 1);
    ParamPoly res = lhs - rhs;
    if (!res.is_zero()) {
      ok = false;
      witness = "n=" + std::to_string(n);
    }
  }
  record("rank1_commutator_action", ok, witness);
  return out;
}

}  // namespace trijac
