#include "trijac/jacobi2.hpp"

#include <chrono>

namespace trijac {

namespace {
using sym::a;
using sym::b;
using sym::c;
using sym::x;
using sym::y;

ExactScalar factorial(int n) {
  ExactScalar f(1);
  for (int i = 2; i <= n; ++i) f *= ExactScalar(i);
  return f;
}

ParamPoly s_abc() { return a() + b() + c(); }
}  // namespace

ParamPoly bi_jacobi(int n, int k) {
  if (n < 0 || k < 0 || k > n) return ParamPoly(0);
  // x-part: degree n-k with second parameter b+c+2k+1.
  ParamPoly xpart = uni_jacobi_shifted(n - k, a(), b() + c() + ParamPoly(2 * k + 1));
  // y-part: (1-x)^k J_k(y/(1-x)) with parameters (b,c); the prefactor clears
  // every denominator, leaving sum_m coeff_m(b,c) y^m (1-x)^(k-m).
  ParamPoly inner_poly = uni_jacobi_shifted(k, b(), c());
  ParamPoly ypart;
  ParamPoly one_minus_x = 1 - x();
  for (const auto& [mono, coeff] : inner_poly.terms()) {
    int m = mono[Var::x];
    Mono rest = mono;
    rest[Var::x] = 0;
    ParamPoly base = ParamPoly::from_terms({{rest, coeff}});
    ypart += base * y().pow(m) * one_minus_x.pow(k - m);
  }
  return xpart * ypart;
}

const ParamPoly& Jacobi2::poly(int n, int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(n, k);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (n < 0 || k < 0 || k > n) key = {-1, -1};
  auto [ins, fresh] = cache_.try_emplace(key, bi_jacobi(n, k));
  return ins->second;
}

ParamPoly Jacobi2::poly_shifted(int n, int k, int da, int db, int dc) const {
  ParamPoly p = poly(n, k);
  if (da) p = p.subst(Var::a, a() + ParamPoly(da));
  if (db) p = p.subst(Var::b, b() + ParamPoly(db));
  if (dc) p = p.subst(Var::c, c() + ParamPoly(dc));
  return p;
}

ParamFrac triangle_moment(int m1, int m2) {
  return ParamFrac(pochhammer(a() + 1, m1) * pochhammer(b() + 1, m2),
                   pochhammer(s_abc() + 3, m1 + m2));
}

ParamFrac inner(const ParamPoly& p, const ParamPoly& q) {
  ParamPoly prod = p * q;
  if (prod.is_zero()) return ParamFrac(0);
  // Group by (x,y)-monomial, then accumulate over the shared denominator
  // (a+b+c+3)_D with D the total x,y-degree.
  std::map<std::pair<int, int>, ParamPoly> groups;
  int D = 0;
  for (const auto& [mono, coeff] : prod.terms()) {
    int m1 = mono[Var::x], m2 = mono[Var::y];
    D = std::max(D, m1 + m2);
    Mono rest = mono;
    rest[Var::x] = 0;
    rest[Var::y] = 0;
    ParamPoly t = ParamPoly::from_terms({{rest, coeff}});
    auto [it, fresh] = groups.try_emplace({m1, m2}, t);
    if (!fresh) it->second += t;
  }
  ParamPoly num;
  for (const auto& [w, coeff] : groups) {
    if (coeff.is_zero()) continue;
    ParamPoly weight = pochhammer(a() + 1, w.first) * pochhammer(b() + 1, w.second) *
                       pochhammer(s_abc() + ParamPoly(3 + w.first + w.second),
                                  D - w.first - w.second);
    num += coeff * weight;
  }
  return ParamFrac(num, pochhammer(s_abc() + 3, D));
}

ParamFrac norm_h(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error("norm_h: indices must satisfy 0 <= k <= n");
  ParamPoly num = pochhammer(b() + c() + ParamPoly(2 * k + 2), n - k) *
                  pochhammer(b() + c() + ParamPoly(k + 1), k) * pochhammer(a() + 1, n - k) *
                  pochhammer(b() + 1, k) * pochhammer(c() + 1, k);
  ParamPoly den = (s_abc() + ParamPoly(2 * n + 2)) *
                  ParamPoly(factorial(n - k) * factorial(k));
  if (n + k == 0)
    num *= s_abc() + 2;
  else
    den *= pochhammer(s_abc() + 3, n + k - 1);
  return ParamFrac(num, den);
}

std::vector<std::pair<int, int>> basis_order(int n_max) {
  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) order.push_back({n, k});
  return order;
}

namespace {

// Splits a denominator into linear factors drawn from the families the
// catalogue coefficients are built from, keeping anything unrecognized as an
// opaque factor. Working with factor multisets keeps the common denominator
// of a multi-term action small without a general polynomial gcd.
struct FactoredDen {
  ExactScalar content{1};
  std::vector<std::pair<ParamPoly, int>> factors;  // factor, multiplicity
};

FactoredDen factor_denominator(const ParamPoly& den, int n, int k) {
  FactoredDen out;
  ParamPoly rest = den;
  ExactScalar cont = rest.content();
  if (rest.leading().second.is_negative()) cont = -cont;
  if (!cont.is_one()) {
    rest = rest.scaled(ExactScalar(1) / cont);
    out.content = cont;
  }
  std::vector<ParamPoly> candidates;
  for (int m = 2 * k - 8; m <= 2 * k + 12; ++m) candidates.push_back(b() + c() + ParamPoly(m));
  for (int m = 2 * n - 8; m <= 2 * n + 14; ++m)
    candidates.push_back(a() + b() + c() + ParamPoly(m));
  for (const auto& cand : candidates) {
    int mult = 0;
    while (rest.total_degree() > 0) {
      auto q = try_divide_exact(rest, cand);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult) out.factors.push_back({cand, mult});
    if (rest.total_degree() == 0) break;
  }
  if (rest.total_degree() > 0) {
    out.factors.push_back({rest, 1});
  } else {
    ExactScalar c = rest.constant_value();
    if (!c.is_one()) out.content *= c;
  }
  return out;
}

}  // namespace

RationalPoly dapply(const DegreeOp& A, int n, int k, const Jacobi2& family) {
  if (n < 0 || k < 0 || k > n) throw Error("dapply: indices must satisfy 0 <= k <= n");
  struct TermData {
    ParamPoly num;
    FactoredDen den;
    const ParamPoly* J;
  };
  std::vector<TermData> terms;
  for (const auto& [shift, coeff] : A.terms()) {
    int nn = n + shift.dn, kk = k + shift.dk;
    if (nn < 0 || kk < 0 || kk > nn) continue;  // out-of-cone terms drop
    ParamFrac c_eval = coeff.subst(Var::n, ParamPoly(n)).subst(Var::k, ParamPoly(k));
    if (c_eval.den().is_zero()) throw DenominatorVanishes("dapply coefficient denominator");
    const ParamPoly& J = family.poly(nn, kk);
    if (c_eval.num().is_zero() || J.is_zero()) continue;
    terms.push_back({c_eval.num(), factor_denominator(c_eval.den(), n, k), &J});
  }
  // Common denominator: per-factor maximum multiplicity across terms.
  std::vector<std::pair<ParamPoly, int>> common;
  auto find_common = [&common](const ParamPoly& f) -> int* {
    for (auto& [g, m] : common)
      if (g == f) return &m;
    common.push_back({f, 0});
    return &common.back().second;
  };
  for (const auto& t : terms)
    for (const auto& [f, m] : t.den.factors) {
      int* slot = find_common(f);
      *slot = std::max(*slot, m);
    }
  RationalPoly r;
  for (const auto& [f, m] : common)
    for (int i = 0; i < m; ++i) r.den *= f;
  for (const auto& t : terms) {
    ParamPoly cof = t.num.scaled(ExactScalar(1) / t.den.content);
    for (const auto& [f, m] : common) {
      int have = 0;
      for (const auto& [g, mm] : t.den.factors)
        if (g == f) have = mm;
      for (int i = have; i < m; ++i) cof *= f;
    }
    r.num += cof * (*t.J);
  }
  return r;
}

std::vector<VerificationReport> verify_eigen(int n_max, const Jacobi2& family) {
  std::vector<VerificationReport> out;
  DiffOp L = builtin("L"), L1 = builtin("L1");
  for (auto which : {0, 1}) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.relation = which == 0 ? "eigen_total" : "eigen_partial";
    r.representation = "action";
    r.mode = "symbolic";
    r.pass = true;
    for (int n = 0; n <= n_max && r.pass; ++n)
      for (int k = 0; k <= n && r.pass; ++k) {
        const ParamPoly& J = family.poly(n, k);
        ParamPoly eig = which == 0 ? ParamPoly(n) * (ParamPoly(n + 2) + s_abc())
                                   : ParamPoly(k) * (ParamPoly(k + 1) + b() + c());
        ParamPoly res = apply(which == 0 ? L : L1, J) + eig * J;
        if (!res.is_zero()) {
          r.pass = false;
          r.witness = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

VerificationReport verify_recurrence(Recurrence which, int n_max, const Jacobi2& family) {
  return verify_recurrence(which, n_max, family,
                           dbuiltin(which == Recurrence::MultByX ? "X1h" : "X3h"));
}

VerificationReport verify_recurrence(Recurrence which, int n_max, const Jacobi2& family,
                                     const DegreeOp& op) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.relation = which == Recurrence::MultByX ? "recurrence_x" : "recurrence_complement";
  r.representation = "action";
  r.mode = "symbolic";
  r.pass = true;
  ParamPoly mult = which == Recurrence::MultByX ? x() : 1 - x() - y();
  for (int n = 0; n <= n_max && r.pass; ++n)
    for (int k = 0; k <= n && r.pass; ++k) {
      RationalPoly rhs = dapply(op, n, k, family);
      ParamPoly res = mult * family.poly(n, k) * rhs.den - rhs.num;
      if (!res.is_zero()) {
        r.pass = false;
        r.witness = "boundary or interior failure at (n,k)=(" + std::to_string(n) + "," +
                    std::to_string(k) + "), residual leading term " +
                    ParamPoly::from_terms({{res.leading().first, res.leading().second}}).to_text();
      }
    }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> verify_sactions(int n_max, const Jacobi2& family) {
  std::vector<VerificationReport> out;
  struct Case {
    const char* id;
    int da, db, dc;  // parameter displacement of the right-hand family
  };
  // Right sides, with n,k as concrete integers; the common factor
  // b+c+2k+1 multiplies the two-term actions through.
  const Case cases[] = {{"s1", 0, 1, -1},  {"s1s", 0, -1, 1}, {"s2", -1, 0, 1},
                        {"s2s", 1, 0, -1}, {"s3", 1, -1, 0},  {"s3s", -1, 1, 0}};
  for (const auto& cs : cases) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.relation = std::string("action_") + cs.id;
    r.representation = "action";
    r.mode = "symbolic";
    r.pass = true;
    DiffOp op = builtin(cs.id);
    for (int n = 0; n <= n_max && r.pass; ++n)
      for (int k = 0; k <= n && r.pass; ++k) {
        ParamPoly J = family.poly(n, k);
        ParamPoly lhs = apply(op, J);
        ParamPoly nk(n), kk(k);
        ParamPoly res;
        std::string id = cs.id;
        if (id == "s1") {
          res = lhs - (c() + kk) * family.poly_shifted(n, k, cs.da, cs.db, cs.dc);
        } else if (id == "s1s") {
          res = lhs + (b() + kk) * family.poly_shifted(n, k, cs.da, cs.db, cs.dc);
        } else {
          ParamPoly denom = b() + c() + ParamPoly(2 * k + 1);
          ParamPoly same = family.poly_shifted(n, k, cs.da, cs.db, cs.dc);
          if (id == "s2") {
            ParamPoly down = family.poly_shifted(n, k - 1, cs.da, cs.db, cs.dc);
            res = lhs * denom - ((nk - kk + 1) * (b() + kk) * down +
                                 (a() + nk - kk) * (b() + c() + kk + 1) * same);
          } else if (id == "s2s") {
            ParamPoly up = family.poly_shifted(n, k + 1, cs.da, cs.db, cs.dc);
            res = lhs * denom + ((kk + 1) * (s_abc() + nk + kk + 2) * up +
                                 (c() + kk) * (b() + c() + kk + nk + 1) * same);
          } else if (id == "s3") {
            ParamPoly up = family.poly_shifted(n, k + 1, cs.da, cs.db, cs.dc);
            res = lhs * denom - (-((kk + 1) * (s_abc() + nk + kk + 2)) * up +
                                 (b() + kk) * (b() + c() + kk + nk + 1) * same);
          } else {  // s3s
            ParamPoly down = family.poly_shifted(n, k - 1, cs.da, cs.db, cs.dc);
            res = lhs * denom - ((nk - kk + 1) * (c() + kk) * down -
                                 (a() + nk - kk) * (b() + c() + kk + 1) * same);
          }
        }
        if (!res.is_zero()) {
          r.pass = false;
          r.witness = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<ParamFrac>> gram_matrix(int n_max, const Jacobi2& family) {
  auto order = basis_order(n_max);
  size_t m = order.size();
  std::vector<std::vector<ParamFrac>> g(m, std::vector<ParamFrac>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      ParamFrac v = inner(family.poly(order[i].first, order[i].second),
                          family.poly(order[j].first, order[j].second));
      g[i][j] = v;
      g[j][i] = v;
    }
  return g;
}

std::vector<VerificationReport> verify_gram(int n_max, const Jacobi2& family) {
  std::vector<VerificationReport> out;
  auto order = basis_order(n_max);
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport off;
  off.relation = "gram_offdiagonal";
  off.representation = "action";
  off.mode = "symbolic";
  off.pass = true;
  VerificationReport diag;
  diag.relation = "gram_diagonal_matches_norm";
  diag.representation = "action";
  diag.mode = "symbolic";
  diag.pass = true;

  for (size_t i = 0; i < order.size(); ++i) {
    const ParamPoly& pi = family.poly(order[i].first, order[i].second);
    for (size_t j = i; j < order.size(); ++j) {
      ParamFrac v = inner(pi, family.poly(order[j].first, order[j].second));
      if (i == j) {
        if (!frac_eq(v, norm_h(order[i].first, order[i].second))) {
          diag.pass = false;
          diag.witness = "(n,k)=(" + std::to_string(order[i].first) + "," +
                         std::to_string(order[i].second) + ")";
        }
      } else if (!v.is_zero()) {
        off.pass = false;
        off.witness = "entries (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  off.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  diag.elapsed_ms = off.elapsed_ms;
  out.push_back(off);
  out.push_back(diag);
  return out;
}

}  // namespace trijac
