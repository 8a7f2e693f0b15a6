// Bivariate Jacobi polynomials on the triangle: construction from the
// one-variable family, exact triangle-weight inner products via normalized
// Dirichlet moments, norms, eigen-equations, recurrences and ladder actions.
#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "trijac/exact.hpp"
#include "trijac/jacobi1.hpp"
#include "trijac/report.hpp"
#include "trijac/shiftalg.hpp"
#include "trijac/weyl.hpp"

namespace trijac {

// Memoizing provider for the triangle family. Indices outside
// 0 <= k <= n give the zero polynomial. Cache fills under a lock; cached
// values are immutable afterwards.
class Jacobi2 {
 public:
  const ParamPoly& poly(int n, int k) const;
  // Family with parameters displaced by integers (produced by substitution
  // into the coefficients, not by re-deriving).
  ParamPoly poly_shifted(int n, int k, int da, int db, int dc) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, ParamPoly> cache_;
};

// Fresh construction of J_{n,k} (uncached path used by the provider).
ParamPoly bi_jacobi(int n, int k);

// Normalized Dirichlet moment of x^m1 y^m2 against x^a y^b (1-x-y)^c:
// (a+1)_m1 (b+1)_m2 / (a+b+c+3)_(m1+m2).
ParamFrac triangle_moment(int m1, int m2);

// Moment-summed inner product, normalized so inner(1,1) = 1.
ParamFrac inner(const ParamPoly& p, const ParamPoly& q);

// Closed form of the squared norm over the weight integral, with all Gamma
// ratios reduced to Pochhammers.
ParamFrac norm_h(int n, int k);

// Graded index order (0,0), (1,0), (1,1), (2,0), ...
std::vector<std::pair<int, int>> basis_order(int n_max);

// Quotient with numerator in {x,y,a,b,c} and denominator in {a,b,c}; the
// shape produced when difference operators act on basis elements.
struct RationalPoly {
  ParamPoly num;
  ParamPoly den{1};
};

// Action of a difference operator on J_{n,k} under the out-of-cone
// convention J = 0 for k < 0, k > n or n < 0.
RationalPoly dapply(const DegreeOp& A, int n, int k, const Jacobi2& family);

std::vector<VerificationReport> verify_eigen(int n_max, const Jacobi2& family);

enum class Recurrence { MultByX, MultByComplement };
VerificationReport verify_recurrence(Recurrence which, int n_max, const Jacobi2& family);
VerificationReport verify_recurrence(Recurrence which, int n_max, const Jacobi2& family,
                                     const DegreeOp& op);

// The six first-order ladder action formulas; ids s1, s1s, s2, s2s, s3, s3s.
std::vector<VerificationReport> verify_sactions(int n_max, const Jacobi2& family);

// Gram matrix of inner products in basis order; entries as fractions.
std::vector<std::vector<ParamFrac>> gram_matrix(int n_max, const Jacobi2& family);
// Diagonal-vs-closed-form and off-diagonal-vanishing checks.
std::vector<VerificationReport> verify_gram(int n_max, const Jacobi2& family);

}  // namespace trijac
