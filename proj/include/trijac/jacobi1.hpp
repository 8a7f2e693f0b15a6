// One-variable Jacobi polynomials on [0,1] with symbolic parameters, their
// exact moment functional, and the univariate identity suite.
#pragma once

#include <string>
#include <vector>

#include "trijac/exact.hpp"
#include "trijac/report.hpp"
#include "trijac/weyl.hpp"

namespace trijac {

struct UnknownIdentity : Error {
  using Error::Error;
};

// Degree-n polynomial in x with coefficients polynomial in a, b; the zero
// polynomial for n = -1.
ParamPoly uni_jacobi(int n);
// Same family with substituted parameter polynomials (contiguity shifts).
ParamPoly uni_jacobi_shifted(int n, const ParamPoly& pa, const ParamPoly& pb);

// Normalized moment functional of the weight x^a (1-x)^b on [0,1]:
// E[x^m] = (a+1)_m / (a+b+2)_m.
ParamFrac uni_moment(int m);
// Inner product of two polynomials in x under the normalized functional.
ParamFrac uni_inner(const ParamPoly& p, const ParamPoly& q);
// Closed form of uni_inner(J_n, J_n), all Gamma ratios as Pochhammers.
ParamFrac uni_norm_diag(int n);

// Identity ids: diffeq, recurrence, shift_down, shift_up, structure,
// christoffel_a, geronimus_a, christoffel_b, geronimus_b, xminus1_dx, x_dx,
// mixed_contig_1, mixed_contig_2.
const std::vector<std::string>& uni_identity_ids();
VerificationReport uni_verify(const std::string& identity_id, int n_max);

// The quadratic-algebra relations realized by the hypergeometric operator
// and multiplication by x, plus the action check of their commutator.
std::vector<VerificationReport> rank1_verify();

}  // namespace trijac
