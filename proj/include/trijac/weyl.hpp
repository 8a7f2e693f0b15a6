// Normal-ordered differential operators in x, y with polynomial coefficients:
// composition via the Leibniz rule, commutators, application to polynomials,
// and the builtin generator catalogue of the rank-two Jacobi algebra.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trijac/exact.hpp"

namespace trijac {

struct UnknownGenerator : Error {
  using Error::Error;
};

// Derivative multi-index dx^i dy^j.
struct DxKey {
  int i = 0, j = 0;
  bool operator<(const DxKey& o) const { return std::tie(i, j) < std::tie(o.i, o.j); }
  bool operator==(const DxKey& o) const { return i == o.i && j == o.j; }
};

// Differential operator in normal form: polynomial coefficients to the left
// of the derivative symbols. Equality is identity of normal forms.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp identity() { return scalar(ParamPoly(1)); }
  static DiffOp scalar(const ParamPoly& p);
  static DiffOp derivative(int i, int j) {
    DiffOp d;
    d.terms_[{i, j}] = ParamPoly(1);
    return d;
  }

  DiffOp& with(int i, int j, const ParamPoly& coeff);

  const std::map<DxKey, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  DiffOp operator-() const;
  DiffOp scaled(const ParamPoly& p) const;
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  // Substitution applied to every coefficient (parameter shifts a->a+1 etc.).
  DiffOp subst(Var v, const ParamPoly& value) const;

  std::string to_text() const;

 private:
  void put(const DxKey& k, const ParamPoly& p);
  friend DiffOp compose(const DiffOp&, const DiffOp&);
  std::map<DxKey, ParamPoly> terms_;
};

// Normal form of A applied after B: apply(compose(A,B), p) = A(B(p)).
DiffOp compose(const DiffOp& A, const DiffOp& B);
DiffOp bracket(const DiffOp& A, const DiffOp& B);      // AB - BA
DiffOp antibracket(const DiffOp& A, const DiffOp& B);  // AB + BA
ParamPoly apply(const DiffOp& A, const ParamPoly& p);

// Builtin catalogue. Names: L, L1, L2, L3, X1, X2, X3, N1, N3, M1, M3, J1,
// J3, G13, s1, s2, s3, s1s, s2s, s3s, H, K1, K2, K3, I.
DiffOp builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

// A single additive tweak to one coefficient of one derivative term,
// used by the mutation-control tests.
struct DiffOpMutation {
  std::string target;
  DxKey term;
  ParamPoly delta;
};
DiffOp builtin_mutated(const std::string& name, const DiffOpMutation& mut);

// Checks s_i^* = g_i^(shifted) o s_i o g_i on all monomials of total degree
// <= max_degree, carrying the non-polynomial weight factors as formal
// exponents in a, b, c.
bool conjugate_check(int i, int max_degree = 6);

}  // namespace trijac
