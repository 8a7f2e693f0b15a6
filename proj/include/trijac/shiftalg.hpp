// Difference operators on the (n,k) degree lattice with rational-function
// coefficients: composition with argument shifting, brackets, and the hatted
// generator catalogue acting on the bivariate Jacobi family.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "trijac/exact.hpp"
#include "trijac/weyl.hpp"

namespace trijac {

struct Shift {
  int dn = 0, dk = 0;
  bool operator<(const Shift& o) const { return std::tie(dn, dk) < std::tie(o.dn, o.dk); }
  bool operator==(const Shift& o) const { return dn == o.dn && dk == o.dk; }
};

// Finite sum of c_delta(n,k) E^delta with E^delta f_{n,k} = f_{(n,k)+delta}.
// Composition matches action on basis vectors: dcompose(A,B) applied to
// |n,k> equals A applied to B|n,k>, so the coefficient of E^(delta+eps) picks
// up A's coefficient evaluated at (n,k)+eps times B's at (n,k).
class DegreeOp {
 public:
  DegreeOp() = default;

  static DegreeOp identity() { return diagonal(ParamFrac(1)); }
  static DegreeOp diagonal(const ParamFrac& f);
  static DegreeOp shift_unit(int dn, int dk);

  DegreeOp& with(int dn, int dk, const ParamFrac& coeff);

  const std::map<Shift, ParamFrac>& terms() const { return terms_; }
  bool is_zero_form() const { return terms_.empty(); }

  friend DegreeOp operator+(const DegreeOp& a, const DegreeOp& b);
  friend DegreeOp operator-(const DegreeOp& a, const DegreeOp& b);
  DegreeOp operator-() const;
  DegreeOp scaled(const ParamFrac& f) const;
  // Coefficients with the lattice arguments displaced: c(n+dn, k+dk).
  DegreeOp arg_shifted(int dn, int dk) const;

  std::string to_table_text() const;

 private:
  void put(const Shift& s, const ParamFrac& f);
  friend DegreeOp dcompose(const DegreeOp&, const DegreeOp&);
  std::map<Shift, ParamFrac> terms_;
};

DegreeOp dcompose(const DegreeOp& A, const DegreeOp& B);
DegreeOp dbracket(const DegreeOp& A, const DegreeOp& B);
DegreeOp dantibracket(const DegreeOp& A, const DegreeOp& B);

// Coefficientwise cross-multiplication equality.
bool deq(const DegreeOp& A, const DegreeOp& B);
bool dis_zero(const DegreeOp& A);

// Hatted catalogue. Names: Lh, L1h, L3h, X1h, X3h, N1h, N3h, M1h, M3h,
// Sp, Sm, Tp, Tm, I.
DegreeOp dbuiltin(const std::string& name);
const std::vector<std::string>& dbuiltin_names();

struct DegreeOpMutation {
  std::string target;
  Shift term;
  ParamFrac delta;
};
DegreeOp dbuiltin_mutated(const std::string& name, const DegreeOpMutation& mut);

}  // namespace trijac
