// Exact arithmetic tower: big rationals, sparse multivariate polynomials
// over a fixed set of named indeterminates, and rational-function pairs.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trijac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownIndeterminate : Error {
  using Error::Error;
};
struct DenominatorVanishes : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

// Global indeterminate order: x < y < a < b < c < n < k < l < tau.
enum class Var : uint8_t { x = 0, y, a, b, c, n, k, ell, tau };
inline constexpr size_t kNumVars = 9;
const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

// Reduced fraction with positive denominator; canonical zero is 0/1.
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(long n) : v_(n) {}
  ExactScalar(long n, long d);
  explicit ExactScalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static ExactScalar from_text(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  int sign() const { return sgn(v_); }

  ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }
  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
  ExactScalar& operator/=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }

  ExactScalar abs() const { return ExactScalar(mpq_class(::abs(v_))); }
  std::string to_text() const;

 private:
  mpq_class v_;
};

// gcd on rationals: gcd(a/b, c/d) = gcd(a,c) / lcm(b,d).
ExactScalar rational_gcd(const ExactScalar& a, const ExactScalar& b);

// Exponent vector over the full indeterminate space.
struct Mono {
  std::array<int16_t, kNumVars> e{};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_constant() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  int16_t operator[](Var v) const { return e[static_cast<size_t>(v)]; }
  int16_t& operator[](Var v) { return e[static_cast<size_t>(v)]; }

  static Mono unit(Var v, int16_t p = 1) {
    Mono m;
    m[v] = p;
    return m;
  }
  friend Mono operator+(Mono a, const Mono& b) {
    for (size_t i = 0; i < kNumVars; ++i) a.e[i] = static_cast<int16_t>(a.e[i] + b.e[i]);
    return a;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Graded-lexicographic order, used for canonical term order everywhere.
struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// Sparse polynomial; terms held sorted graded-lex descending, no zero
// coefficients stored. Immutable in spirit: all operations return new values.
class ParamPoly {
 public:
  using Term = std::pair<Mono, ExactScalar>;

  ParamPoly() = default;
  ParamPoly(long c) { if (c) terms_.push_back({Mono{}, ExactScalar(c)}); }
  ParamPoly(const ExactScalar& c) {
    if (!c.is_zero()) terms_.push_back({Mono{}, c});
  }
  static ParamPoly variable(Var v) {
    ParamPoly p;
    p.terms_.push_back({Mono::unit(v), ExactScalar(1)});
    return p;
  }
  static ParamPoly from_terms(std::map<Mono, ExactScalar, GradedLexLess> acc);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
  }
  // Constant term (zero if absent).
  ExactScalar constant_value() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? 0 : terms_.front().first.total_degree(); }
  int degree_in(Var v) const;
  bool uses(Var v) const { return degree_in(v) > 0; }

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly scaled(const ExactScalar& c) const;
  ParamPoly derive(Var v) const;
  // Substitute a polynomial for one indeterminate.
  ParamPoly subst(Var v, const ParamPoly& value) const;
  // Full evaluation; every used indeterminate must be assigned.
  ExactScalar eval(const std::map<Var, ExactScalar>& assignment) const;
  ParamPoly pow(int e) const;

  // gcd of all coefficients (0 for the zero polynomial).
  ExactScalar content() const;

  std::string to_text(bool compact = false) const;
  // Grouped bivariate form: abc-coefficients on x,y-monomials, e.g.
  // "(b+1) - (b+1)*x - (b+c+2)*y".
  std::string to_text_grouped(Var v1, Var v2) const;
  static ParamPoly parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

inline ParamPoly operator*(long c, const ParamPoly& p) { return p.scaled(ExactScalar(c)); }

// Quotient of polynomials. Not reduced by polynomial gcd; equality is by
// cross-multiplication. Denominator kept nonzero with positive leading sign
// and coprime integer content against the numerator.
class ParamFrac {
 public:
  ParamFrac() : num_(0), den_(1) {}
  ParamFrac(long c) : num_(c), den_(1) {}
  ParamFrac(const ExactScalar& c) : num_(c), den_(1) {}
  ParamFrac(ParamPoly n) : num_(std::move(n)), den_(1) {}
  ParamFrac(ParamPoly n, ParamPoly d);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  ParamFrac operator-() const;
  friend ParamFrac operator+(const ParamFrac& a, const ParamFrac& b);
  friend ParamFrac operator-(const ParamFrac& a, const ParamFrac& b);
  friend ParamFrac operator*(const ParamFrac& a, const ParamFrac& b);
  friend ParamFrac operator/(const ParamFrac& a, const ParamFrac& b);
  ParamFrac& operator+=(const ParamFrac& o) { return *this = *this + o; }
  ParamFrac& operator-=(const ParamFrac& o) { return *this = *this - o; }
  ParamFrac& operator*=(const ParamFrac& o) { return *this = *this * o; }

  ParamFrac subst(Var v, const ParamPoly& value) const;
  ExactScalar eval(const std::map<Var, ExactScalar>& assignment) const;

  std::string to_text() const;

 private:
  void normalize();
  ParamPoly num_, den_;
};

// Cross-multiplication equality: f == g iff f.num*g.den - g.num*f.den == 0.
bool frac_eq(const ParamFrac& f, const ParamFrac& g);

// Rising factorial (q)_m = q (q+1) ... (q+m-1) for a polynomial base.
ParamPoly pochhammer(const ParamPoly& q, int m);

// Quotient p/q when the division is exact, nothing otherwise.
std::optional<ParamPoly> try_divide_exact(const ParamPoly& p, const ParamPoly& q);

// Parses the polynomial expression grammar: names, rationals, + - * ^ ( ).
ParamPoly parse_poly_expr(const std::string& text);

namespace sym {
inline ParamPoly x() { return ParamPoly::variable(Var::x); }
inline ParamPoly y() { return ParamPoly::variable(Var::y); }
inline ParamPoly a() { return ParamPoly::variable(Var::a); }
inline ParamPoly b() { return ParamPoly::variable(Var::b); }
inline ParamPoly c() { return ParamPoly::variable(Var::c); }
inline ParamPoly n() { return ParamPoly::variable(Var::n); }
inline ParamPoly k() { return ParamPoly::variable(Var::k); }
}  // namespace sym

}  // namespace trijac
