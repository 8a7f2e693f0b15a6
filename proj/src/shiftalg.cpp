#include "trijac/shiftalg.hpp"

#include <sstream>

namespace trijac {

namespace {

// Every catalogue coefficient denominator is a product of members of the two
// linear families below (up to argument shifts and integer content). Summing
// coefficients during composition cancels against them exactly, which keeps
// composed operators small without a general polynomial gcd.
const std::vector<ParamPoly>& lattice_factor_pool() {
  static const std::vector<ParamPoly> pool = [] {
    std::vector<ParamPoly> v;
    ParamPoly nn = ParamPoly::variable(Var::n), kk = ParamPoly::variable(Var::k);
    ParamPoly abc = ParamPoly::variable(Var::a) + ParamPoly::variable(Var::b) +
                    ParamPoly::variable(Var::c);
    ParamPoly bc = ParamPoly::variable(Var::b) + ParamPoly::variable(Var::c);
    for (int j = -12; j <= 18; ++j) {
      v.push_back(2 * nn + abc + ParamPoly(j));
      v.push_back(2 * kk + bc + ParamPoly(j));
    }
    return v;
  }();
  return pool;
}

ParamFrac reduce_lattice_frac(const ParamFrac& f) {
  if (f.is_zero() || f.den().is_constant()) return f;
  ParamPoly num = f.num();
  ParamPoly den = f.den();
  ParamPoly kept(1);
  for (const auto& cand : lattice_factor_pool()) {
    while (!den.is_constant()) {
      auto q = try_divide_exact(den, cand);
      if (!q) break;
      den = std::move(*q);
      if (auto qn = try_divide_exact(num, cand))
        num = std::move(*qn);
      else
        kept *= cand;
    }
    if (den.is_constant()) break;
  }
  return ParamFrac(std::move(num), kept * den);
}

}  // namespace

DegreeOp DegreeOp::diagonal(const ParamFrac& f) {
  DegreeOp d;
  if (!f.is_zero()) d.terms_[{0, 0}] = f;
  return d;
}

DegreeOp DegreeOp::shift_unit(int dn, int dk) {
  DegreeOp d;
  d.terms_[{dn, dk}] = ParamFrac(1);
  return d;
}

DegreeOp& DegreeOp::with(int dn, int dk, const ParamFrac& coeff) {
  put({dn, dk}, coeff);
  return *this;
}

void DegreeOp::put(const Shift& s, const ParamFrac& f) {
  if (f.is_zero())
    terms_.erase(s);
  else
    terms_[s] = f;
}

DegreeOp operator+(const DegreeOp& a, const DegreeOp& b) {
  DegreeOp r = a;
  for (const auto& [s, f] : b.terms_) {
    auto it = r.terms_.find(s);
    if (it == r.terms_.end()) {
      r.terms_[s] = f;
    } else {
      it->second = reduce_lattice_frac(it->second + f);
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

DegreeOp operator-(const DegreeOp& a, const DegreeOp& b) { return a + (-b); }

DegreeOp DegreeOp::operator-() const {
  DegreeOp r = *this;
  for (auto& [s, f] : r.terms_) f = -f;
  return r;
}

DegreeOp DegreeOp::scaled(const ParamFrac& c) const {
  DegreeOp r;
  if (c.is_zero()) return r;
  for (const auto& [s, f] : terms_) r.put(s, f * c);
  return r;
}

DegreeOp DegreeOp::arg_shifted(int dn, int dk) const {
  ParamPoly nn = sym::n() + ParamPoly(dn);
  ParamPoly kk = sym::k() + ParamPoly(dk);
  DegreeOp r;
  for (const auto& [s, f] : terms_) r.put(s, f.subst(Var::n, nn).subst(Var::k, kk));
  return r;
}

DegreeOp dcompose(const DegreeOp& A, const DegreeOp& B) {
  DegreeOp r;
  for (const auto& [eps, fb] : B.terms_) {
    DegreeOp ashift = A.arg_shifted(eps.dn, eps.dk);
    for (const auto& [delta, fa] : ashift.terms_) {
      Shift key{delta.dn + eps.dn, delta.dk + eps.dk};
      ParamFrac prod = fa * fb;
      auto it = r.terms_.find(key);
      if (it == r.terms_.end()) {
        r.terms_[key] = std::move(prod);
      } else {
        it->second = reduce_lattice_frac(it->second + prod);
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

DegreeOp dbracket(const DegreeOp& A, const DegreeOp& B) {
  return dcompose(A, B) - dcompose(B, A);
}

DegreeOp dantibracket(const DegreeOp& A, const DegreeOp& B) {
  return dcompose(A, B) + dcompose(B, A);
}

bool dis_zero(const DegreeOp& A) {
  for (const auto& [s, f] : A.terms())
    if (!f.is_zero()) return false;
  return true;
}

bool deq(const DegreeOp& A, const DegreeOp& B) {
  auto ia = A.terms().begin();
  auto ib = B.terms().begin();
  while (ia != A.terms().end() || ib != B.terms().end()) {
    if (ia != A.terms().end() && ib != B.terms().end() && ia->first == ib->first) {
      if (!frac_eq(ia->second, ib->second)) return false;
      ++ia, ++ib;
    } else if (ib == B.terms().end() ||
               (ia != A.terms().end() && ia->first < ib->first)) {
      if (!ia->second.is_zero()) return false;
      ++ia;
    } else {
      if (!ib->second.is_zero()) return false;
      ++ib;
    }
  }
  return true;
}

std::string DegreeOp::to_table_text() const {
  if (terms_.empty()) return "0\n";
  auto shift_name = [](const Shift& s) {
    std::string t;
    if (s.dn == 1) t += "S+";
    if (s.dn == -1) t += "S-";
    if (s.dn > 1) t += "S+^" + std::to_string(s.dn);
    if (s.dn < -1) t += "S-^" + std::to_string(-s.dn);
    if (s.dk == 1) t += "T+";
    if (s.dk == -1) t += "T-";
    if (s.dk > 1) t += "T+^" + std::to_string(s.dk);
    if (s.dk < -1) t += "T-^" + std::to_string(-s.dk);
    if (t.empty()) t = "I";
    return t;
  };
  std::ostringstream os;
  for (const auto& [s, f] : terms_) os << shift_name(s) << " : " << f.to_text() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Hatted catalogue.

namespace {

using sym::a;
using sym::b;
using sym::c;
using sym::k;
using sym::n;

ParamFrac fr(const ParamPoly& num, const ParamPoly& den) { return ParamFrac(num, den); }

// abc-sum shorthand.
ParamPoly s_abc() { return a() + b() + c(); }

DegreeOp op_Lh() { return DegreeOp::diagonal(ParamFrac(-(n() * (n() + s_abc() + 2)))); }
DegreeOp op_L1h() { return DegreeOp::diagonal(ParamFrac(-(k() * (k() + b() + c() + 1)))); }

DegreeOp op_X1h() {
  ParamPoly s = s_abc();
  DegreeOp d;
  d.with(1, 0, fr(-((n() - k() + 1) * (n() + k() + s + 2)), (2 * n() + s + 2) * (2 * n() + s + 3)));
  d.with(0, 0, ParamFrac(ParamPoly(ExactScalar(1, 2))) *
                   (ParamFrac(1) - fr((2 * k() + a() + b() + c() + 1) * (2 * k() - a() + b() + c() + 1),
                                      (2 * n() + s + 1) * (2 * n() + s + 3))));
  d.with(-1, 0, fr(-((n() - k() + a()) * (n() + k() + b() + c() + 1)),
                   (2 * n() + s + 1) * (2 * n() + s + 2)));
  return d;
}

DegreeOp op_X3h() {
  ParamPoly s = s_abc();
  ParamPoly half(ExactScalar(1, 2));
  DegreeOp d = DegreeOp::identity().scaled(ParamFrac(half)) -
               op_X1h().scaled(ParamFrac(half));
  DegreeOp extra;
  extra.with(1, 1, fr((k() + 1) * (k() + b() + c() + 1) * (n() + k() + s + 2) * (n() + k() + s + 3),
                      (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2) *
                          (2 * n() + s + 3)));
  extra.with(0, 1, fr(2 * ((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a()) * (n() + k() + s + 2)),
                      (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2) * (2 * n() + s + 1) *
                          (2 * n() + s + 3)));
  extra.with(-1, 1, fr((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a() - 1) * (n() - k() + a()),
                       (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2) * (2 * n() + s + 1) *
                           (2 * n() + s + 2)));
  ParamPoly c2b2 = c() * c() - b() * b();
  extra.with(1, 0, fr(c2b2 * (n() - k() + 1) * (n() + k() + s + 2),
                      2 * ((2 * k() + b() + c()) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2) *
                           (2 * n() + s + 3))));
  {
    ParamFrac quarter(ParamPoly(ExactScalar(1, 4)));
    ParamFrac part1 = fr(ParamPoly(1), (2 * k() + b() + c()) * (2 * k() + b() + c() + 2));
    ParamFrac part2 = fr(ParamPoly(1), (2 * n() + s + 1) * (2 * n() + s + 3));
    ParamFrac part3 = fr(1 - a() * a(), (2 * k() + b() + c()) * (2 * k() + b() + c() + 2) *
                                            (2 * n() + s + 1) * (2 * n() + s + 3));
    extra.with(0, 0, quarter * ParamFrac(c2b2) * (part1 + part2 + part3));
  }
  extra.with(-1, 0, fr(c2b2 * (n() - k() + a()) * (n() + k() + b() + c() + 1),
                       2 * ((2 * k() + b() + c()) * (2 * k() + b() + c() + 2) * (2 * n() + s + 1) *
                            (2 * n() + s + 2))));
  extra.with(1, -1, fr((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() - k() + 2),
                       (2 * k() + b() + c()) * (2 * k() + b() + c() + 1) * (2 * n() + s + 2) *
                           (2 * n() + s + 3)));
  extra.with(0, -1, fr(2 * ((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() + k() + b() + c() + 1)),
                       (2 * k() + b() + c()) * (2 * k() + b() + c() + 1) * (2 * n() + s + 1) *
                           (2 * n() + s + 3)));
  extra.with(-1, -1, fr((k() + b()) * (k() + c()) * (n() + k() + b() + c()) * (n() + k() + b() + c() + 1),
                        (2 * k() + b() + c()) * (2 * k() + b() + c() + 1) * (2 * n() + s + 1) *
                            (2 * n() + s + 2)));
  return d + extra;
}

DegreeOp op_L3h() {
  ParamPoly s = s_abc();
  DegreeOp d;
  d.with(0, -1, fr((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() + k() + b() + c() + 1),
                   (2 * k() + b() + c()) * (2 * k() + b() + c() + 1)));
  d.with(0, 1, fr((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a()) * (n() + k() + s + 2),
                  (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2)));
  ParamFrac diag =
      ParamFrac((k() - n()) * (n() - k() + a() + b() + 1)) -
      fr(k() * (k() + c()) * (n() - k() + 1) * (n() - k() + a() + 1), 2 * k() + b() + c()) +
      fr((k() + 1) * (k() + c() + 1) * (n() - k()) * (n() - k() + a()), 2 * k() + b() + c() + 2);
  d.with(0, 0, diag);
  return d;
}

DegreeOp op_N1h() {
  ParamPoly s = s_abc();
  DegreeOp d;
  d.with(1, 0, fr((n() - k() + 1) * (n() + k() + s + 2), 2 * n() + s + 2));
  d.with(-1, 0, fr(-((n() - k() + a()) * (n() + k() + b() + c() + 1)), 2 * n() + s + 2));
  return d;
}

DegreeOp op_N3h() {
  ParamPoly s = s_abc();
  ParamPoly half(ExactScalar(1, 2));
  DegreeOp d = op_N1h().scaled(ParamFrac(-half));
  DegreeOp extra;
  extra.with(1, 1, fr(-((k() + 1) * (k() + b() + c() + 1) * (n() + k() + s + 2) * (n() + k() + s + 3)),
                      (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2)));
  ParamPoly bc2 = (b() - c()) * (b() + c());
  extra.with(1, 0, fr(bc2 * (n() - k() + 1) * (n() + k() + s + 2),
                      2 * ((2 * k() + b() + c()) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2))));
  extra.with(1, -1, fr(-((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() - k() + 2)),
                       (2 * k() + b() + c()) * (2 * k() + b() + c() + 1) * (2 * n() + s + 2)));
  extra.with(-1, 1, fr((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a() - 1) * (n() - k() + a()),
                       (2 * k() + b() + c() + 1) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2)));
  extra.with(-1, 0, fr(-(bc2 * (n() - k() + a()) * (n() + k() + b() + c() + 1)),
                       2 * ((2 * k() + b() + c()) * (2 * k() + b() + c() + 2) * (2 * n() + s + 2))));
  extra.with(-1, -1, fr((k() + b()) * (k() + c()) * (n() + k() + b() + c()) * (n() + k() + b() + c() + 1),
                        (2 * k() + b() + c()) * (2 * k() + b() + c() + 1) * (2 * n() + s + 2)));
  return d + extra;
}

DegreeOp op_M3h() {
  ParamPoly s = s_abc();
  DegreeOp d;
  d.with(1, 1, fr(-((k() + 1) * (k() + b() + c() + 1) * (n() + k() + s + 2) * (n() + k() + s + 3)),
                  (2 * k() + b() + c() + 1) * (2 * n() + s + 2) * (2 * n() + s + 3)));
  d.with(1, -1, fr((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() - k() + 2),
                   (2 * k() + b() + c() + 1) * (2 * n() + s + 2) * (2 * n() + s + 3)));
  d.with(0, 1, fr(-2 * ((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a()) * (n() + k() + s + 2)),
                  (2 * k() + b() + c() + 1) * (2 * n() + s + 1) * (2 * n() + s + 3)));
  d.with(0, -1, fr(2 * ((k() + b()) * (k() + c()) * (n() - k() + 1) * (n() + k() + b() + c() + 1)),
                   (2 * k() + b() + c() + 1) * (2 * n() + s + 1) * (2 * n() + s + 3)));
  d.with(-1, 1, fr(-((k() + 1) * (k() + b() + c() + 1) * (n() - k() + a() - 1) * (n() - k() + a())),
                   (2 * k() + b() + c() + 1) * (2 * n() + s + 1) * (2 * n() + s + 2)));
  d.with(-1, -1, fr((k() + b()) * (k() + c()) * (n() + k() + b() + c()) * (n() + k() + b() + c() + 1),
                    (2 * k() + b() + c() + 1) * (2 * n() + s + 1) * (2 * n() + s + 2)));
  return d;
}

}  // namespace

DegreeOp dbuiltin(const std::string& name) {
  if (name == "Lh") return op_Lh();
  if (name == "L1h") return op_L1h();
  if (name == "L3h") return op_L3h();
  if (name == "X1h") return op_X1h();
  if (name == "X3h") return op_X3h();
  if (name == "N1h") return op_N1h();
  if (name == "N3h") return op_N3h();
  if (name == "M1h") return DegreeOp{};
  if (name == "M3h") return op_M3h();
  if (name == "Sp") return DegreeOp::shift_unit(1, 0);
  if (name == "Sm") return DegreeOp::shift_unit(-1, 0);
  if (name == "Tp") return DegreeOp::shift_unit(0, 1);
  if (name == "Tm") return DegreeOp::shift_unit(0, -1);
  if (name == "I") return DegreeOp::identity();
  throw UnknownGenerator("unknown degree generator '" + name + "'");
}

const std::vector<std::string>& dbuiltin_names() {
  static const std::vector<std::string> names = {"Lh", "L1h", "L3h", "X1h", "X3h", "N1h",
                                                 "N3h", "M1h", "M3h", "Sp",  "Sm",  "Tp",
                                                 "Tm",  "I"};
  return names;
}

DegreeOp dbuiltin_mutated(const std::string& name, const DegreeOpMutation& mut) {
  DegreeOp op = dbuiltin(name);
  if (name != mut.target) return op;
  DegreeOp bump;
  bump.with(mut.term.dn, mut.term.dk, mut.delta);
  return op + bump;
}

}  // namespace trijac
