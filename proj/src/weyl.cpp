#include "trijac/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace trijac {

namespace {
long binom(int n, int r) {
  long v = 1;
  for (int t = 0; t < r; ++t) v = v * (n - t) / (t + 1);
  return v;
}
}  // namespace

DiffOp DiffOp::scalar(const ParamPoly& p) {
  DiffOp d;
  if (!p.is_zero()) d.terms_[{0, 0}] = p;
  return d;
}

DiffOp& DiffOp::with(int i, int j, const ParamPoly& coeff) {
  put({i, j}, coeff);
  return *this;
}

void DiffOp::put(const DxKey& k, const ParamPoly& p) {
  if (p.is_zero())
    terms_.erase(k);
  else
    terms_[k] = p;
}

int DiffOp::order() const {
  int o = 0;
  for (const auto& [k, p] : terms_) o = std::max(o, k.i + k.j);
  return o;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (const auto& [k, p] : b.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end())
      r.terms_[k] = p;
    else {
      it->second += p;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [k, p] : r.terms_) p = -p;
  return r;
}

DiffOp DiffOp::scaled(const ParamPoly& s) const {
  DiffOp r;
  if (s.is_zero()) return r;
  for (const auto& [k, p] : terms_) r.terms_[k] = p * s;
  return r;
}

DiffOp DiffOp::subst(Var v, const ParamPoly& value) const {
  DiffOp r;
  for (const auto& [k, p] : terms_) r.put(k, p.subst(v, value));
  return r;
}

DiffOp compose(const DiffOp& A, const DiffOp& B) {
  // dx^i dy^j (q f) = sum_{r<=i, s<=j} C(i,r) C(j,s) (dx^r dy^s q) dx^(i-r) dy^(j-s) f
  DiffOp r;
  for (const auto& [ka, pa] : A.terms_) {
    for (const auto& [kb, pb] : B.terms_) {
      ParamPoly dxr = pb;
      for (int rr = 0; rr <= ka.i; ++rr) {
        if (dxr.is_zero()) break;
        ParamPoly dys = dxr;
        for (int ss = 0; ss <= ka.j; ++ss) {
          if (dys.is_zero()) break;
          ParamPoly c = dys.scaled(ExactScalar(binom(ka.i, rr) * binom(ka.j, ss)));
          DxKey key{ka.i - rr + kb.i, ka.j - ss + kb.j};
          auto it = r.terms_.find(key);
          if (it == r.terms_.end())
            r.terms_[key] = pa * c;
          else {
            it->second += pa * c;
            if (it->second.is_zero()) r.terms_.erase(it);
          }
          dys = dys.derive(Var::y);
        }
        dxr = dxr.derive(Var::x);
      }
    }
  }
  return r;
}

DiffOp bracket(const DiffOp& A, const DiffOp& B) { return compose(A, B) - compose(B, A); }
DiffOp antibracket(const DiffOp& A, const DiffOp& B) { return compose(A, B) + compose(B, A); }

ParamPoly apply(const DiffOp& A, const ParamPoly& p) {
  ParamPoly out;
  for (const auto& [k, coeff] : A.terms()) {
    ParamPoly d = p;
    for (int t = 0; t < k.i && !d.is_zero(); ++t) d = d.derive(Var::x);
    for (int t = 0; t < k.j && !d.is_zero(); ++t) d = d.derive(Var::y);
    out += coeff * d;
  }
  return out;
}

std::string DiffOp::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_text() << ")";
    if (k.i) os << "*dx^" << k.i;
    if (k.j) os << "*dy^" << k.j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Builtin catalogue.

namespace {

using sym::a;
using sym::b;
using sym::c;
using sym::x;
using sym::y;

DiffOp op_L() {
  return DiffOp{}
      .with(2, 0, x() * (1 - x()))
      .with(0, 2, y() * (1 - y()))
      .with(1, 1, -2 * x() * y())
      .with(1, 0, a() + 1 - (a() + b() + c() + 3) * x())
      .with(0, 1, b() + 1 - (a() + b() + c() + 3) * y());
}

DiffOp op_L1() {
  return DiffOp{}
      .with(0, 1, (b() + 1) * (1 - x()) - (b() + c() + 2) * y())
      .with(0, 2, y() * (1 - x() - y()));
}

DiffOp op_L2() {
  return DiffOp{}
      .with(1, 0, (a() + 1) * (1 - y()) - (a() + c() + 2) * x())
      .with(2, 0, x() * (1 - x() - y()));
}

DiffOp op_L3() {
  ParamPoly w = (a() + 1) * y() - (b() + 1) * x();
  return DiffOp{}
      .with(1, 0, w)
      .with(0, 1, -w)
      .with(2, 0, x() * y())
      .with(0, 2, x() * y())
      .with(1, 1, -2 * x() * y());
}

DiffOp op_N1() {
  return DiffOp{}
      .with(1, 0, 2 * x() * (1 - x()))
      .with(0, 1, -2 * x() * y())
      .with(0, 0, a() + 1 - (a() + b() + c() + 3) * x());
}

DiffOp op_N3() {
  ParamPoly u = x() + y() - 1;
  return DiffOp{}
      .with(1, 0, 2 * u * x())
      .with(0, 1, 2 * u * y())
      .with(0, 0, c() + 1 + (a() + b() + c() + 3) * u);
}

DiffOp op_M3() {
  ParamPoly u = x() + y() - 1;
  return DiffOp{}
      .with(0, 1, 2 * y() * u)
      .with(0, 0, (b() + 1) * u + (c() + 1) * y());
}

DiffOp op_J1() {
  return DiffOp{}
      .with(1, 0, 2 * x() * y())
      .with(0, 1, -2 * x() * y())
      .with(0, 0, (a() + 1) * y() - (b() + 1) * x());
}

// First-order ladder operators and their conjugate partners.
DiffOp op_s1() { return DiffOp{}.with(0, 1, x() + y() - 1).with(0, 0, c()); }
DiffOp op_s2() { return DiffOp{}.with(1, 0, x()).with(0, 0, a()); }
DiffOp op_s3() {
  return DiffOp{}.with(1, 0, -y()).with(0, 1, y()).with(0, 0, b());
}
DiffOp op_s1s() { return DiffOp{}.with(0, 1, -y()).with(0, 0, -b()); }
DiffOp op_s2s() { return DiffOp{}.with(1, 0, 1 - x() - y()).with(0, 0, -c()); }
DiffOp op_s3s() {
  return DiffOp{}.with(1, 0, -x()).with(0, 1, x()).with(0, 0, -a());
}

// Hypergeometric operator of the one-variable family on [0,1].
DiffOp op_H() {
  return DiffOp{}
      .with(2, 0, x() * (1 - x()))
      .with(1, 0, a() + 1 - (a() + b() + 2) * x());
}

DiffOp op_K3() {
  return DiffOp{}
      .with(1, 0, 2 * x() * (1 - x()))
      .with(0, 0, a() + 1 - (a() + b() + 2) * x());
}

}  // namespace

DiffOp builtin(const std::string& name) {
  if (name == "L") return op_L();
  if (name == "L1") return op_L1();
  if (name == "L2") return op_L2();
  if (name == "L3") return op_L3();
  if (name == "X1") return DiffOp::scalar(x());
  if (name == "X2") return DiffOp::scalar(y());
  if (name == "X3") return DiffOp::scalar(1 - x() - y());
  if (name == "N1") return op_N1();
  if (name == "N3") return op_N3();
  if (name == "M1") return DiffOp{};
  if (name == "M3") return op_M3();
  if (name == "J1") return op_J1();
  if (name == "J3") return DiffOp{};
  if (name == "G13") return bracket(op_L1(), op_L3());
  if (name == "s1") return op_s1();
  if (name == "s2") return op_s2();
  if (name == "s3") return op_s3();
  if (name == "s1s") return op_s1s();
  if (name == "s2s") return op_s2s();
  if (name == "s3s") return op_s3s();
  if (name == "H") return op_H();
  if (name == "K1") return op_H();
  if (name == "K2") return DiffOp::scalar(x());
  if (name == "K3") return op_K3();
  if (name == "I") return DiffOp::identity();
  throw UnknownGenerator("unknown generator '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "L",  "L1", "L2", "L3", "X1", "X2",  "X3",  "N1",  "N3", "M1", "M3", "J1", "J3",
      "G13", "s1", "s2", "s3", "s1s", "s2s", "s3s", "H",  "K1", "K2", "K3", "I"};
  return names;
}

DiffOp builtin_mutated(const std::string& name, const DiffOpMutation& mut) {
  DiffOp op = builtin(name);
  if (name != mut.target) return op;
  DiffOp bump;
  bump.with(mut.term.i, mut.term.j, mut.delta);
  return op + bump;
}

// ---------------------------------------------------------------------------
// Weight-conjugation check.
//
// The conjugating factors are products of x^a, y^b, (1-x-y)^c powers; they
// are carried formally as affine exponents off + ea*a + eb*b + ec*c on the
// basis x^ex y^ey w^ew with w = 1-x-y. Derivatives and multiplications by
// x, y, w stay inside this module.

namespace {

struct AffExp {
  int off = 0, ea = 0, eb = 0, ec = 0;
  AffExp operator+(const AffExp& o) const { return {off + o.off, ea + o.ea, eb + o.eb, ec + o.ec}; }
  AffExp dec() const { return {off - 1, ea, eb, ec}; }
  bool symbolic() const { return ea || eb || ec; }
  ParamPoly poly() const {
    return ParamPoly(off) + ea * sym::a() + eb * sym::b() + ec * sym::c();
  }
  auto key() const { return std::tuple(off, ea, eb, ec); }
};

struct WKey {
  AffExp ex, ey, ew;
  bool operator<(const WKey& o) const {
    return std::tuple(ex.key(), ey.key(), ew.key()) <
           std::tuple(o.ex.key(), o.ey.key(), o.ew.key());
  }
};

// Finite sum of coeff(a,b,c) * x^ex y^ey w^ew terms.
using WSum = std::map<WKey, ParamPoly>;

void wadd(WSum& s, const WKey& k, const ParamPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = s.try_emplace(k, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) s.erase(it);
  }
}

WSum wshift(const WSum& s, const AffExp& dx, const AffExp& dy, const AffExp& dw) {
  WSum r;
  for (const auto& [k, p] : s) wadd(r, {k.ex + dx, k.ey + dy, k.ew + dw}, p);
  return r;
}

WSum wderive_x(const WSum& s) {
  WSum r;
  for (const auto& [k, p] : s) {
    wadd(r, {k.ex.dec(), k.ey, k.ew}, k.ex.poly() * p);
    wadd(r, {k.ex, k.ey, k.ew.dec()}, -(k.ew.poly() * p));
  }
  return r;
}

WSum wderive_y(const WSum& s) {
  WSum r;
  for (const auto& [k, p] : s) {
    wadd(r, {k.ex, k.ey.dec(), k.ew}, k.ey.poly() * p);
    wadd(r, {k.ex, k.ey, k.ew.dec()}, -(k.ew.poly() * p));
  }
  return r;
}

WSum wsub(WSum a, const WSum& b) {
  for (const auto& [k, p] : b) wadd(a, k, -p);
  return a;
}

WSum wscale(const WSum& s, const ParamPoly& c) {
  WSum r;
  for (const auto& [k, p] : s) wadd(r, k, p * c);
  return r;
}

// Apply a ladder operator: only x-, y-, w-multiplications, first derivatives
// and scalars occur in the s-family.
WSum wapply(const std::string& name, const WSum& f) {
  WSum dx = wderive_x(f), dy = wderive_y(f);
  if (name == "s1") {
    // (x+y-1) dy + c = -w dy + c
    WSum r = wscale(wshift(dy, {}, {}, {1}), ParamPoly(-1));
    for (const auto& [k, p] : wscale(f, sym::c())) wadd(r, k, p);
    return r;
  }
  if (name == "s2") {
    WSum r = wshift(dx, {1}, {}, {});
    for (const auto& [k, p] : wscale(f, sym::a())) wadd(r, k, p);
    return r;
  }
  if (name == "s3") {
    WSum r = wsub(wshift(dy, {}, {1}, {}), wshift(dx, {}, {1}, {}));
    for (const auto& [k, p] : wscale(f, sym::b())) wadd(r, k, p);
    return r;
  }
  throw UnknownGenerator("wapply: " + name);
}

// Embed a plain polynomial in x, y (with a,b,c coefficients).
WSum wembed(const ParamPoly& p) {
  WSum r;
  for (const auto& [m, coeff] : p.terms()) {
    Mono rest = m;
    AffExp ex{m[Var::x]}, ey{m[Var::y]};
    rest[Var::x] = 0;
    rest[Var::y] = 0;
    wadd(r, {ex, ey, AffExp{}}, ParamPoly::from_terms({{rest, coeff}}));
  }
  return r;
}

// A weighted sum vanishes iff it vanishes within every symbolic-exponent
// class after clearing integer offsets and expanding w = 1-x-y.
bool wis_zero(const WSum& s) {
  std::map<std::tuple<int, int, int, int, int, int, int, int, int>, std::vector<std::pair<WKey, ParamPoly>>>
      classes;
  for (const auto& [k, p] : s)
    classes[{k.ex.ea, k.ex.eb, k.ex.ec, k.ey.ea, k.ey.eb, k.ey.ec, k.ew.ea, k.ew.eb, k.ew.ec}]
        .push_back({k, p});
  ParamPoly w = 1 - sym::x() - sym::y();
  for (const auto& [sig, terms] : classes) {
    int mx = 0, my = 0, mw = 0;
    for (const auto& [k, p] : terms) {
      mx = std::min(mx, k.ex.off);
      my = std::min(my, k.ey.off);
      mw = std::min(mw, k.ew.off);
    }
    ParamPoly total;
    for (const auto& [k, p] : terms) {
      ParamPoly t = p;
      t *= sym::x().pow(k.ex.off - mx);
      t *= sym::y().pow(k.ey.off - my);
      t *= w.pow(k.ew.off - mw);
      total += t;
    }
    if (!total.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool conjugate_check(int i, int max_degree) {
  if (i < 1 || i > 3) throw Error("conjugate_check index must be 1, 2 or 3");
  // Weight exponents of g_i and of its parameter-shifted partner.
  AffExp gx, gy, gw, hx, hy, hw;
  std::string s_name, ss_name;
  switch (i) {
    case 1:  // g1 = y^b w^-c, partner y^(1-b) w^(c-1)
      gy = {0, 0, 1, 0};
      gw = {0, 0, 0, -1};
      hy = {1, 0, -1, 0};
      hw = {-1, 0, 0, 1};
      s_name = "s1";
      ss_name = "s1s";
      break;
    case 2:  // g2 = x^-a w^c, partner x^(a-1) w^(1-c)
      gx = {0, -1, 0, 0};
      gw = {0, 0, 0, 1};
      hx = {-1, 1, 0, 0};
      hw = {1, 0, 0, -1};
      s_name = "s2";
      ss_name = "s2s";
      break;
    case 3:  // g3 = x^a y^-b, partner x^(1-a) y^(b-1)
      gx = {0, 1, 0, 0};
      gy = {0, 0, -1, 0};
      hx = {1, -1, 0, 0};
      hy = {-1, 0, 1, 0};
      s_name = "s3";
      ss_name = "s3s";
      break;
  }
  DiffOp ss = builtin(ss_name);
  for (int dx = 0; dx <= max_degree; ++dx) {
    for (int dy = 0; dx + dy <= max_degree; ++dy) {
      ParamPoly mono = sym::x().pow(dx) * sym::y().pow(dy);
      WSum lhs = wshift(wapply(s_name, wshift(wembed(mono), gx, gy, gw)), hx, hy, hw);
      WSum rhs = wembed(apply(ss, mono));
      if (!wis_zero(wsub(lhs, rhs))) return false;
    }
  }
  return true;
}

}  // namespace trijac
