#include "trijac/exact.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <sstream>

namespace trijac {

namespace {
constexpr const char* kVarNames[kNumVars] = {"x", "y", "a", "b", "c", "n", "k", "l", "tau"};
}

const char* var_name(Var v) { return kVarNames[static_cast<size_t>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

ExactScalar::ExactScalar(long n, long d) {
  if (d == 0) throw DenominatorVanishes("zero denominator in rational constant");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DenominatorVanishes("division by zero");
  v_ /= o.v_;
  return *this;
}

ExactScalar ExactScalar::from_text(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return ExactScalar(mpq_class(mpz_class(s)));
    mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw DenominatorVanishes("zero denominator: " + s);
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("bad rational literal '" + s + "'", 0);
  }
}

std::string ExactScalar::to_text() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

ExactScalar rational_gcd(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  mpq_class q(g, l);
  q.canonicalize();
  return ExactScalar(q);
}

ParamPoly ParamPoly::from_terms(std::map<Mono, ExactScalar, GradedLexLess> acc) {
  ParamPoly p;
  p.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
  return p;
}

ExactScalar ParamPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().first.is_constant()) return terms_.back().second;
  return ExactScalar(0);
}

int ParamPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  // Merge two descending term lists.
  ParamPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  GradedLexLess less;
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.first == tb.first) {
      ExactScalar c = ta.second + tb.second;
      if (!c.is_zero()) r.terms_.push_back({ta.first, c});
      ++i, ++j;
    } else if (less(tb.first, ta.first)) {
      r.terms_.push_back(ta);
      ++i;
    } else {
      r.terms_.push_back(tb);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

namespace {
struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (auto v : m.e) {
      h ^= static_cast<uint16_t>(v);
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};
}  // namespace

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  std::unordered_map<Mono, ExactScalar, MonoHash> acc;
  acc.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, fresh] = acc.try_emplace(ma + mb, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  ParamPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  GradedLexLess less;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&less](const auto& t1, const auto& t2) { return less(t2.first, t1.first); });
  return r;
}

ParamPoly ParamPoly::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return ParamPoly();
  ParamPoly r = *this;
  for (auto& [m, cf] : r.terms_) cf *= c;
  return r;
}

ParamPoly ParamPoly::derive(Var v) const {
  std::map<Mono, ExactScalar, GradedLexLess> acc;
  for (const auto& [m, c] : terms_) {
    int16_t e = m[v];
    if (e == 0) continue;
    Mono d = m;
    d[v] = static_cast<int16_t>(e - 1);
    acc[d] = c * ExactScalar(e);
  }
  return from_terms(std::move(acc));
}

ParamPoly ParamPoly::subst(Var v, const ParamPoly& value) const {
  // Group terms by exponent of v, then Horner over descending exponents.
  std::map<int, ParamPoly> byexp;
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    int e = m[v];
    rest[v] = 0;
    ParamPoly t;
    t.terms_.push_back({rest, c});
    auto [it, fresh] = byexp.try_emplace(e, t);
    if (!fresh) it->second += t;
  }
  ParamPoly result;
  int prev_exp = -1;
  for (auto it = byexp.rbegin(); it != byexp.rend(); ++it) {
    if (prev_exp >= 0)
      for (int e = prev_exp; e > it->first; --e) result *= value;
    result += it->second;
    prev_exp = it->first;
  }
  if (prev_exp > 0)
    for (int e = prev_exp; e > 0; --e) result *= value;
  return result;
}

ExactScalar ParamPoly::eval(const std::map<Var, ExactScalar>& assignment) const {
  ExactScalar total(0);
  for (const auto& [m, c] : terms_) {
    ExactScalar t = c;
    for (size_t i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      auto it = assignment.find(static_cast<Var>(i));
      if (it == assignment.end())
        throw UnknownIndeterminate(std::string("unassigned indeterminate ") + kVarNames[i]);
      for (int p = 0; p < m.e[i]; ++p) t *= it->second;
    }
    total += t;
  }
  return total;
}

ParamPoly ParamPoly::pow(int e) const {
  ParamPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

ExactScalar ParamPoly::content() const {
  ExactScalar g(0);
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

namespace {

std::string mono_text(const Mono& m) {
  std::string s;
  for (size_t i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

void append_term(std::string& out, bool first, const ExactScalar& c, const std::string& mono,
                 bool compact = false) {
  ExactScalar mag = c.abs();
  std::string body;
  if (mono.empty())
    body = mag.to_text();
  else if (mag.is_one())
    body = mono;
  else
    body = mag.to_text() + "*" + mono;
  const char* minus = compact ? "-" : " - ";
  const char* plus = compact ? "+" : " + ";
  if (first)
    out += c.is_negative() ? "-" + body : body;
  else
    out += (c.is_negative() ? minus : plus) + body;
}

}  // namespace

std::string ParamPoly::to_text(bool compact) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    append_term(out, first, c, mono_text(m), compact);
    first = false;
  }
  return out;
}

std::string ParamPoly::to_text_grouped(Var v1, Var v2) const {
  if (terms_.empty()) return "0";
  // Split each monomial into its (v1,v2)-part and the rest.
  struct Key {
    int16_t e1, e2;
    bool operator<(const Key& o) const {
      int d = e1 + e2, od = o.e1 + o.e2;
      if (d != od) return d < od;
      if (e1 != o.e1) return e1 > o.e1;
      return e2 > o.e2;
    }
  };
  std::map<Key, ParamPoly> groups;
  for (const auto& [m, c] : terms_) {
    Key key{m[v1], m[v2]};
    Mono rest = m;
    rest[v1] = 0;
    rest[v2] = 0;
    ParamPoly t;
    t.terms_.push_back({rest, c});
    auto [it, fresh] = groups.try_emplace(key, t);
    if (!fresh) it->second += t;
  }
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : groups) {
    if (coeff.is_zero()) continue;
    Mono xy;
    xy[v1] = key.e1;
    xy[v2] = key.e2;
    std::string mono = mono_text(xy);
    if (coeff.is_constant()) {
      append_term(out, first, coeff.constant_value(), mono);
    } else {
      bool neg = coeff.leading().second.is_negative();
      ParamPoly body = neg ? -coeff : coeff;
      std::string text = "(" + body.to_text(true) + ")";
      if (!mono.empty()) text += "*" + mono;
      if (first)
        out += neg ? "-" + text : text;
      else
        out += neg ? " - " + text : " + " + text;
    }
    first = false;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Polynomial expression parser (shared syntax with the relation grammar,
// restricted to indeterminate names).

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  ParamPoly parse_expr() {
    ParamPoly v = parse_term();
    while (true) {
      if (eat('+'))
        v += parse_term();
      else if (eat('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  ParamPoly parse_term() {
    ParamPoly v = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        v *= parse_power();
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
        // implicit multiplication: "2x", "(a+1)(b+1)"
        v *= parse_power();
      } else {
        return v;
      }
    }
  }

  ParamPoly parse_power() {
    ParamPoly base = parse_atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw SyntaxError("expected exponent", pos);
      return base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }

  ParamPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ParamPoly v = parse_expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos);
      return v;
    }
    if (c == '-') {
      ++pos;
      return -parse_power();
    }
    if (c == '+') {
      ++pos;
      return parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string digits = s.substr(start, pos - start);
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        size_t save = pos;
        ++pos;
        skip_ws();
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (dstart == pos) {
          pos = save;  // not a rational literal; leave '/' for caller
          return ParamPoly(ExactScalar::from_text(digits));
        }
        return ParamPoly(
            ExactScalar::from_text(digits + "/" + s.substr(dstart, pos - dstart)));
      }
      return ParamPoly(ExactScalar::from_text(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
      std::string name = s.substr(start, pos - start);
      auto v = var_from_name(name);
      if (!v) throw UnknownIndeterminate("unknown indeterminate '" + name + "'");
      return ParamPoly::variable(*v);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

ParamPoly parse_poly_expr(const std::string& text) {
  PolyParser p(text);
  ParamPoly v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
  return v;
}

ParamPoly ParamPoly::parse(const std::string& text) { return parse_poly_expr(text); }

// ---------------------------------------------------------------------------
// ParamFrac

ParamFrac::ParamFrac(ParamPoly n, ParamPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DenominatorVanishes("zero denominator polynomial");
  normalize();
}

void ParamFrac::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  // Cheap content strip; no polynomial gcd.
  ExactScalar g = rational_gcd(num_.content(), den_.content());
  if (den_.leading().second.is_negative()) g = -g;
  if (!g.is_one()) {
    ExactScalar inv = ExactScalar(1) / g;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ParamFrac ParamFrac::operator-() const {
  ParamFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamFrac operator+(const ParamFrac& a, const ParamFrac& b) {
  if (a.den_ == b.den_) return ParamFrac(a.num_ + b.num_, a.den_);
  return ParamFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamFrac operator-(const ParamFrac& a, const ParamFrac& b) { return a + (-b); }

ParamFrac operator*(const ParamFrac& a, const ParamFrac& b) {
  return ParamFrac(a.num_ * b.num_, a.den_ * b.den_);
}

ParamFrac operator/(const ParamFrac& a, const ParamFrac& b) {
  if (b.num_.is_zero()) throw DenominatorVanishes("division by zero fraction");
  return ParamFrac(a.num_ * b.den_, a.den_ * b.num_);
}

ParamFrac ParamFrac::subst(Var v, const ParamPoly& value) const {
  return ParamFrac(num_.subst(v, value), den_.subst(v, value));
}

ExactScalar ParamFrac::eval(const std::map<Var, ExactScalar>& assignment) const {
  ExactScalar d = den_.eval(assignment);
  if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at sample point");
  return num_.eval(assignment) / d;
}

std::string ParamFrac::to_text() const {
  if (den_ == ParamPoly(1)) return num_.to_text();
  return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

bool frac_eq(const ParamFrac& f, const ParamFrac& g) {
  return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

ParamPoly pochhammer(const ParamPoly& q, int m) {
  ParamPoly r(1);
  for (int i = 0; i < m; ++i) r *= q + ParamPoly(i);
  return r;
}

std::optional<ParamPoly> try_divide_exact(const ParamPoly& p, const ParamPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return ParamPoly(0);
  std::map<Mono, ExactScalar, GradedLexLess> remainder;
  for (const auto& [m, c] : p.terms()) remainder.emplace(m, c);
  std::map<Mono, ExactScalar, GradedLexLess> quotient;
  const Mono qm = q.leading().first;
  const ExactScalar qc = q.leading().second;
  while (!remainder.empty()) {
    auto lead = std::prev(remainder.end());
    Mono t;
    for (size_t i = 0; i < kNumVars; ++i) {
      if (lead->first.e[i] < qm.e[i]) return std::nullopt;
      t.e[i] = static_cast<int16_t>(lead->first.e[i] - qm.e[i]);
    }
    ExactScalar coeff = lead->second / qc;
    quotient[t] = coeff;
    for (const auto& [m, c] : q.terms()) {
      Mono target = t + m;
      auto [it, fresh] = remainder.try_emplace(target, ExactScalar(0));
      it->second -= coeff * c;
      if (it->second.is_zero()) remainder.erase(it);
    }
  }
  return ParamPoly::from_terms(std::move(quotient));
}

}  // namespace trijac
