#include "trijac/relation_engine.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace trijac {

uint64_t SplitMix64::next() {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Generator tables.

namespace {

ParamPoly permute_abc(const ParamPoly& p, Var ia, Var ib, Var ic) {
  // Simultaneous relabeling via exponent transport.
  std::map<Mono, ExactScalar, GradedLexLess> acc;
  for (const auto& [m, c] : p.terms()) {
    Mono r = m;
    int16_t ea = m[Var::a], eb = m[Var::b], ec = m[Var::c];
    r[Var::a] = 0;
    r[Var::b] = 0;
    r[Var::c] = 0;
    r[ia] = static_cast<int16_t>(r[ia] + ea);
    r[ib] = static_cast<int16_t>(r[ib] + eb);
    r[ic] = static_cast<int16_t>(r[ic] + ec);
    auto [it, fresh] = acc.try_emplace(r, c);
    if (!fresh) it->second += c;
  }
  return ParamPoly::from_terms(std::move(acc));
}

DegreeOp derived_degree(const std::string& name) {
  if (name == "J1") return dbracket(dbuiltin("L3h"), dbuiltin("X1h"));
  if (name == "J3") return dbracket(dbuiltin("L3h"), dbuiltin("X3h"));
  if (name == "G13") return dbracket(dbuiltin("L1h"), dbuiltin("L3h"));
  throw UnknownGenerator("no degree realization for '" + name + "'");
}

std::string degree_alias(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"L", "Lh"},   {"L1", "L1h"}, {"L3", "L3h"}, {"X1", "X1h"}, {"X3", "X3h"},
      {"N1", "N1h"}, {"N3", "N3h"}, {"M1", "M1h"}, {"M3", "M3h"}, {"I", "I"}};
  auto it = alias.find(name);
  return it == alias.end() ? std::string() : it->second;
}

std::function<DegreeOp(const std::string&)> standard_degree_resolver() {
  return [](const std::string& name) -> DegreeOp {
    std::string h = degree_alias(name);
    if (!h.empty()) return dbuiltin(h);
    if (name == "J1" || name == "J3" || name == "G13") {
      // Derived generators are expensive to compose; computed on first use.
      static std::mutex mu;
      static std::map<std::string, DegreeOp> cache;
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(name);
      if (it == cache.end()) it = cache.emplace(name, derived_degree(name)).first;
      return it->second;
    }
    return dbuiltin(name);  // accept hatted names directly
  };
}

bool degree_name_known(const std::string& name) {
  if (!degree_alias(name).empty()) return true;
  if (name == "J1" || name == "J3" || name == "G13") return true;
  for (const auto& n : dbuiltin_names())
    if (n == name) return true;
  return false;
}

}  // namespace

GeneratorTables GeneratorTables::standard() {
  GeneratorTables t;
  t.variable = [](const std::string& name) { return builtin(name); };
  t.degree = standard_degree_resolver();
  return t;
}

GeneratorTables GeneratorTables::with_variable_mutation(const DiffOpMutation& mut) {
  GeneratorTables t = standard();
  t.variable = [mut](const std::string& name) { return builtin_mutated(name, mut); };
  return t;
}

GeneratorTables GeneratorTables::with_degree_mutation(const DegreeOpMutation& mut) {
  GeneratorTables t = standard();
  t.degree = [mut, base = standard_degree_resolver()](const std::string& name) -> DegreeOp {
    std::string h = degree_alias(name);
    std::string effective = h.empty() ? name : h;
    if (effective == mut.target) return dbuiltin_mutated(effective, mut);
    return base(name);
  };
  return t;
}

GeneratorTables GeneratorTables::with_degree_override(const std::string& name, DegreeOp op) {
  GeneratorTables t = standard();
  t.degree = [name, op, base = standard_degree_resolver()](const std::string& g) -> DegreeOp {
    std::string h = degree_alias(g);
    std::string effective = h.empty() ? g : h;
    if (effective == name || g == name) return op;
    return base(g);
  };
  return t;
}

GeneratorTables GeneratorTables::index_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
    throw Error("index_pair wants distinct indices from {1,2,3}");
  int m = 6 - i - j;  // the remaining index
  // Parameters attach to indices as alpha_1 = a, alpha_2 = b, alpha_3 = c;
  // the relation coefficients written for the pair (1,3) relabel as
  // a -> alpha_i, c -> alpha_j, b -> alpha_m.
  auto alpha = [](int idx) { return idx == 1 ? Var::a : (idx == 2 ? Var::b : Var::c); };
  Var ia = alpha(i), ic = alpha(j), ib = alpha(m);

  std::string Li = "L" + std::to_string(i), Lj = "L" + std::to_string(j);
  std::string Xi = "X" + std::to_string(i), Xj = "X" + std::to_string(j);
  GeneratorTables t;
  t.scalar = [ia, ib, ic](const ParamPoly& p) { return permute_abc(p, ia, ib, ic); };
  t.variable = [=](const std::string& name) -> DiffOp {
    if (name == "L" || name == "I") return builtin(name);
    if (name == "L1") return builtin(Li);
    if (name == "L3") return builtin(Lj);
    if (name == "X1") return builtin(Xi);
    if (name == "X3") return builtin(Xj);
    if (name == "N1") return bracket(builtin("L"), builtin(Xi));
    if (name == "N3") return bracket(builtin("L"), builtin(Xj));
    if (name == "M1") return bracket(builtin(Li), builtin(Xi));
    if (name == "M3") return bracket(builtin(Li), builtin(Xj));
    if (name == "J1") return bracket(builtin(Lj), builtin(Xi));
    if (name == "J3") return bracket(builtin(Lj), builtin(Xj));
    if (name == "G13") return bracket(builtin(Li), builtin(Lj));
    throw UnknownGenerator("index-pair table: '" + name + "'");
  };
  t.degree = [](const std::string& name) -> DegreeOp {
    throw UnknownGenerator("index-pair tables are variable-representation only: " + name);
  };
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

// Value in an operator algebra with central scalars.
template <typename Op>
struct Val {
  bool is_scalar = true;
  ParamPoly scalar;
  Op op;
};

template <typename Op, typename Ops>
Val<Op> eval_value(const Expr& e, const Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return {true, ops.xform(e.scalar), Op{}};
    case Expr::Kind::Gen:
      return {false, ParamPoly(), ops.resolve(e.name)};
    case Expr::Kind::Sum: {
      bool any_op = false;
      for (const auto& ch : e.args) any_op |= !(ch.kind == Expr::Kind::Scalar);
      Val<Op> acc;
      bool first = true;
      for (const auto& ch : e.args) {
        Val<Op> v = eval_value<Op>(ch, ops);
        if (first) {
          acc = std::move(v);
          first = false;
          continue;
        }
        if (acc.is_scalar && v.is_scalar) {
          acc.scalar += v.scalar;
        } else {
          if (acc.is_scalar) acc = {false, ParamPoly(), ops.add(ops.embed(acc.scalar), v.is_scalar ? ops.embed(v.scalar) : v.op)};
          else acc.op = ops.add(acc.op, v.is_scalar ? ops.embed(v.scalar) : v.op);
          acc.is_scalar = false;
        }
      }
      (void)any_op;
      return acc;
    }
    case Expr::Kind::Prod: {
      Val<Op> acc;
      acc.scalar = ParamPoly(1);
      bool first = true;
      for (const auto& ch : e.args) {
        Val<Op> v = eval_value<Op>(ch, ops);
        if (first) {
          acc = std::move(v);
          first = false;
          continue;
        }
        if (acc.is_scalar && v.is_scalar) {
          acc.scalar *= v.scalar;
        } else if (acc.is_scalar) {
          acc = {false, ParamPoly(), ops.scale(v.op, acc.scalar)};
        } else if (v.is_scalar) {
          acc = {false, ParamPoly(), ops.scale(acc.op, v.scalar)};
        } else {
          acc.op = ops.mul(acc.op, v.op);
        }
      }
      return acc;
    }
    case Expr::Kind::Bracket:
    case Expr::Kind::Brace: {
      Val<Op> l = eval_value<Op>(e.args[0], ops);
      Val<Op> r = eval_value<Op>(e.args[1], ops);
      Op lop = l.is_scalar ? ops.embed(l.scalar) : l.op;
      Op rop = r.is_scalar ? ops.embed(r.scalar) : r.op;
      Op ab = ops.mul(lop, rop), ba = ops.mul(rop, lop);
      return {false, ParamPoly(),
              e.kind == Expr::Kind::Bracket ? ops.sub(ab, ba) : ops.add(ab, ba)};
    }
  }
  throw Error("unreachable expression kind");
}

struct DiffOps {
  const GeneratorTables& t;
  ParamPoly xform(const ParamPoly& p) const { return t.scalar(p); }
  DiffOp resolve(const std::string& n) const { return t.variable(n); }
  DiffOp embed(const ParamPoly& p) const { return DiffOp::scalar(p); }
  DiffOp add(const DiffOp& a, const DiffOp& b) const { return a + b; }
  DiffOp sub(const DiffOp& a, const DiffOp& b) const { return a - b; }
  DiffOp mul(const DiffOp& a, const DiffOp& b) const { return compose(a, b); }
  DiffOp scale(const DiffOp& a, const ParamPoly& p) const { return a.scaled(p); }
};

struct DegOps {
  const GeneratorTables& t;
  ParamPoly xform(const ParamPoly& p) const { return t.scalar(p); }
  DegreeOp resolve(const std::string& n) const { return t.degree(n); }
  DegreeOp embed(const ParamPoly& p) const { return DegreeOp::diagonal(ParamFrac(p)); }
  DegreeOp add(const DegreeOp& a, const DegreeOp& b) const { return a + b; }
  DegreeOp sub(const DegreeOp& a, const DegreeOp& b) const { return a - b; }
  DegreeOp mul(const DegreeOp& a, const DegreeOp& b) const { return dcompose(a, b); }
  DegreeOp scale(const DegreeOp& a, const ParamPoly& p) const { return a.scaled(ParamFrac(p)); }
};

}  // namespace

DiffOp eval_variable(const Expr& e, const GeneratorTables& t) {
  DiffOps ops{t};
  auto v = eval_value<DiffOp>(e, ops);
  return v.is_scalar ? DiffOp::scalar(v.scalar) : v.op;
}

DegreeOp eval_degree(const Expr& e, const GeneratorTables& t) {
  DegOps ops{t};
  auto v = eval_value<DegreeOp>(e, ops);
  return v.is_scalar ? DegreeOp::diagonal(ParamFrac(v.scalar)) : v.op;
}

// ---------------------------------------------------------------------------
// Numeric evaluation on the degree lattice: coefficients evaluated at a
// rational sample point, with composition displacing the arguments.

namespace {

struct NumOp {
  std::map<Shift, ExactScalar> coeff;
};

struct NumContext {
  const GeneratorTables& tables;
  ExactScalar va, vb, vc, vn, vk;
  // Per-(expression node, lattice offset) memo.
  std::map<std::pair<const Expr*, Shift>, NumOp> memo;
  // Resolved generators (coefficients still symbolic).
  std::map<std::string, DegreeOp> resolved;

  const DegreeOp& gen(const std::string& name) {
    auto it = resolved.find(name);
    if (it == resolved.end()) it = resolved.emplace(name, tables.degree(name)).first;
    return it->second;
  }

  std::map<Var, ExactScalar> assignment(const Shift& at) const {
    return {{Var::a, va},
            {Var::b, vb},
            {Var::c, vc},
            {Var::n, vn + ExactScalar(at.dn)},
            {Var::k, vk + ExactScalar(at.dk)}};
  }

  NumOp eval(const Expr& e, const Shift& at) {
    auto key = std::make_pair(&e, at);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    NumOp out;
    switch (e.kind) {
      case Expr::Kind::Scalar: {
        ExactScalar v = tables.scalar(e.scalar).eval(assignment(at));
        if (!v.is_zero()) out.coeff[{0, 0}] = v;
        break;
      }
      case Expr::Kind::Gen: {
        const DegreeOp& op = gen(e.name);
        auto asg = assignment(at);
        for (const auto& [shift, frac] : op.terms()) {
          ExactScalar v = frac.eval(asg);
          if (!v.is_zero()) out.coeff[shift] = v;
        }
        break;
      }
      case Expr::Kind::Sum: {
        for (const auto& ch : e.args) {
          NumOp v = eval(ch, at);
          for (const auto& [s, q] : v.coeff) {
            auto [it, fresh] = out.coeff.try_emplace(s, q);
            if (!fresh) {
              it->second += q;
              if (it->second.is_zero()) out.coeff.erase(it);
            }
          }
        }
        break;
      }
      case Expr::Kind::Prod: {
        bool first = true;
        for (auto it = e.args.rbegin(); it != e.args.rend(); ++it) {
          if (first) {
            out = eval(*it, at);
            first = false;
            continue;
          }
          out = compose_at(*it, out, at);
        }
        break;
      }
      case Expr::Kind::Bracket:
      case Expr::Kind::Brace: {
        NumOp r = eval(e.args[1], at);
        NumOp l = eval(e.args[0], at);
        NumOp ab = compose_at(e.args[0], r, at);
        NumOp ba = compose_at(e.args[1], l, at);
        out = ab;
        for (const auto& [s, q] : ba.coeff) {
          ExactScalar add = e.kind == Expr::Kind::Brace ? q : -q;
          auto [it, fresh] = out.coeff.try_emplace(s, add);
          if (!fresh) {
            it->second += add;
            if (it->second.is_zero()) out.coeff.erase(it);
          }
        }
        break;
      }
    }
    memo[key] = out;
    return out;
  }

  // A evaluated after the already-evaluated action `rhs` at base `at`.
  NumOp compose_at(const Expr& A, const NumOp& rhs, const Shift& at) {
    NumOp out;
    for (const auto& [eps, q] : rhs.coeff) {
      Shift moved{at.dn + eps.dn, at.dk + eps.dk};
      NumOp a = eval(A, moved);
      for (const auto& [delta, p] : a.coeff) {
        Shift key{delta.dn + eps.dn, delta.dk + eps.dk};
        ExactScalar v = p * q;
        auto [it, fresh] = out.coeff.try_emplace(key, v);
        if (!fresh) {
          it->second += v;
          if (it->second.is_zero()) out.coeff.erase(it);
        }
      }
    }
    return out;
  }
};

// Degree bounds mirror the numeric evaluation: per-shift (num, den) degree
// pairs folded with the same composition rule the sampler uses, so the
// resulting bound certifies the sampled line restriction.
struct Bound {
  long num = 0, den = 0;
};
using BoundOp = std::map<Shift, Bound>;

Bound badd(const Bound& x, const Bound& y) {
  return {std::max(x.num + y.den, y.num + x.den), x.den + y.den};
}
Bound bmul(const Bound& x, const Bound& y) { return {x.num + y.num, x.den + y.den}; }

void bound_accumulate(BoundOp& acc, const Shift& s, const Bound& b) {
  auto [it, fresh] = acc.try_emplace(s, b);
  if (!fresh) it->second = badd(it->second, b);
}

BoundOp bound_convolve(const BoundOp& l, const BoundOp& r) {
  BoundOp out;
  for (const auto& [ds, db] : l)
    for (const auto& [es, eb] : r)
      bound_accumulate(out, {ds.dn + es.dn, ds.dk + es.dk}, bmul(db, eb));
  return out;
}

BoundOp bound_of(const Expr& e, const GeneratorTables& t) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return {{Shift{0, 0}, {static_cast<long>(e.scalar.total_degree()), 0}}};
    case Expr::Kind::Gen: {
      DegreeOp op = t.degree(e.name);
      BoundOp b;
      for (const auto& [s, f] : op.terms())
        b[s] = {static_cast<long>(f.num().total_degree()),
                static_cast<long>(f.den().total_degree())};
      if (b.empty()) b[{0, 0}] = {0, 0};
      return b;
    }
    case Expr::Kind::Sum: {
      BoundOp acc = bound_of(e.args[0], t);
      for (size_t i = 1; i < e.args.size(); ++i)
        for (const auto& [s, b] : bound_of(e.args[i], t)) bound_accumulate(acc, s, b);
      return acc;
    }
    case Expr::Kind::Prod: {
      BoundOp acc = bound_of(e.args[0], t);
      for (size_t i = 1; i < e.args.size(); ++i) acc = bound_convolve(acc, bound_of(e.args[i], t));
      return acc;
    }
    case Expr::Kind::Bracket:
    case Expr::Kind::Brace: {
      BoundOp l = bound_of(e.args[0], t), r = bound_of(e.args[1], t);
      BoundOp acc = bound_convolve(l, r);
      for (const auto& [s, b] : bound_convolve(r, l)) bound_accumulate(acc, s, b);
      return acc;
    }
  }
  return {};
}

}  // namespace

long degree_bound(const RelationSpec& spec, const GeneratorTables& t) {
  long worst = 0;
  BoundOp prev = bound_of(spec.chain[0], t);
  for (size_t i = 1; i < spec.chain.size(); ++i) {
    BoundOp cur = bound_of(spec.chain[i], t);
    BoundOp diff = prev;
    for (const auto& [s, b] : cur) bound_accumulate(diff, s, b);
    for (const auto& [s, b] : diff) worst = std::max(worst, b.num);
    prev = std::move(cur);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Verification.

namespace {

VerificationReport verify_symbolic_variable(const RelationSpec& spec,
                                            const GeneratorTables& tables) {
  VerificationReport r;
  r.relation = spec.id;
  r.representation = "variable";
  r.mode = "symbolic";
  r.pass = true;
  DiffOp prev = eval_variable(spec.chain[0], tables);
  for (size_t i = 1; i < spec.chain.size() && r.pass; ++i) {
    DiffOp cur = eval_variable(spec.chain[i], tables);
    DiffOp diff = prev - cur;
    if (!diff.is_zero()) {
      r.pass = false;
      const auto& [key, poly] = *diff.terms().begin();
      r.witness = "chain link " + std::to_string(i) + ": nonzero dx^" + std::to_string(key.i) +
                  " dy^" + std::to_string(key.j) + " coefficient " +
                  ParamPoly::from_terms({{poly.leading().first, poly.leading().second}}).to_text() +
                  " + ...";
    }
    prev = std::move(cur);
  }
  return r;
}

VerificationReport verify_symbolic_degree(const RelationSpec& spec,
                                          const GeneratorTables& tables) {
  VerificationReport r;
  r.relation = spec.id;
  r.representation = "degree";
  r.mode = "symbolic";
  r.pass = true;
  DegreeOp prev = eval_degree(spec.chain[0], tables);
  for (size_t i = 1; i < spec.chain.size() && r.pass; ++i) {
    DegreeOp cur = eval_degree(spec.chain[i], tables);
    if (!deq(prev, cur)) {
      r.pass = false;
      r.witness = "chain link " + std::to_string(i) + " differs coefficientwise";
    }
    prev = std::move(cur);
  }
  return r;
}

VerificationReport verify_sampled_degree(const RelationSpec& spec,
                                         const GeneratorTables& tables,
                                         const SampleConfig& cfg) {
  VerificationReport r;
  r.relation = spec.id;
  r.representation = "degree";
  r.mode = "sampled-exact";
  r.pass = true;

  long bound = degree_bound(spec, tables);
  long want = std::max<long>(cfg.min_samples, bound + 1);

  SplitMix64 rng(cfg.seed ^ fnv1a(spec.id));
  auto draw = [&rng]() {
    long num = rng.range(-24, 24);
    long den = rng.range(1, 8);
    return ExactScalar(num, den);
  };
  // Line through a random point: certifying `bound+1` accepted points pins
  // the restricted rational identity exactly.
  std::array<ExactScalar, 5> base{draw(), draw(), draw(), draw(), draw()};
  std::array<ExactScalar, 5> dir;
  for (auto& d : dir) {
    do {
      d = draw();
    } while (d.is_zero());
  }

  long accepted = 0, attempted = 0;
  for (long t = 1; accepted < want; ++t) {
    ++attempted;
    if (attempted > 10 * want && accepted * 10 < attempted)
      throw DegenerateSampleBudgetExceeded("relation " + spec.id +
                                           ": over 90% of samples hit vanishing denominators");
    ExactScalar tt(t);
    NumContext ctx{tables,
                   base[0] + tt * dir[0],
                   base[1] + tt * dir[1],
                   base[2] + tt * dir[2],
                   base[3] + tt * dir[3],
                   base[4] + tt * dir[4],
                   {},
                   {}};
    try {
      NumOp prev = ctx.eval(spec.chain[0], {0, 0});
      bool ok = true;
      for (size_t i = 1; i < spec.chain.size() && ok; ++i) {
        NumOp cur = ctx.eval(spec.chain[i], {0, 0});
        // difference must vanish on every shift
        std::map<Shift, ExactScalar> diff = prev.coeff;
        for (const auto& [s, q] : cur.coeff) {
          auto [it, fresh] = diff.try_emplace(s, -q);
          if (!fresh) {
            it->second -= q;
            if (it->second.is_zero()) diff.erase(it);
          }
        }
        if (!diff.empty()) {
          ok = false;
          const auto& [s, q] = *diff.begin();
          r.pass = false;
          r.witness = "sample t=" + std::to_string(t) + " (a,b,c,n,k)=(" +
                      ctx.va.to_text() + "," + ctx.vb.to_text() + "," + ctx.vc.to_text() + "," +
                      ctx.vn.to_text() + "," + ctx.vk.to_text() + ") shift (" +
                      std::to_string(s.dn) + "," + std::to_string(s.dk) + ") value " +
                      q.to_text();
        }
        prev = std::move(cur);
      }
      if (!r.pass) return r;
      ++accepted;
    } catch (const DenominatorVanishes&) {
      continue;  // resample
    }
  }
  r.witness = "";
  return r;
}

}  // namespace

VerificationReport verify(const RelationSpec& spec, Representation rep, Mode mode,
                          const GeneratorTables& tables, const SampleConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  if (spec.kind != RelationSpec::Kind::Operator)
    throw Error("verify: operator relations only; use the structure-relation suite");
  if (rep == Representation::Variable) {
    r = verify_symbolic_variable(spec, tables);
    if (mode == Mode::SampledExact) r.mode = "symbolic";  // exact anyway
  } else if (mode == Mode::Symbolic) {
    r = verify_symbolic_degree(spec, tables);
  } else {
    r = verify_sampled_degree(spec, tables, cfg);
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// Catalogue.

Catalogue Catalogue::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalogue file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();

  Catalogue cat;
  cat.sha256 = sha256_hex(content);
  std::istringstream lines(content);
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    try {
      cat.entries.push_back(parse_relation(line.substr(b, e - b + 1)));
    } catch (const Error& err) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  // Resolve every generator name once so unknown names fail at load time.
  // The degree side checks the name table only; composing the derived
  // generators is deferred to first use.
  GeneratorTables t = GeneratorTables::standard();
  for (const auto& spec : cat.entries) {
    std::vector<std::string> gens;
    for (const auto& ex : spec.chain) ex.collect_generators(gens);
    for (const auto& g : gens) {
      if (spec.in_variable || spec.kind != RelationSpec::Kind::Operator) t.variable(g);
      if ((spec.in_degree || spec.kind != RelationSpec::Kind::Operator) &&
          !degree_name_known(g))
        throw UnknownGenerator("no degree realization for '" + g + "' (relation " + spec.id +
                               ")");
    }
  }
  return cat;
}

const RelationSpec* Catalogue::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

int Catalogue::count(RelationSpec::Kind kind) const {
  int c = 0;
  for (const auto& e : entries) c += e.kind == kind;
  return c;
}

}  // namespace trijac
