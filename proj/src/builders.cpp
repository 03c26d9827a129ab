#include "godel/builders.hpp"

#include <functional>

#include "godel/parse.hpp"

namespace godel::builders {

// ------------------------------------------------------------ IR makers

namespace {

TExprP mt(TExpr e) { return std::make_shared<TExpr>(std::move(e)); }
FExprP mf(FExpr e) { return std::make_shared<FExpr>(std::move(e)); }

} // namespace

TExprP tv(unsigned long v) { return mt({TExpr::Var, v, 0, nullptr, nullptr}); }
TExprP tc(GodelNumber n) { return mt({TExpr::Const, 0, std::move(n), nullptr, nullptr}); }
TExprP tplus(TExprP a, TExprP b) { return mt({TExpr::Plus, 0, 0, std::move(a), std::move(b)}); }
TExprP ttimes(TExprP a, TExprP b) { return mt({TExpr::Times, 0, 0, std::move(a), std::move(b)}); }
TExprP tsucc(TExprP a) { return mt({TExpr::Succ, 0, 0, std::move(a), nullptr}); }

FExprP feq(TExprP t, TExprP u) {
  FExpr e{};
  e.k = FExpr::Eq;
  e.t = std::move(t);
  e.u = std::move(u);
  return mf(std::move(e));
}
FExprP fneq(TExprP t, TExprP u) {
  FExpr e{};
  e.k = FExpr::Neq;
  e.t = std::move(t);
  e.u = std::move(u);
  return mf(std::move(e));
}
FExprP fleq(TExprP t, TExprP u) {
  FExpr e{};
  e.k = FExpr::Leq;
  e.t = std::move(t);
  e.u = std::move(u);
  return mf(std::move(e));
}
FExprP flt(TExprP t, TExprP u) {
  FExpr e{};
  e.k = FExpr::Lt;
  e.t = std::move(t);
  e.u = std::move(u);
  return mf(std::move(e));
}
FExprP fand(FExprP f, FExprP g) {
  FExpr e{};
  e.k = FExpr::And;
  e.f = std::move(f);
  e.g = std::move(g);
  return mf(std::move(e));
}
FExprP f_or(FExprP f, FExprP g) {
  FExpr e{};
  e.k = FExpr::Or;
  e.f = std::move(f);
  e.g = std::move(g);
  return mf(std::move(e));
}
FExprP fimp(FExprP f, FExprP g) {
  FExpr e{};
  e.k = FExpr::Imp;
  e.f = std::move(f);
  e.g = std::move(g);
  return mf(std::move(e));
}
FExprP fnot(FExprP f) {
  FExpr e{};
  e.k = FExpr::Not;
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fall(unsigned long v, FExprP f) {
  FExpr e{};
  e.k = FExpr::ForAll;
  e.var = v;
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fex(unsigned long v, FExprP f) {
  FExpr e{};
  e.k = FExpr::Exists;
  e.var = v;
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fall_le(unsigned long v, TExprP bound, FExprP f) {
  FExpr e{};
  e.k = FExpr::BForAllLe;
  e.var = v;
  e.t = std::move(bound);
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fex_le(unsigned long v, TExprP bound, FExprP f) {
  FExpr e{};
  e.k = FExpr::BExistsLe;
  e.var = v;
  e.t = std::move(bound);
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fall_lt(unsigned long v, TExprP bound, FExprP f) {
  FExpr e{};
  e.k = FExpr::BForAllLt;
  e.var = v;
  e.t = std::move(bound);
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fex_lt(unsigned long v, TExprP bound, FExprP f) {
  FExpr e{};
  e.k = FExpr::BExistsLt;
  e.var = v;
  e.t = std::move(bound);
  e.f = std::move(f);
  return mf(std::move(e));
}
FExprP fcall(std::string callee, std::vector<TExprP> args) {
  FExpr e{};
  e.k = FExpr::Call;
  e.callee = std::move(callee);
  e.args = std::move(args);
  return mf(std::move(e));
}
FExprP fstar(std::vector<TExprP> result_then_operands) {
  FExpr e{};
  e.k = FExpr::StarEq;
  e.args = std::move(result_then_operands);
  return mf(std::move(e));
}

void DefDag::add(Definition d) {
  if (index_.count(d.name)) throw std::logic_error("duplicate definition " + d.name);
  index_[d.name] = defs_.size();
  defs_.push_back(std::move(d));
}

const Definition* DefDag::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &defs_[it->second];
}

// ------------------------------------------------------------- emission

namespace {

constexpr unsigned long kLeqVar = 27;
constexpr unsigned long kStarBand = 28; // 28..47 reserved for star chains

using Env = std::map<unsigned long, TExprP>;

TExprP ground_term(const TExprP& t, const Env& env) {
  switch (t->k) {
    case TExpr::Var: {
      auto it = env.find(t->var);
      return it == env.end() ? t : it->second;
    }
    case TExpr::Const:
      return t;
    case TExpr::Plus:
      return tplus(ground_term(t->a, env), ground_term(t->b, env));
    case TExpr::Times:
      return ttimes(ground_term(t->a, env), ground_term(t->b, env));
    case TExpr::Succ:
      return tsucc(ground_term(t->a, env));
  }
  throw std::logic_error("bad term");
}

// Does the core spelling of f start an implication at top level? Such
// spellings cannot sit to the left of an arrow, so the emitter shields
// them with a double negation.
bool imp_like(const DefDag& dag, const FExprP& f,
              std::map<std::string, bool>& memo) {
  switch (f->k) {
    case FExpr::Imp:
    case FExpr::Or:
      return true;
    case FExpr::Call: {
      auto it = memo.find(f->callee);
      if (it != memo.end()) return it->second;
      const Definition* d = dag.find(f->callee);
      if (!d) throw std::logic_error("unknown definition " + f->callee);
      memo[f->callee] = false; // acyclic; safe default during recursion
      bool r = imp_like(dag, d->body, memo);
      memo[f->callee] = r;
      return r;
    }
    default:
      return false;
  }
}

template <class Sink>
struct Emitter {
  const DefDag& dag;
  Sink& sink;
  std::map<std::string, bool> imp_memo;
  // When set, handles Call nodes (used for memoized stats).
  std::function<void(Emitter&, const Definition&, Env&)> call_override;

  void run(Symbol s, GodelNumber n = 1) { sink.run(s, n); }

  void var_string(unsigned long v) {
    run(Symbol::LParen);
    run(Symbol::Zero);
    run(Symbol::Prime, GodelNumber(v));
    run(Symbol::RParen);
  }

  void term(const TExprP& t, const Env& env) {
    switch (t->k) {
      case TExpr::Var: {
        auto it = env.find(t->var);
        if (it != env.end()) {
          term(it->second, env);
        } else {
          var_string(t->var);
        }
        return;
      }
      case TExpr::Const:
        run(Symbol::Zero);
        if (t->num > 0) run(Symbol::Prime, t->num);
        return;
      case TExpr::Succ:
        run(Symbol::LParen);
        term(t->a, env);
        run(Symbol::RParen);
        run(Symbol::Prime);
        return;
      case TExpr::Plus:
      case TExpr::Times:
        run(Symbol::LParen);
        term(t->a, env);
        run(Symbol::RParen);
        run(t->k == TExpr::Plus ? Symbol::Plus : Symbol::Times);
        run(Symbol::LParen);
        term(t->b, env);
        run(Symbol::RParen);
        return;
    }
  }

  void left_operand(const FExprP& f, const Env& env) {
    if (imp_like(dag, f, imp_memo)) {
      // ~(~(F)) => G keeps the arrow grammar unambiguous.
      run(Symbol::Not);
      run(Symbol::LParen);
      run(Symbol::Not);
      run(Symbol::LParen);
      formula(f, env);
      run(Symbol::RParen);
      run(Symbol::RParen);
    } else {
      formula(f, env);
    }
  }

  void leq(const TExprP& t, const TExprP& u, const Env& env) {
    // t <= u spells ~(all v(~((t)+(v)=u)))
    run(Symbol::Not);
    run(Symbol::LParen);
    run(Symbol::ForAll);
    var_string(kLeqVar);
    run(Symbol::LParen);
    run(Symbol::Not);
    run(Symbol::LParen);
    run(Symbol::LParen);
    term(t, env);
    run(Symbol::RParen);
    run(Symbol::Plus);
    run(Symbol::LParen);
    var_string(kLeqVar);
    run(Symbol::RParen);
    run(Symbol::Equal);
    term(u, env);
    run(Symbol::RParen);
    run(Symbol::RParen);
    run(Symbol::RParen);
  }

  void not_wrapped(const std::function<void()>& inner) {
    run(Symbol::Not);
    run(Symbol::LParen);
    inner();
    run(Symbol::RParen);
  }

  void formula(const FExprP& f, const Env& env) {
    switch (f->k) {
      case FExpr::Eq:
        term(f->t, env);
        run(Symbol::Equal);
        term(f->u, env);
        return;
      case FExpr::Neq:
        not_wrapped([&] {
          term(f->t, env);
          run(Symbol::Equal);
          term(f->u, env);
        });
        return;
      case FExpr::Leq:
        leq(f->t, f->u, env);
        return;
      case FExpr::Lt: {
        // (t<=u) /\ (t!=u) spelled ~(t<=u => ~(t!=u))
        not_wrapped([&] {
          leq(f->t, f->u, env);
          run(Symbol::Imp);
          not_wrapped([&] {
            not_wrapped([&] {
              term(f->t, env);
              run(Symbol::Equal);
              term(f->u, env);
            });
          });
        });
        return;
      }
      case FExpr::And:
        not_wrapped([&] {
          left_operand(f->f, env);
          run(Symbol::Imp);
          not_wrapped([&] { formula(f->g, env); });
        });
        return;
      case FExpr::Or:
        not_wrapped([&] { formula(f->f, env); });
        run(Symbol::Imp);
        formula(f->g, env);
        return;
      case FExpr::Imp:
        left_operand(f->f, env);
        run(Symbol::Imp);
        formula(f->g, env);
        return;
      case FExpr::Not:
        not_wrapped([&] { formula(f->f, env); });
        return;
      case FExpr::ForAll:
        run(Symbol::ForAll);
        var_string(f->var);
        run(Symbol::LParen);
        formula(f->f, env);
        run(Symbol::RParen);
        return;
      case FExpr::Exists:
        not_wrapped([&] {
          run(Symbol::ForAll);
          var_string(f->var);
          run(Symbol::LParen);
          not_wrapped([&] { formula(f->f, env); });
          run(Symbol::RParen);
        });
        return;
      case FExpr::BForAllLe:
      case FExpr::BForAllLt: {
        run(Symbol::ForAll);
        var_string(f->var);
        run(Symbol::LParen);
        bound_premise(f, env);
        run(Symbol::Imp);
        formula(f->f, env);
        run(Symbol::RParen);
        return;
      }
      case FExpr::BExistsLe:
      case FExpr::BExistsLt: {
        not_wrapped([&] {
          run(Symbol::ForAll);
          var_string(f->var);
          run(Symbol::LParen);
          bound_premise(f, env);
          run(Symbol::Imp);
          not_wrapped([&] { formula(f->f, env); });
          run(Symbol::RParen);
        });
        return;
      }
      case FExpr::Call: {
        const Definition* d = dag.find(f->callee);
        if (!d) throw std::logic_error("unknown definition " + f->callee);
        if (d->params.size() != f->args.size())
          throw std::logic_error("arity mismatch calling " + f->callee);
        Env inner;
        for (std::size_t i = 0; i < d->params.size(); ++i)
          inner[d->params[i]] = ground_term(f->args[i], env);
        if (call_override)
          call_override(*this, *d, inner);
        else
          formula(d->body, inner);
        return;
      }
      case FExpr::StarEq: {
        star_chain(f->args, env);
        return;
      }
    }
  }

  void bound_premise(const FExprP& f, const Env& env) {
    TExprP v = tv(f->var);
    if (f->k == FExpr::BForAllLe || f->k == FExpr::BExistsLe) {
      leq(v, f->t, env);
    } else {
      FExprP lt = flt(v, f->t);
      formula(lt, env);
    }
  }

  void star_chain(const std::vector<TExprP>& parts, const Env& env) {
    // parts[0] = result, parts[1..] = operands
    const TExprP& r = parts[0];
    std::size_t m = parts.size() - 1;
    if (m == 0) throw std::logic_error("empty star chain");
    if (m == 1) {
      FExprP e = feq(r, parts[1]);
      formula(e, env);
      return;
    }
    std::function<void(std::size_t, const TExprP&)> link =
        [&](std::size_t i, const TExprP& prev) {
          // remaining operands parts[i..m]; prev holds the prefix value
          if (i == m) {
            FExprP c = fcall("StarRel", {prev, parts[m], r});
            formula(c, env);
            return;
          }
          unsigned long uvar = kStarBand + static_cast<unsigned long>(i);
          // (exists u uvar <= r)( StarRel(prev, parts[i], u) /\ link )
          FExprP dummy; // emission inline to reuse the chain recursion
          not_wrapped([&] {
            run(Symbol::ForAll);
            var_string(uvar);
            run(Symbol::LParen);
            leq(tv(uvar), r, env);
            run(Symbol::Imp);
            not_wrapped([&] {
              // StarRel(prev, part, u) /\ rest
              not_wrapped([&] {
                FExprP c = fcall("StarRel", {prev, parts[i], tv(uvar)});
                formula(c, env);
                run(Symbol::Imp);
                not_wrapped([&] { link(i + 1, tv(uvar)); });
              });
            });
          });
          (void)dummy;
        };
    link(2, parts[1]);
  }

  // Overridden per sink: caching for stats, plain recursion otherwise.
  void call_hook(const Definition& d, Env& inner) { formula(d.body, inner); }
};

// ------------------------------------------------------------- sinks

struct RunSink {
  TokenString out;
  void run(Symbol s, const GodelNumber& n) {
    if (n == 0) return;
    if (!out.empty() && out.back().sym == s)
      out.back().count += n;
    else
      out.push_back(SymbolRun{s, n});
  }
};

struct StatsSink {
  GodelNumber count = 0;
  GodelNumber bits = 0;
  GodelNumber code = 0;
  bool code_ok = true;
  GodelNumber code_guard;

  void run(Symbol s, const GodelNumber& n) {
    if (n == 0) return;
    count += n;
    bits += n * (exponent(s) + 1);
    if (!code_ok) return;
    if (bits > code_guard || !n.fits_ulong_p()) {
      code_ok = false;
      code = 0;
      return;
    }
    unsigned long k = n.get_ui();
    if (s == Symbol::Prime) {
      mpz_mul_2exp(code.get_mpz_t(), code.get_mpz_t(), k);
      GodelNumber ones = 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), k);
      code += ones - 1;
    } else {
      for (unsigned long i = 0; i < k; ++i) {
        mpz_mul_2exp(code.get_mpz_t(), code.get_mpz_t(), exponent(s) + 1);
        mpz_setbit(code.get_mpz_t(), exponent(s));
      }
    }
  }

  void splice(const GodelNumber& c2, const GodelNumber& b2,
              const std::optional<GodelNumber>& code2) {
    count += c2;
    bits += b2;
    if (!code_ok) return;
    if (!code2 || bits > code_guard || !b2.fits_ulong_p()) {
      code_ok = false;
      code = 0;
      return;
    }
    mpz_mul_2exp(code.get_mpz_t(), code.get_mpz_t(), b2.get_ui());
    code += *code2;
  }
};

struct CacheEntry {
  GodelNumber count, bits;
  std::optional<GodelNumber> code; // absent when over the guard
  bool code_attempted = false;
};

struct StatsEmitter : Emitter<StatsSink> {
  std::map<std::string, CacheEntry>* cache;

  // Key: name plus the canonical codes of the ground arguments.
  static std::string key_of(const Definition& d, const Env& env);

  void call_cached(const Definition& d, Env& inner);
};

// Code of a ground term, tiny and uncached.
void emit_ground_term(const TExprP& t, StatsSink& s);

struct GroundEmitter : Emitter<StatsSink> {};

std::string StatsEmitter::key_of(const Definition& d, const Env& env) {
  std::string key = d.name;
  for (unsigned long p : d.params) {
    key += '|';
    auto it = env.find(p);
    if (it == env.end()) {
      key += "v" + std::to_string(p);
    } else {
      StatsSink ss;
      ss.code_guard = GodelNumber(1) << 24;
      GroundEmitter ge{{*(const DefDag*)nullptr, ss, {}}};
      // Ground terms never contain calls; emit via a fresh tiny emitter.
      // (dag reference unused on term paths.)
      Env empty;
      ge.term(it->second, empty);
      key += ss.code.get_str(32);
    }
  }
  return key;
}

void StatsEmitter::call_cached(const Definition& d, Env& inner) {
  std::string key = key_of(d, inner);
  auto it = cache->find(key);
  bool want_code = sink.code_ok;
  if (it != cache->end() && (!want_code || it->second.code_attempted)) {
    sink.splice(it->second.count, it->second.bits, it->second.code);
    return;
  }
  StatsSink sub;
  sub.code_guard = sink.code_guard;
  sub.code_ok = want_code;
  StatsEmitter se{{dag, sub, {}}, cache};
  se.formula(d.body, inner);
  CacheEntry e;
  e.count = sub.count;
  e.bits = sub.bits;
  e.code_attempted = want_code;
  if (want_code && sub.code_ok) e.code = sub.code;
  (*cache)[key] = e;
  sink.splice(e.count, e.bits, e.code);
}

} // namespace

// --------------------------------------------------- public operations

namespace {

// Emitter specializations: override Call handling via runtime flag.
struct ExpandEmitter : Emitter<RunSink> {};

template <class E>
void drive(E& em, const DefDag& dag, const std::string& name) {
  const Definition* d = dag.find(name);
  if (!d) throw std::logic_error("unknown definition " + name);
  Env env; // parameters stay free
  em.formula(d->body, env);
}

GodelNumber count_only(const DefDag& dag, const std::string& name,
                       std::map<std::string, CacheEntry>& cache) {
  StatsSink s;
  s.code_ok = false;
  s.code_guard = 0;
  StatsEmitter em{{dag, s, {}}, &cache};
  drive(em, dag, name);
  return s.count;
}

} // namespace

Ast expand(const DefDag& dag, const std::string& name, const ExpandOptions& opts) {
  std::map<std::string, CacheEntry> cache;
  GodelNumber n = count_only(dag, name, cache);
  if (n > opts.symbol_guard) throw GuardError(n);
  RunSink rs;
  ExpandEmitter em{{dag, rs, {}}};
  drive(em, dag, name);
  CanonicalOptions po;
  po.sugar = false;
  po.paren = false;
  po.leq_atom = false;
  auto ast = parse_canonical_formula(rs.out, po);
  if (!ast) throw std::logic_error("expansion failed to parse: " + name);
  return *ast;
}

SentenceStats stats(const DefDag& dag, const std::string& name,
                    const StatsOptions& opts) {
  std::map<std::string, CacheEntry> cache;
  StatsSink s;
  s.code_guard = opts.code_bit_guard;
  StatsEmitter em{{dag, s, {}}, &cache};
  drive(em, dag, name);
  SentenceStats out;
  out.expanded_symbol_count = s.count;
  out.bit_length = s.bits;
  if (s.code_ok) out.godel_number = s.code;
  const Definition* d = dag.find(name);
  out.free_vars.insert(d->params.begin(), d->params.end());
  return out;
}

bool big_less(const BigSize& a, const BigSize& b) {
  if (a.tower != b.tower) return a.tower < b.tower;
  return a.base < b.base;
}

std::string big_to_string(const BigSize& s) {
  std::string r;
  for (int i = 0; i < s.tower; ++i) r += "2^";
  if (s.tower > 0) r += "(" + s.base.get_str() + " bits)";
  else r = s.base.get_str();
  return r;
}

// --------------------------------------------------------- the library

DefDag build_library() {
  DefDag dag;
  unsigned long nb = 48; // next binder index; bands: 27 leq, 28..47 chains
  auto binder = [&]() { return nb++; };

  const unsigned long A = 1, B = 2, C = 3, T = 20, U = 21, W = 23, X = 24,
                      Y = 25, Z = 26;

  auto sym = [](Symbol s) { return tc(GodelNumber(1) << exponent(s)); };
  TExprP cPrime = sym(Symbol::Prime), cZero = sym(Symbol::Zero),
         cLP = sym(Symbol::LParen), cRP = sym(Symbol::RParen),
         cPlus = sym(Symbol::Plus), cTimes = sym(Symbol::Times),
         cEq = sym(Symbol::Equal), cImp = sym(Symbol::Imp),
         cNot = sym(Symbol::Not), cAll = sym(Symbol::ForAll),
         cComma = sym(Symbol::Comma);
  TExprP cS = tc(GodelNumber(1) << kMarkerS), cT = tc(GodelNumber(1) << kMarkerT);

  // 1. Div(x,y)
  {
    unsigned long z = binder();
    dag.add({"Div", 1, {X, Y},
             fex_le(z, tv(Y), feq(ttimes(tv(X), tv(z)), tv(Y)))});
  }
  // 2. PowerOf2(x)
  {
    unsigned long z = binder();
    dag.add({"PowerOf2", 2, {X},
             fall_le(z, tv(X),
                     fimp(fand(fcall("Div", {tv(z), tv(X)}),
                               fneq(tv(z), tc(1))),
                          fcall("Div", {tc(2), tv(z)})))});
  }
  // 3. LeastPow2(x,y): y = 2^ell(x)
  {
    unsigned long z = binder();
    dag.add({"LeastPow2", 3, {X, Y},
             fand(fand(fand(fcall("PowerOf2", {tv(Y)}), flt(tv(X), tv(Y))),
                       flt(tc(1), tv(Y))),
                  fall_lt(z, tv(Y),
                          fnot(fand(fand(fcall("PowerOf2", {tv(z)}),
                                         flt(tv(X), tv(z))),
                                    flt(tc(1), tv(z))))))});
  }
  // 4. StarRel(x,y,z): z = x*y
  {
    unsigned long w = binder();
    dag.add({"StarRel", 4, {X, Y, Z},
             fex_le(w, tv(Z),
                    fand(feq(tplus(ttimes(tv(w), tv(X)), tv(Y)), tv(Z)),
                         fcall("LeastPow2", {tv(Y), tv(w)})))});
  }
  // 5. Begin(x,y)
  {
    unsigned long z = binder();
    dag.add({"Begin", 5, {X, Y},
             f_or(feq(tv(X), tv(Y)),
                  fand(fneq(tv(X), tc(0)),
                       fex_le(z, tv(Y), fcall("StarRel", {tv(X), tv(z), tv(Y)}))))});
  }
  // 6. End(x,y)
  {
    unsigned long z = binder();
    dag.add({"End", 6, {X, Y},
             f_or(feq(tv(X), tv(Y)),
                  fand(fneq(tv(X), tc(0)),
                       fex_le(z, tv(Y), fcall("StarRel", {tv(z), tv(X), tv(Y)}))))});
  }
  // 7. Part(x,y)
  {
    unsigned long z = binder();
    dag.add({"Part", 7, {X, Y},
             f_or(feq(tv(X), tv(Y)),
                  fand(fneq(tv(X), tc(0)),
                       fex_le(z, tv(Y),
                              fand(fcall("End", {tv(z), tv(Y)}),
                                   fcall("Begin", {tv(X), tv(z)})))))});
  }
  // 8. Succ(x)
  {
    unsigned long y = binder();
    dag.add({"Succ", 8, {X},
             fand(fneq(tv(X), tc(0)),
                  fall_le(y, tv(X),
                          fimp(fcall("Part", {tv(y), tv(X)}),
                               fcall("Part", {tc(1), tv(y)}))))});
  }
  // 9. Var(x)
  {
    unsigned long y = binder();
    dag.add({"Var", 9, {X},
             fex_le(y, tv(X),
                    fand(fcall("Succ", {tv(y)}),
                         fstar({tv(X), cLP, cZero, tv(y), cRP})))});
  }
  // 10. Num(x)
  {
    unsigned long y = binder();
    dag.add({"Num", 10, {X},
             f_or(feq(tv(X), tc(2)),
                  fex_le(y, tv(X),
                         fand(fcall("Succ", {tv(y)}),
                              fstar({tv(X), cZero, tv(y)}))))});
  }
  // 11. Seq(x)
  dag.add({"Seq", 11, {X}, fcall("Part", {cComma, tv(X)})});
  // 12. ElementOf(x,y)
  {
    unsigned long v = binder(), v2 = binder();
    FExprP begin_case =
        fex_le(v, tv(Y),
               fand(fcall("StarRel", {tv(X), cComma, tv(v)}),
                    fcall("Begin", {tv(v), tv(Y)})));
    FExprP end_case =
        fex_le(v, tv(Y),
               fand(fcall("StarRel", {cComma, tv(X), tv(v)}),
                    fcall("End", {tv(v), tv(Y)})));
    FExprP mid_case = fex_le(
        v2, tv(Y),
        fand(fstar({tv(v2), cComma, tv(X), cComma}),
             fcall("Part", {tv(v2), tv(Y)})));
    dag.add({"ElementOf", 12, {X, Y},
             fand(fand(fcall("Seq", {tv(Y)}),
                       fnot(fcall("Part", {cComma, tv(X)}))),
                  f_or(f_or(begin_case, end_case), mid_case))});
  }
  // 13. Before(x,y,z)
  {
    unsigned long w = binder(), p = binder();
    dag.add({"Before", 13, {X, Y, Z},
             fand(fand(fcall("ElementOf", {tv(X), tv(Z)}),
                       fcall("ElementOf", {tv(Y), tv(Z)})),
                  fex_le(w, tv(Z),
                         fex_le(p, tv(Z),
                                fand(fstar({tv(p), tv(X), tv(w), tv(Y)}),
                                     fcall("Part", {tv(p), tv(Z)})))))});
  }
  // 14. Term(x)
  {
    unsigned long y = binder(), z = binder(), v = binder(), w = binder();
    FExprP sum_case = fstar({tv(z), cLP, tv(v), cRP, cPlus, cLP, tv(w), cRP});
    FExprP prod_case = fstar({tv(z), cLP, tv(v), cRP, cTimes, cLP, tv(w), cRP});
    FExprP succ_case = fstar({tv(z), cLP, tv(v), cRP, cPrime});
    FExprP composite =
        fex_le(v, tv(y),
               fex_le(w, tv(y),
                      fand(fand(fcall("Before", {tv(v), tv(z), tv(y)}),
                                fcall("Before", {tv(w), tv(z), tv(y)})),
                           f_or(f_or(sum_case, prod_case), succ_case))));
    dag.add({"Term", 14, {X},
             fex(y, fand(fcall("ElementOf", {tv(X), tv(y)}),
                         fall_le(z, tv(y),
                                 fimp(fcall("ElementOf", {tv(z), tv(y)}),
                                      f_or(f_or(fcall("Var", {tv(z)}),
                                                fcall("Num", {tv(z)})),
                                           composite)))))});
  }
  // 15. Atom(x); the second case is the coded spelling of E_y <= E_z.
  {
    unsigned long y = binder(), z = binder();
    FExprP eq_case = fstar({tv(X), tv(y), cEq, tv(z)});
    FExprP leq_case = fstar({tv(X), cNot, cLP, cAll, cLP, cZero, cPrime, cRP,
                             cLP, cNot, cLP, tv(y), cPlus, cLP, cZero, cPrime,
                             cRP, cEq, tv(z), cRP, cRP, cRP});
    dag.add({"Atom", 15, {X},
             fex_le(y, tv(X),
                    fex_le(z, tv(X),
                           fand(fand(fcall("Term", {tv(y)}),
                                     fcall("Term", {tv(z)})),
                                f_or(eq_case, leq_case))))});
  }
  // 16. Gen(x,y): y = all u ( x )
  {
    unsigned long u = binder();
    dag.add({"Gen", 16, {X, Y},
             fex_le(u, tv(Y),
                    fand(fcall("Var", {tv(u)}),
                         fstar({tv(Y), cAll, tv(u), cLP, tv(X), cRP})))});
  }
  // 17. Form(x)
  {
    unsigned long y = binder(), z = binder(), v = binder(), w = binder();
    FExprP imp_case = fstar({tv(z), tv(v), cImp, tv(w)});
    FExprP not_case = fstar({tv(z), cNot, cLP, tv(v), cRP});
    FExprP composite =
        fex_le(v, tv(y),
               fex_le(w, tv(y),
                      fand(fand(fcall("Before", {tv(v), tv(z), tv(y)}),
                                fcall("Before", {tv(w), tv(z), tv(y)})),
                           f_or(f_or(imp_case, not_case),
                                fcall("Gen", {tv(w), tv(z)})))));
    dag.add({"Form", 17, {X},
             fex(y, fand(fcall("ElementOf", {tv(X), tv(y)}),
                         fall_le(z, tv(y),
                                 fimp(fcall("ElementOf", {tv(z), tv(y)}),
                                      f_or(fcall("Atom", {tv(z)}), composite)))))});
  }
  // 18. Prop1..Prop11 and Pro
  {
    auto form2 = [&](unsigned long a, unsigned long b, FExprP shape) {
      return fex_lt(a, tv(X),
                    fex_lt(b, tv(X),
                           fand(fand(fcall("Form", {tv(a)}),
                                     fcall("Form", {tv(b)})),
                                shape)));
    };
    auto form3 = [&](unsigned long a, unsigned long b, unsigned long c,
                     FExprP shape) {
      return fex_lt(
          a, tv(X),
          fex_lt(b, tv(X),
                 fex_lt(c, tv(X),
                        fand(fand(fand(fcall("Form", {tv(a)}),
                                       fcall("Form", {tv(b)})),
                                  fcall("Form", {tv(c)})),
                             shape))));
    };
    unsigned long a = binder(), b = binder(), c = binder();
    dag.add({"Prop1", 0, {X},
             form2(a, b, fstar({tv(X), tv(a), cImp, cLP, tv(b), cImp, tv(a), cRP}))});
    dag.add({"Prop2", 0, {X},
             form3(a, b, c,
                   fstar({tv(X), cLP, tv(a), cImp, tv(b), cRP, cImp, cLP, cLP,
                          tv(a), cImp, cLP, tv(b), cImp, tv(c), cRP, cRP, cImp,
                          cLP, tv(a), cImp, tv(c), cRP, cRP}))});
    dag.add({"Prop3", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(a), cImp, cLP, cLP, tv(a), cImp, tv(b), cRP,
                          cImp, tv(b), cRP}))});
    dag.add({"Prop4", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(a), cImp, cLP, tv(b), cImp, tv(a),
                          sym(Symbol::And), tv(b), cRP}))});
    dag.add({"Prop5", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(a), sym(Symbol::And), tv(b), cImp, tv(a)}))});
    dag.add({"Prop6", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(a), sym(Symbol::And), tv(b), cImp, tv(b)}))});
    dag.add({"Prop7", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(a), cImp, tv(a), sym(Symbol::Or), tv(b)}))});
    dag.add({"Prop8", 0, {X},
             form2(a, b,
                   fstar({tv(X), tv(b), cImp, tv(a), sym(Symbol::Or), tv(b)}))});
    dag.add({"Prop9", 0, {X},
             form3(a, b, c,
                   fstar({tv(X), cLP, tv(a), cImp, tv(c), cRP, cImp, cLP, cLP,
                          tv(b), cImp, tv(c), cRP, cImp, cLP, tv(a),
                          sym(Symbol::Or), tv(b), cImp, tv(c), cRP, cRP}))});
    dag.add({"Prop10", 0, {X},
             form2(a, b,
                   fstar({tv(X), cLP, tv(a), cImp, tv(b), cRP, cImp, cLP, cLP,
                          tv(a), cImp, cNot, tv(b), cRP, cImp, cNot, tv(a),
                          cRP}))});
    dag.add({"Prop11", 0, {X},
             form2(a, b, fstar({tv(X), cNot, cNot, tv(a), cImp, tv(a)}))});
    FExprP pro = fcall("Prop1", {tv(X)});
    const char* names[] = {"Prop2", "Prop3", "Prop4", "Prop5", "Prop6",
                           "Prop7", "Prop8", "Prop9", "Prop10", "Prop11"};
    for (const char* n : names) pro = f_or(pro, fcall(n, {tv(X)}));
    dag.add({"Pro", 18, {X}, pro});
  }
  // 19. Free(x,y)
  {
    unsigned long z = binder(), v = binder();
    dag.add({"Free", 19, {X, Y},
             fand(fcall("Term", {tv(X)}),
                  fall_lt(z, tv(X),
                          fimp(fand(fcall("Var", {tv(z)}),
                                    fcall("Part", {tv(z), tv(X)})),
                               fnot(fex_le(v, tv(Y),
                                           fand(fcall("StarRel",
                                                      {cAll, tv(z), tv(v)}),
                                                fcall("Part",
                                                      {tv(v), tv(Y)})))))))});
  }
  // 20. Pred1(x)
  {
    unsigned long a = binder(), b = binder(), c = binder();
    dag.add({"Pred1", 20, {X},
             fex_lt(a, tv(X),
                    fex_lt(b, tv(X),
                           fex_lt(c, tv(X),
                                  fand(fand(fand(fand(fcall("Form", {tv(a)}),
                                                      fcall("Form", {tv(b)})),
                                                 fcall("Var", {tv(c)})),
                                            fnot(fcall("Part", {tv(c), tv(b)}))),
                                       fstar({tv(X), cLP, tv(b), cImp, tv(a),
                                              cRP, cImp, cLP, tv(b), cImp, cLP,
                                              cAll, tv(c), tv(a), cRP, cRP})))))});
  }
  // 21. SeqPair(x,y,u)
  {
    unsigned long p = binder();
    dag.add({"SeqPair", 21, {X, Y, U},
             fand(fand(fand(fand(fnot(fcall("Seq", {tv(X)})),
                                 fnot(fcall("Seq", {tv(Y)}))),
                            fneq(tv(X), tc(0))),
                       fneq(tv(Y), tc(0))),
                  fex_le(p, tv(U),
                         fand(fstar({tv(p), tv(X), cComma, tv(Y)}),
                              fcall("Part", {tv(p), tv(U)}))))});
  }
  // 22. Alt(x,y,u,t)
  {
    unsigned long w = binder(), a = binder(), b = binder(), c1 = binder(),
                  c2 = binder(), d1 = binder(), d2 = binder();
    FExprP decomp = fex_lt(
        c1, tv(a),
        fex_lt(c2, tv(b),
               fex_lt(d1, tv(a),
                      fex_lt(d2, tv(b),
                             fand(fand(fcall("SeqPair", {tv(c1), tv(c2), tv(w)}),
                                       fcall("SeqPair", {tv(d1), tv(d2), tv(w)})),
                                  fand(fstar({tv(a), tv(c1), tv(U), tv(d1)}),
                                       fstar({tv(b), tv(c2), tv(T), tv(d2)})))))));
    FExprP clause =
        fimp(fcall("SeqPair", {tv(a), tv(b), tv(w)}),
             f_or(fand(fnot(fcall("Part", {tv(U), tv(a)})), feq(tv(a), tv(b))),
                  decomp));
    dag.add({"Alt", 22, {X, Y, U, T},
             fand(fand(fand(fand(fand(fand(fand(fcall("Form", {tv(X)}),
                                                fcall("Form", {tv(Y)})),
                                           fcall("Var", {tv(U)})),
                                      fcall("Free", {tv(U), tv(Y)})),
                                 fand(fcall("Term", {tv(T)}),
                                      fcall("Free", {tv(T), tv(Y)}))),
                            fcall("Part", {tv(U), tv(Y)})),
                       fnot(fcall("Part", {tv(U), tv(X)}))),
                  fex(w, fand(fcall("SeqPair", {tv(Y), tv(X), tv(w)}),
                              fall_lt(a, tv(w), fall_lt(b, tv(w), clause)))))});
  }
  // 23. Pred2(x)
  {
    unsigned long a = binder(), b = binder(), c = binder(), t = binder();
    dag.add({"Pred2", 23, {X},
             fex_lt(a, tv(X),
                    fex_lt(b, tv(X),
                           fex_lt(c, tv(X),
                                  fex_lt(t, tv(X),
                                         fand(fand(fand(fand(fcall("Form", {tv(a)}),
                                                             fcall("Var", {tv(b)})),
                                                        fcall("Term", {tv(t)})),
                                                   fcall("Alt", {tv(c), tv(a),
                                                                 tv(b), tv(t)})),
                                              fstar({tv(X), cAll, tv(b), tv(a),
                                                     cImp, tv(c)}))))))});
  }
  // 24. Nat1..Nat8 and Nat
  {
    unsigned long a = binder(), b = binder(), c = binder();
    auto term1 = [&](FExprP shape) {
      return fex_lt(a, tv(X), fand(fcall("Term", {tv(a)}), shape));
    };
    auto term2 = [&](FExprP shape) {
      return fex_lt(a, tv(X),
                    fex_lt(b, tv(X),
                           fand(fand(fcall("Term", {tv(a)}),
                                     fcall("Term", {tv(b)})),
                                shape)));
    };
    auto term3 = [&](FExprP shape) {
      return fex_lt(
          a, tv(X),
          fex_lt(b, tv(X),
                 fex_lt(c, tv(X),
                        fand(fand(fand(fcall("Term", {tv(a)}),
                                       fcall("Term", {tv(b)})),
                                  fcall("Term", {tv(c)})),
                             shape))));
    };
    dag.add({"Nat1", 0, {X},
             term2(fstar({tv(X), tv(a), cPrime, cEq, tv(b), cPrime, cImp,
                          tv(a), cEq, tv(b)}))});
    dag.add({"Nat2", 0, {X},
             term1(fstar({tv(X), cNot, cLP, tv(a), cPrime, cEq, cZero, cRP}))});
    dag.add({"Nat3", 0, {X},
             term3(fstar({tv(X), tv(a), cEq, tv(b), cImp, cLP, tv(a), cEq,
                          tv(c), cImp, tv(b), cEq, tv(c), cRP}))});
    dag.add({"Nat4", 0, {X},
             term2(fstar({tv(X), tv(a), cEq, tv(b), cImp, tv(a), cPrime, cEq,
                          tv(b), cPrime}))});
    dag.add({"Nat5", 0, {X},
             term1(fstar({tv(X), tv(a), cPlus, cZero, cEq, tv(a)}))});
    dag.add({"Nat6", 0, {X},
             term2(fstar({tv(X), tv(a), cPlus, tv(b), cPrime, cEq, cLP, tv(a),
                          cPlus, tv(b), cRP, cPrime}))});
    dag.add({"Nat7", 0, {X},
             term1(fstar({tv(X), tv(a), cTimes, cZero, cEq, cZero}))});
    dag.add({"Nat8", 0, {X},
             term2(fstar({tv(X), tv(a), cTimes, tv(b), cPrime, cEq, tv(a),
                          cTimes, tv(b), cPlus, tv(a)}))});
    FExprP nat = fcall("Nat1", {tv(X)});
    const char* names[] = {"Nat2", "Nat3", "Nat4", "Nat5", "Nat6", "Nat7",
                           "Nat8"};
    for (const char* n : names) nat = f_or(nat, fcall(n, {tv(X)}));
    dag.add({"Nat", 24, {X}, nat});
  }
  // 25. SubRel(a,x,y,s): s codes all E_x ((E_x = E_y) -> (E_a))
  {
    dag.add({"SubRel", 25, {A, X, Y, Z},
             fstar({tv(Z), cAll, tv(X), cLP, cLP, tv(X), cEq, tv(Y), cRP, cImp,
                    cLP, tv(A), cRP, cRP})});
  }
  // 26. MI(x)
  {
    unsigned long a = binder(), b = binder(), c = binder(), cp = binder(),
                  s1 = binder(), s2 = binder(), s3 = binder();
    dag.add(
        {"MI", 26, {X},
         fex_lt(
             a, tv(X),
             fex_lt(
                 b, tv(X),
                 fex_lt(
                     c, tv(X),
                     fand(fand(fand(fcall("Form", {tv(a)}),
                                    fcall("Var", {tv(b)})),
                               fcall("Var", {tv(c)})),
                          fex_le(cp, tv(X),
                                 fand(fcall("StarRel", {tv(c), tc(1), tv(cp)}),
                                      fex_le(s1, tv(X),
                                             fex_le(s2, tv(X),
                                                    fex_le(s3, tv(X),
         fand(fand(fand(fcall("SubRel", {tv(a), tv(b), tc(2), tv(s1)}),
                        fcall("SubRel", {tv(a), tv(b), tv(c), tv(s2)})),
                   fcall("SubRel", {tv(a), tv(b), tv(cp), tv(s3)})),
              fstar({tv(X), cLP, tv(s1), sym(Symbol::And), cAll, tv(c), cLP,
                     tv(s2), cImp, tv(s3), cRP, cRP, cImp, cAll, tv(c),
                     tv(s2)}))))))))))});
  }
  // 27. Axiom(x)
  dag.add({"Axiom", 27, {X},
           f_or(f_or(f_or(f_or(fcall("Pro", {tv(X)}), fcall("Pred1", {tv(X)})),
                          fcall("Pred2", {tv(X)})),
                     fcall("Nat", {tv(X)})),
                fcall("MI", {tv(X)}))});
  // 28. Proof(x)
  {
    unsigned long y = binder(), v = binder(), w = binder(), a = binder(),
                  b = binder(), c = binder(), z = binder();
    FExprP mp_case = fstar({tv(w), tv(v), cImp, tv(y)});
    FExprP gen_case = fex_lt(
        a, tv(v),
        fex_lt(b, tv(v),
               fex_lt(c, tv(y),
                      fand(fand(fand(fstar({tv(v), tv(b), cImp, tv(a)}),
                                     fstar({tv(y), tv(b), cImp, tv(c)})),
                                fcall("Gen", {tv(a), tv(c)})),
                           fall_le(z, tv(a),
                                   fimp(fcall("Var", {tv(z)}),
                                        fnot(fcall("Part", {tv(z), tv(b)}))))))));
    dag.add({"Proof", 28, {X},
             fand(fcall("Seq", {tv(X)}),
                  fall_le(y, tv(X),
                          fimp(fcall("ElementOf", {tv(y), tv(X)}),
                               f_or(fcall("Axiom", {tv(y)}),
                                    fex_le(v, tv(X),
                                           fex_le(w, tv(X),
                                                  fand(fand(fcall("Before",
                                                                  {tv(v), tv(y),
                                                                   tv(X)}),
                                                            fcall("Before",
                                                                  {tv(w), tv(y),
                                                                   tv(X)})),
                                                       f_or(mp_case,
                                                            gen_case))))))))});
  }
  // 29. Pr(x)
  {
    unsigned long y = binder();
    dag.add({"Pr", 29, {X},
             fex(y, fand(fcall("Proof", {tv(y)}),
                         fcall("ElementOf", {tv(X), tv(y)})))});
  }
  // 30. Re(x)
  {
    unsigned long y = binder(), n = binder();
    dag.add({"Re", 30, {X},
             fex(y, fand(fcall("Proof", {tv(y)}),
                         fex_le(n, tv(y),
                                fand(fstar({tv(n), cNot, cLP, tv(X), cRP}),
                                     fcall("ElementOf", {tv(n), tv(y)})))))});
  }
  // 31. SEQ(x,y,w)
  {
    unsigned long p = binder();
    dag.add({"SEQ", 31, {X, Y, W},
             fand(fand(fand(fand(fex_le(p, tv(W),
                                        fand(fstar({tv(p), cS, tv(X), cT,
                                                    tv(Y), cS}),
                                             fcall("Part", {tv(p), tv(W)}))),
                                 fnot(fcall("Part", {cS, tv(X)}))),
                            fnot(fcall("Part", {cS, tv(Y)}))),
                       fnot(fcall("Part", {cT, tv(X)}))),
                  fnot(fcall("Part", {cT, tv(Y)})))});
  }
  // 32. Pow2Rel(x,y): y = 2^x
  {
    unsigned long w = binder(), a = binder(), b = binder(), c = binder(),
                  d = binder();
    FExprP closure = fimp(
        fcall("SEQ", {tv(a), tv(b), tv(w)}),
        f_or(fand(feq(tv(a), tc(0)), feq(tv(b), tc(1))),
             fex_le(c, tv(a),
                    fex_le(d, tv(b),
                           fand(fcall("SEQ", {tv(c), tv(d), tv(w)}),
                                fand(feq(tv(a), tsucc(tv(c))),
                                     feq(tv(b), ttimes(tv(d), tc(2)))))))));
    dag.add({"Pow2Rel", 32, {X, Y},
             fex(w, fand(fcall("SEQ", {tv(X), tv(Y), tv(w)}),
                         fall_le(a, tv(w), fall_le(b, tv(w), closure))))});
  }
  // 33. g(a,b) and 34. h(a,b)
  {
    unsigned long x = binder(), w = binder(), m = binder(), n = binder(),
                  n2 = binder();
    auto diag_core = [&](bool negated) {
      FExprP member =
          negated ? fex_le(n2, tv(B),
                           fand(fstar({tv(n2), cNot, cLP, tv(n), cRP}),
                                fcall("ElementOf", {tv(n2), tv(B)})))
                  : fcall("ElementOf", {tv(n), tv(B)});
      return fex_le(
          x, tv(A),
          fand(fand(fand(fcall("Var", {tv(x)}),
                         fcall("Part", {tv(x), tv(A)})),
                    fcall("Free", {tv(x), tv(A)})),
               fand(fcall("Proof", {tv(B)}),
                    fex_le(w, tv(B),
                           fand(fcall("Pow2Rel", {tv(A), tsucc(tv(w))}),
                                fex_le(m, tv(B),
                                       fand(fcall("StarRel",
                                                  {tc(2), tv(w), tv(m)}),
                                            fex_le(n, tv(B),
                                                   fand(fcall("SubRel",
                                                              {tv(A), tv(x),
                                                               tv(m), tv(n)}),
                                                        member)))))))));
    };
    dag.add({"g", 33, {A, B}, diag_core(false)});
    dag.add({"h", 34, {A, B}, diag_core(true)});
  }
  // Rosser and Goedel sentence bodies over the free variable a.
  {
    unsigned long b = binder(), c = binder();
    dag.add({"rosser", 0, {A},
             fall(b, fimp(fcall("g", {tv(A), tv(b)}),
                          fex(c, fand(fleq(tv(c), tv(b)),
                                      fcall("h", {tv(A), tv(c)})))))});
    dag.add({"goedel", 0, {A},
             fall(b, fnot(fcall("g", {tv(A), tv(b)})))});
  }
  return dag;
}

// ----------------------------------------------------------- diagonals

namespace {

DiagonalSentence build_diag(const DefDag& dag, DiagonalKind kind,
                            const BuildOptions& opts) {
  const char* body = kind == DiagonalKind::Rosser ? "rosser" : "goedel";
  StatsOptions so;
  so.code_bit_guard = opts.code_bit_guard;
  SentenceStats st = stats(dag, body, so);
  DiagonalSentence out;
  out.kind = kind;
  out.body = body;
  out.body_count = st.expanded_symbol_count;
  out.body_bits = st.bit_length;
  out.q = st.godel_number;
  if (out.q) {
    // Diagonalize per the substitution convention, at the template level,
    // and measure exactly.
    const unsigned long A = 1;
    unsigned long b = 190, c = 191;
    FExprP conv_g = fall(A, fimp(feq(tv(A), tc(*out.q)),
                                 fcall("g", {tv(A), tv(b)})));
    FExprP matrix;
    if (kind == DiagonalKind::Rosser) {
      FExprP conv_h = fall(A, fimp(feq(tv(A), tc(*out.q)),
                                   fcall("h", {tv(A), tv(c)})));
      matrix = fall(b, fimp(conv_g, fex(c, fand(fleq(tv(c), tv(b)), conv_h))));
    } else {
      matrix = fall(b, fnot(conv_g));
    }
    DefDag tmp = dag; // local extension holding the diagonal
    Definition d;
    d.name = "_diagonal";
    d.params = {};
    d.body = matrix;
    tmp.add(std::move(d));
    SentenceStats dst = stats(tmp, "_diagonal", so);
    out.diagonal_count = BigSize{0, dst.expanded_symbol_count};
    out.diagonal_bits = BigSize{0, dst.bit_length};
  } else {
    // The numeral for q dominates; its length is of the order 2^bits.
    out.diagonal_count = BigSize{1, out.body_bits};
    out.diagonal_bits = BigSize{1, out.body_bits};
  }
  return out;
}

} // namespace

DiagonalSentence build_rosser(const DefDag& dag, const BuildOptions& opts) {
  return build_diag(dag, DiagonalKind::Rosser, opts);
}

DiagonalSentence build_goedel(const DefDag& dag, const BuildOptions& opts) {
  return build_diag(dag, DiagonalKind::Goedel, opts);
}

Ast diagonal_ast(const Ast& body, unsigned long var, const GodelNumber& q) {
  return subst_convention_paren(body, var, q);
}

} // namespace godel::builders
