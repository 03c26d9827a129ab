#include "godel/arith.hpp"

#include <array>
#include <functional>
#include <map>

#include "godel/calculus.hpp"
#include "godel/parse.hpp"

namespace godel::arith {

// ------------------------------------------------------------- registry

const std::vector<PredicateInfo>& registry() {
  static const std::vector<PredicateInfo> r = {
      {Pred::Div, "Div", 2, 1, false},
      {Pred::PowerOf2, "PowerOf2", 1, 2, false},
      {Pred::LeastPow2, "LeastPow2", 2, 3, false},
      {Pred::StarRel, "StarRel", 3, 4, false},
      {Pred::Begin, "Begin", 2, 5, false},
      {Pred::End, "End", 2, 6, false},
      {Pred::Part, "Part", 2, 7, false},
      {Pred::Succ, "Succ", 1, 8, false},
      {Pred::Var, "Var", 1, 9, false},
      {Pred::Num, "Num", 1, 10, false},
      {Pred::Seq, "Seq", 1, 11, false},
      {Pred::ElementOf, "ElementOf", 2, 12, false},
      {Pred::Before, "Before", 3, 13, false},
      {Pred::Term, "Term", 1, 14, true},
      {Pred::Atom, "Atom", 1, 15, false},
      {Pred::Gen, "Gen", 2, 16, false},
      {Pred::Form, "Form", 1, 17, true},
      {Pred::Pro, "Pro", 1, 18, false},
      {Pred::Prop1, "Prop1", 1, 0, false},
      {Pred::Prop2, "Prop2", 1, 0, false},
      {Pred::Prop3, "Prop3", 1, 0, false},
      {Pred::Prop4, "Prop4", 1, 0, false},
      {Pred::Prop5, "Prop5", 1, 0, false},
      {Pred::Prop6, "Prop6", 1, 0, false},
      {Pred::Prop7, "Prop7", 1, 0, false},
      {Pred::Prop8, "Prop8", 1, 0, false},
      {Pred::Prop9, "Prop9", 1, 0, false},
      {Pred::Prop10, "Prop10", 1, 0, false},
      {Pred::Prop11, "Prop11", 1, 0, false},
      {Pred::Free, "Free", 2, 19, false},
      {Pred::Pred1, "Pred1", 1, 20, false},
      {Pred::SeqPair, "SeqPair", 3, 21, false},
      {Pred::Alt, "Alt", 4, 22, true},
      {Pred::Pred2, "Pred2", 1, 23, false},
      {Pred::Nat, "Nat", 1, 24, false},
      {Pred::Nat1, "Nat1", 1, 0, false},
      {Pred::Nat2, "Nat2", 1, 0, false},
      {Pred::Nat3, "Nat3", 1, 0, false},
      {Pred::Nat4, "Nat4", 1, 0, false},
      {Pred::Nat5, "Nat5", 1, 0, false},
      {Pred::Nat6, "Nat6", 1, 0, false},
      {Pred::Nat7, "Nat7", 1, 0, false},
      {Pred::Nat8, "Nat8", 1, 0, false},
      {Pred::SubCode, "SubCode", 3, 25, false},
      {Pred::MI, "MI", 1, 26, false},
      {Pred::Axiom, "Axiom", 1, 27, false},
      {Pred::Proof, "Proof", 1, 28, false},
      {Pred::Pr, "Pr", 1, 29, true},
      {Pred::Re, "Re", 1, 30, true},
      {Pred::SEQ, "SEQ", 3, 31, false},
      {Pred::Pow2Rel, "Pow2Rel", 2, 32, true},
      {Pred::Gpred, "Gpred", 2, 33, false},
      {Pred::Hpred, "Hpred", 2, 34, false},
  };
  return r;
}

std::optional<Pred> pred_by_name(const std::string& name) {
  for (const auto& p : registry())
    if (name == p.name) return p.id;
  return std::nullopt;
}

const PredicateInfo& pred_info(Pred id) {
  for (const auto& p : registry())
    if (p.id == id) return p;
  throw std::logic_error("unregistered predicate");
}

// ------------------------------------------------- small bit-level items

namespace {

GodelNumber lp2(const GodelNumber& x) {
  // 2^ell(x); ell(0) = 0 per the coding convention.
  GodelNumber r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), ell(x));
  return r;
}

bool p_div(const GodelNumber& x, const GodelNumber& y) {
  if (y == 0) return true; // z = 0 works for any x
  if (x == 0) return false;
  return y % x == 0;
}

bool p_pow2(const GodelNumber& x) {
  if (x == 0) return true; // every z divides 0, vacuously a power of two
  return mpz_popcount(x.get_mpz_t()) == 1;
}

bool p_least_pow2(const GodelNumber& x, const GodelNumber& y) {
  return y == lp2(x);
}

bool p_star_rel(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z) {
  GodelNumber w = lp2(y);
  if (w > z) return false; // the witness is bounded by the result
  return z == w * x + y;
}

bool p_begin(const GodelNumber& x, const GodelNumber& y) { return is_begin(x, y); }
bool p_end(const GodelNumber& x, const GodelNumber& y) { return is_end(x, y); }
bool p_part(const GodelNumber& x, const GodelNumber& y) { return is_part(x, y); }

bool p_succ(const GodelNumber& x) {
  if (x == 0) return false;
  GodelNumber y = x + 1;
  return mpz_popcount(y.get_mpz_t()) == 1; // all ones: a run of primes
}

bool p_var(const GodelNumber& x) {
  auto toks = try_decode_tokens(x);
  if (!toks || toks->size() != 4) return false;
  const TokenString& t = *toks;
  return t[0].sym == Symbol::LParen && t[0].count == 1 &&
         t[1].sym == Symbol::Zero && t[1].count == 1 &&
         t[2].sym == Symbol::Prime && t[2].count >= 1 &&
         t[3].sym == Symbol::RParen && t[3].count == 1;
}

bool p_num(const GodelNumber& x) {
  auto toks = try_decode_tokens(x);
  if (!toks || toks->empty()) return false;
  const TokenString& t = *toks;
  if (t[0].sym != Symbol::Zero || t[0].count != 1) return false;
  if (t.size() == 1) return true;
  return t.size() == 2 && t[1].sym == Symbol::Prime;
}

const GodelNumber& comma_code() {
  static const GodelNumber c = symbol_code(Symbol::Comma);
  return c;
}

bool p_seq(const GodelNumber& x) { return is_part(comma_code(), x); }

bool p_element_of(const GodelNumber& x, const GodelNumber& y) {
  if (!p_seq(y)) return false;
  if (is_part(comma_code(), x)) return false;
  return is_begin(star(x, comma_code()), y) ||
         is_end(star(comma_code(), x), y) ||
         is_part(star(star(comma_code(), x), comma_code()), y);
}

// Occurrence positions of bits(x) in bits(y) with no boundary condition;
// returns the low offsets, descending.
std::vector<unsigned long> raw_offsets(const GodelNumber& x, const GodelNumber& y) {
  std::vector<unsigned long> out;
  if (x == 0 || y == 0) return out;
  unsigned long lx = ell(x), ly = ell(y);
  if (lx > ly) return out;
  for (unsigned long start = ly; start >= lx; --start) {
    unsigned long low = start - lx;
    if (mpz_tstbit(y.get_mpz_t(), start - 1) && bit_slice(y, low, lx) == x)
      out.push_back(low);
    if (start == lx) break;
  }
  return out;
}

bool p_before(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z) {
  if (!p_element_of(x, z) || !p_element_of(y, z)) return false;
  unsigned long lx = ell(x), lyy = ell(y);
  for (unsigned long ox : raw_offsets(x, z)) {
    for (unsigned long oy : part_offsets(y, z)) {
      // x occupies [ox, ox+lx); y occupies [oy, oy+ly); need the gap
      // between y's top and x's bottom to be empty or start with a 1.
      if (oy + lyy > ox) continue;
      unsigned long gap_top = ox; // exclusive
      unsigned long gap_bot = oy + lyy;
      if (gap_top == gap_bot) return true; // w = 0 vanishes
      if (mpz_tstbit(z.get_mpz_t(), gap_top - 1)) return true;
    }
  }
  return false;
}

bool p_seq_pair(const GodelNumber& x, const GodelNumber& y, const GodelNumber& u) {
  if (p_seq(x) || p_seq(y)) return false;
  if (x == 0 || y == 0) return false;
  return is_part(star(star(x, comma_code()), y), u);
}

GodelNumber prime_run_code(const GodelNumber& k) {
  if (!k.fits_ulong_p()) throw DecodeError("prime run too long");
  GodelNumber r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k.get_ui());
  return r - 1;
}

bool p_gen(const GodelNumber& x, const GodelNumber& y) {
  // y = all u ( x ) for some variable u
  auto toks = try_decode_tokens(y);
  if (!toks || toks->size() < 5) return false;
  const TokenString& t = *toks;
  if (!(t[0].sym == Symbol::ForAll && t[0].count == 1)) return false;
  if (!(t[1].sym == Symbol::LParen && t[1].count == 1)) return false;
  if (!(t[2].sym == Symbol::Zero && t[2].count == 1)) return false;
  if (!(t[3].sym == Symbol::Prime)) return false;
  if (!(t[4].sym == Symbol::RParen)) return false;
  GodelNumber u = star(star(star(symbol_code(Symbol::LParen),
                                 symbol_code(Symbol::Zero)),
                            prime_run_code(t[3].count)),
                       symbol_code(Symbol::RParen));
  GodelNumber expected = symbol_code(Symbol::ForAll);
  expected = star(expected, u);
  expected = star(expected, symbol_code(Symbol::LParen));
  expected = star(expected, x);
  expected = star(expected, symbol_code(Symbol::RParen));
  return expected == y;
}

bool p_free(const GodelNumber& x, const GodelNumber& y);

// --------------------------------------------- symbol-span recognizers

struct Ctx {
  std::vector<Symbol> syms;
  std::map<std::pair<std::size_t, std::size_t>, signed char> form_memo;
  std::map<std::pair<std::size_t, std::size_t>, signed char> term_memo;

  TokenString slice_tokens(std::size_t lo, std::size_t hi) const {
    TokenString out;
    for (std::size_t i = lo; i < hi; ++i) {
      if (!out.empty() && out.back().sym == syms[i])
        out.back().count += 1;
      else
        out.push_back(SymbolRun{syms[i], 1});
    }
    return out;
  }

  bool is_form(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    auto it = form_memo.find(key);
    if (it != form_memo.end()) return it->second;
    CanonicalOptions o;
    o.sugar = false;
    o.paren = false;
    o.leq_atom = true;
    bool r = parse_canonical_formula(slice_tokens(lo, hi), o).has_value();
    form_memo[key] = r;
    return r;
  }

  bool is_term(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    auto it = term_memo.find(key);
    if (it != term_memo.end()) return it->second;
    CanonicalOptions o;
    bool r = parse_canonical_term(slice_tokens(lo, hi), o).has_value();
    term_memo[key] = r;
    return r;
  }

  bool is_var_span(std::size_t lo, std::size_t hi) const {
    if (hi - lo < 4) return false;
    if (syms[lo] != Symbol::LParen || syms[lo + 1] != Symbol::Zero) return false;
    if (syms[hi - 1] != Symbol::RParen) return false;
    for (std::size_t i = lo + 2; i + 1 < hi; ++i)
      if (syms[i] != Symbol::Prime) return false;
    return true;
  }

  GodelNumber span_code(std::size_t lo, std::size_t hi) const {
    GodelNumber acc = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), exponent(syms[i]) + 1);
      mpz_setbit(acc.get_mpz_t(), exponent(syms[i]));
    }
    return acc;
  }
};

std::optional<Ctx> make_ctx(const GodelNumber& x) {
  auto toks = try_decode_tokens(x);
  if (!toks) return std::nullopt;
  GodelNumber total = 0;
  for (const auto& r : *toks) total += r.count;
  if (!total.fits_ulong_p() || total.get_ui() > (64ul << 20))
    throw DecodeError("expression too large for span analysis");
  Ctx c;
  c.syms.reserve(total.get_ui());
  for (const auto& r : *toks)
    for (unsigned long i = 0, n = r.count.get_ui(); i < n; ++i)
      c.syms.push_back(r.sym);
  return c;
}

bool span_form(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c) return false;
  return c->is_form(0, c->syms.size());
}

bool span_term(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c) return false;
  return c->is_term(0, c->syms.size());
}

bool p_atom(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  CanonicalOptions o;
  o.sugar = false;
  o.paren = false;
  o.leq_atom = true;
  auto f = parse_canonical_formula(c->slice_tokens(0, c->syms.size()), o);
  if (!f) return false;
  return (*f)->kind == Node::Eq || (*f)->kind == Node::LeqAtom;
}

// item 19: every variable that occurs as a part of the term E_x, other
// than E_x itself (the search stops strictly below x), is not universally
// bound anywhere in E_y.
bool p_free(const GodelNumber& x, const GodelNumber& y) {
  if (!span_term(x)) return false;
  auto c = make_ctx(x);
  if (!c) return false;
  std::size_t n = c->syms.size();
  for (std::size_t lo = 0; lo + 3 < n; ++lo) {
    if (c->syms[lo] != Symbol::LParen || c->syms[lo + 1] != Symbol::Zero)
      continue;
    std::size_t hi = lo + 2;
    while (hi < n && c->syms[hi] == Symbol::Prime) ++hi;
    if (hi >= n || c->syms[hi] != Symbol::RParen || hi == lo + 2) continue;
    ++hi;
    GodelNumber z = c->span_code(lo, hi);
    if (z >= x) continue; // strictly below x
    if (is_part(star(symbol_code(Symbol::ForAll), z), y)) return false;
  }
  return true;
}

// ------------------------------------------------- axiom template engine

struct TPiece {
  enum K { Lit, FormSlot, TermSlot, VarSlot } k;
  Symbol sym = Symbol::Prime;
  int slot = 0;
};

TPiece L(Symbol s) { return TPiece{TPiece::Lit, s, 0}; }
TPiece Fo(int i) { return TPiece{TPiece::FormSlot, Symbol::Prime, i}; }
TPiece Te(int i) { return TPiece{TPiece::TermSlot, Symbol::Prime, i}; }
TPiece Va(int i) { return TPiece{TPiece::VarSlot, Symbol::Prime, i}; }

struct Matcher {
  Ctx& c;
  const std::vector<TPiece>& pieces;
  std::array<std::optional<std::pair<std::size_t, std::size_t>>, 4> bind;
  std::vector<int> depth; // paren depth before each symbol

  explicit Matcher(Ctx& ctx, const std::vector<TPiece>& ps) : c(ctx), pieces(ps) {
    depth.resize(c.syms.size() + 1, 0);
    for (std::size_t i = 0; i < c.syms.size(); ++i) {
      int d = depth[i];
      if (c.syms[i] == Symbol::LParen) ++d;
      if (c.syms[i] == Symbol::RParen) --d;
      depth[i + 1] = d;
    }
  }

  bool spans_equal(std::pair<std::size_t, std::size_t> a,
                   std::pair<std::size_t, std::size_t> b) const {
    if (a.second - a.first != b.second - b.first) return false;
    for (std::size_t i = 0; i < a.second - a.first; ++i)
      if (c.syms[a.first + i] != c.syms[b.first + i]) return false;
    return true;
  }

  bool slot_ok(const TPiece& p, std::size_t lo, std::size_t hi) {
    switch (p.k) {
      case TPiece::FormSlot: return c.is_form(lo, hi);
      case TPiece::TermSlot: return c.is_term(lo, hi);
      case TPiece::VarSlot: return c.is_var_span(lo, hi);
      default: return false;
    }
  }

  bool match(std::size_t pi, std::size_t pos) {
    if (pi == pieces.size()) return pos == c.syms.size();
    const TPiece& p = pieces[pi];
    if (p.k == TPiece::Lit) {
      return pos < c.syms.size() && c.syms[pos] == p.sym && match(pi + 1, pos + 1);
    }
    if (bind[p.slot]) {
      auto b = *bind[p.slot];
      std::size_t len = b.second - b.first;
      if (pos + len > c.syms.size()) return false;
      if (!spans_equal(b, {pos, pos + len})) return false;
      return match(pi + 1, pos + len);
    }
    // Next literal anchors the extent; balanced-paren extents only.
    std::optional<Symbol> anchor;
    if (pi + 1 < pieces.size() && pieces[pi + 1].k == TPiece::Lit)
      anchor = pieces[pi + 1].sym;
    for (std::size_t end = pos + 1; end <= c.syms.size(); ++end) {
      if (depth[end] != depth[pos]) continue;
      if (anchor) {
        if (end >= c.syms.size()) break;
        if (c.syms[end] != *anchor) continue;
      }
      if (!slot_ok(p, pos, end)) continue;
      bind[p.slot] = {pos, end};
      if (match(pi + 1, end)) return true;
      bind[p.slot] = std::nullopt;
    }
    return false;
  }
};

using Sy = Symbol;

const std::vector<TPiece>& prop_template(int i) {
  static const std::vector<TPiece> t[11] = {
      // 1: a => ( b => a )
      {Fo(0), L(Sy::Imp), L(Sy::LParen), Fo(1), L(Sy::Imp), Fo(0), L(Sy::RParen)},
      // 2: ( a => b ) => ( ( a => ( b => c ) ) => ( a => c ) )
      {L(Sy::LParen), Fo(0), L(Sy::Imp), Fo(1), L(Sy::RParen), L(Sy::Imp),
       L(Sy::LParen), L(Sy::LParen), Fo(0), L(Sy::Imp), L(Sy::LParen), Fo(1),
       L(Sy::Imp), Fo(2), L(Sy::RParen), L(Sy::RParen), L(Sy::Imp),
       L(Sy::LParen), Fo(0), L(Sy::Imp), Fo(2), L(Sy::RParen), L(Sy::RParen)},
      // 3: a => ( ( a => b ) => b )
      {Fo(0), L(Sy::Imp), L(Sy::LParen), L(Sy::LParen), Fo(0), L(Sy::Imp),
       Fo(1), L(Sy::RParen), L(Sy::Imp), Fo(1), L(Sy::RParen)},
      // 4: a => ( b => a /\ b )
      {Fo(0), L(Sy::Imp), L(Sy::LParen), Fo(1), L(Sy::Imp), Fo(0), L(Sy::And),
       Fo(1), L(Sy::RParen)},
      // 5: a /\ b => a
      {Fo(0), L(Sy::And), Fo(1), L(Sy::Imp), Fo(0)},
      // 6: a /\ b => b
      {Fo(0), L(Sy::And), Fo(1), L(Sy::Imp), Fo(1)},
      // 7: a => a \/ b
      {Fo(0), L(Sy::Imp), Fo(0), L(Sy::Or), Fo(1)},
      // 8: b => a \/ b
      {Fo(1), L(Sy::Imp), Fo(0), L(Sy::Or), Fo(1)},
      // 9: ( a => c ) => ( ( b => c ) => ( a \/ b => c ) )
      {L(Sy::LParen), Fo(0), L(Sy::Imp), Fo(2), L(Sy::RParen), L(Sy::Imp),
       L(Sy::LParen), L(Sy::LParen), Fo(1), L(Sy::Imp), Fo(2), L(Sy::RParen),
       L(Sy::Imp), L(Sy::LParen), Fo(0), L(Sy::Or), Fo(1), L(Sy::Imp), Fo(2),
       L(Sy::RParen), L(Sy::RParen)},
      // 10: ( a => b ) => ( ( a => ~ b ) => ~ a )
      {L(Sy::LParen), Fo(0), L(Sy::Imp), Fo(1), L(Sy::RParen), L(Sy::Imp),
       L(Sy::LParen), L(Sy::LParen), Fo(0), L(Sy::Imp), L(Sy::Not), Fo(1),
       L(Sy::RParen), L(Sy::Imp), L(Sy::Not), Fo(0), L(Sy::RParen)},
      // 11: ~ ~ a => a
      {L(Sy::Not), L(Sy::Not), Fo(0), L(Sy::Imp), Fo(0)},
  };
  return t[i - 1];
}

const std::vector<TPiece>& nat_template(int i) {
  static const std::vector<TPiece> t[8] = {
      // 1: a ' = b ' => a = b
      {Te(0), L(Sy::Prime), L(Sy::Equal), Te(1), L(Sy::Prime), L(Sy::Imp),
       Te(0), L(Sy::Equal), Te(1)},
      // 2: ~ ( a ' = 0 )
      {L(Sy::Not), L(Sy::LParen), Te(0), L(Sy::Prime), L(Sy::Equal), L(Sy::Zero),
       L(Sy::RParen)},
      // 3: a = b => ( a = c => b = c )
      {Te(0), L(Sy::Equal), Te(1), L(Sy::Imp), L(Sy::LParen), Te(0),
       L(Sy::Equal), Te(2), L(Sy::Imp), Te(1), L(Sy::Equal), Te(2),
       L(Sy::RParen)},
      // 4: a = b => a ' = b '
      {Te(0), L(Sy::Equal), Te(1), L(Sy::Imp), Te(0), L(Sy::Prime),
       L(Sy::Equal), Te(1), L(Sy::Prime)},
      // 5: a + 0 = a
      {Te(0), L(Sy::Plus), L(Sy::Zero), L(Sy::Equal), Te(0)},
      // 6: a + b ' = ( a + b ) '
      {Te(0), L(Sy::Plus), Te(1), L(Sy::Prime), L(Sy::Equal), L(Sy::LParen),
       Te(0), L(Sy::Plus), Te(1), L(Sy::RParen), L(Sy::Prime)},
      // 7: a * 0 = 0
      {Te(0), L(Sy::Times), L(Sy::Zero), L(Sy::Equal), L(Sy::Zero)},
      // 8: a * b ' = a * b + a
      {Te(0), L(Sy::Times), Te(1), L(Sy::Prime), L(Sy::Equal), Te(0),
       L(Sy::Times), Te(1), L(Sy::Plus), Te(0)},
  };
  return t[i - 1];
}

bool match_template(Ctx& c, const std::vector<TPiece>& pieces,
                    Matcher* out = nullptr) {
  Matcher m(c, pieces);
  bool ok = m.match(0, 0);
  if (ok && out) *out = m;
  return ok;
}

bool p_prop(int i, const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  return match_template(*c, prop_template(i));
}

bool p_nat_i(int i, const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  return match_template(*c, nat_template(i));
}

bool p_pro(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  for (int i = 1; i <= 11; ++i)
    if (match_template(*c, prop_template(i))) return true;
  return false;
}

bool p_nat(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  for (int i = 1; i <= 8; ++i)
    if (match_template(*c, nat_template(i))) return true;
  return false;
}

// item 20: ( b => a ) => ( b => ( all c a ) ), c not a part of b.
bool p_pred1(const GodelNumber& x) {
  auto c = make_ctx(x);
  if (!c || c->syms.empty()) return false;
  static const std::vector<TPiece> t = {
      L(Sy::LParen), Fo(1), L(Sy::Imp), Fo(0), L(Sy::RParen), L(Sy::Imp),
      L(Sy::LParen), Fo(1), L(Sy::Imp), L(Sy::LParen), L(Sy::ForAll), Va(2),
      Fo(0), L(Sy::RParen), L(Sy::RParen)};
  Matcher m(*c, t);
  // Enumerate matches to enforce the side condition on each.
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t pi,
                                                         std::size_t pos) -> bool {
    if (pi == t.size()) {
      if (pos != c->syms.size()) return false;
      auto vb = *m.bind[1];
      auto vc = *m.bind[2];
      GodelNumber cc = c->span_code(vc.first, vc.second);
      GodelNumber bc = c->span_code(vb.first, vb.second);
      return !is_part(cc, bc);
    }
    const TPiece& p = t[pi];
    if (p.k == TPiece::Lit)
      return pos < c->syms.size() && c->syms[pos] == p.sym && go(pi + 1, pos + 1);
    if (m.bind[p.slot]) {
      auto b = *m.bind[p.slot];
      std::size_t len = b.second - b.first;
      if (pos + len > c->syms.size()) return false;
      if (!m.spans_equal(b, {pos, pos + len})) return false;
      return go(pi + 1, pos + len);
    }
    std::optional<Symbol> anchor;
    if (pi + 1 < t.size() && t[pi + 1].k == TPiece::Lit) anchor = t[pi + 1].sym;
    for (std::size_t end = pos + 1; end <= c->syms.size(); ++end) {
      if (m.depth[end] != m.depth[pos]) continue;
      if (anchor) {
        if (end >= c->syms.size()) break;
        if (c->syms[end] != *anchor) continue;
      }
      if (!m.slot_ok(p, pos, end)) continue;
      m.bind[p.slot] = {pos, end};
      if (go(pi + 1, end)) return true;
      m.bind[p.slot] = std::nullopt;
    }
    return false;
  };
  return go(0, 0);
}

// Replace every occurrence of the variable string u in src by t.
std::vector<Symbol> replace_all(const std::vector<Symbol>& src,
                                const std::vector<Symbol>& u,
                                const std::vector<Symbol>& t) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < src.size()) {
    if (i + u.size() <= src.size() &&
        std::equal(u.begin(), u.end(), src.begin() + i)) {
      out.insert(out.end(), t.begin(), t.end());
      i += u.size();
    } else {
      out.push_back(src[i++]);
    }
  }
  return out;
}

std::vector<Symbol> var_symbols(unsigned long k) {
  std::vector<Symbol> v{Symbol::LParen, Symbol::Zero};
  for (unsigned long i = 0; i < k; ++i) v.push_back(Symbol::Prime);
  v.push_back(Symbol::RParen);
  return v;
}

GodelNumber symbols_code(const std::vector<Symbol>& s) {
  GodelNumber acc = 0;
  for (Symbol sym : s) {
    mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), exponent(sym) + 1);
    mpz_setbit(acc.get_mpz_t(), exponent(sym));
  }
  return acc;
}

// Parser-assisted decision for item 22.
bool alt_decision(const GodelNumber& x, const GodelNumber& y,
                  const GodelNumber& u, const GodelNumber& t) {
  if (!span_form(x) || !span_form(y)) return false;
  if (!p_var(u)) return false;
  if (!span_term(t)) return false;
  if (!p_free(u, y) || !p_free(t, y)) return false;
  if (!is_part(u, y) || is_part(u, x)) return false;
  auto cy = make_ctx(y);
  auto cu = make_ctx(u);
  auto ct = make_ctx(t);
  if (!cy || !cu || !ct) return false;
  std::vector<Symbol> replaced = replace_all(cy->syms, cu->syms, ct->syms);
  return symbols_code(replaced) == x;
}

// item 23: all [var b] [form a] => [alt-result c], with c = alt_a(b,t).
bool p_pred2(const GodelNumber& x) {
  auto ctx = make_ctx(x);
  if (!ctx || ctx->syms.size() < 6) return false;
  Ctx& c = *ctx;
  std::size_t n = c.syms.size();
  if (c.syms[0] != Symbol::ForAll) return false;
  // variable b
  std::size_t vb_end = 1;
  if (vb_end >= n || c.syms[vb_end] != Symbol::LParen) return false;
  std::size_t hi = vb_end + 1;
  while (hi < n && c.syms[hi] != Symbol::RParen) ++hi;
  if (hi >= n) return false;
  ++hi;
  if (!c.is_var_span(vb_end, hi)) return false;
  std::size_t a_start = hi;
  std::vector<Symbol> u(c.syms.begin() + vb_end, c.syms.begin() + hi);
  // depth array over the remainder for the => split
  std::vector<int> depth(n + 1, 0);
  for (std::size_t i = a_start; i < n; ++i) {
    int d = depth[i];
    if (c.syms[i] == Symbol::LParen) ++d;
    if (c.syms[i] == Symbol::RParen) --d;
    depth[i + 1] = d;
  }
  for (std::size_t split = a_start + 1; split < n; ++split) {
    if (c.syms[split] != Symbol::Imp || depth[split] != 0) continue;
    std::size_t a_end = split, c_start = split + 1;
    if (!c.is_form(a_start, a_end)) continue;
    std::vector<Symbol> a_syms(c.syms.begin() + a_start, c.syms.begin() + a_end);
    std::vector<Symbol> c_syms(c.syms.begin() + c_start, c.syms.end());
    // Find the first occurrence of u in a to infer t from c.
    std::size_t occ = a_syms.size();
    for (std::size_t i = 0; i + u.size() <= a_syms.size(); ++i) {
      if (std::equal(u.begin(), u.end(), a_syms.begin() + i)) {
        occ = i;
        break;
      }
    }
    if (occ == a_syms.size()) continue; // u must occur in a
    if (occ > c_syms.size()) continue;
    if (!std::equal(a_syms.begin(), a_syms.begin() + occ, c_syms.begin()))
      continue;
    // Try prefixes of the remainder of c as the substituted term.
    for (std::size_t tlen = 1; occ + tlen <= c_syms.size(); ++tlen) {
      TokenString tt;
      for (std::size_t i = occ; i < occ + tlen; ++i) {
        if (!tt.empty() && tt.back().sym == c_syms[i])
          tt.back().count += 1;
        else
          tt.push_back(SymbolRun{c_syms[i], 1});
      }
      CanonicalOptions o;
      if (!parse_canonical_term(tt, o)) continue;
      std::vector<Symbol> t_syms(c_syms.begin() + occ, c_syms.begin() + occ + tlen);
      std::vector<Symbol> replaced = replace_all(a_syms, u, t_syms);
      if (replaced != c_syms) continue;
      GodelNumber a_code = symbols_code(a_syms);
      GodelNumber c_code = symbols_code(c_syms);
      GodelNumber u_code = symbols_code(u);
      GodelNumber t_code = symbols_code(t_syms);
      if (alt_decision(c_code, a_code, u_code, t_code)) return true;
    }
  }
  return false;
}

// item 26 helper: match all b ( ( b = <y> ) => ( <a> ) ) at pos; returns
// (b-span, y-span, a-span, end).
struct SubMatch {
  std::pair<std::size_t, std::size_t> b, y, a;
  std::size_t end;
};

std::optional<SubMatch> match_sub(Ctx& c, std::size_t pos) {
  std::size_t n = c.syms.size();
  auto lit = [&](std::size_t& p, Symbol s) {
    if (p < n && c.syms[p] == s) {
      ++p;
      return true;
    }
    return false;
  };
  std::size_t p = pos;
  if (!lit(p, Symbol::ForAll)) return std::nullopt;
  std::size_t b_lo = p;
  if (!lit(p, Symbol::LParen)) return std::nullopt;
  while (p < n && c.syms[p] != Symbol::RParen) ++p;
  if (p >= n) return std::nullopt;
  ++p;
  std::size_t b_hi = p;
  if (!c.is_var_span(b_lo, b_hi)) return std::nullopt;
  if (!lit(p, Symbol::LParen)) return std::nullopt;
  if (!lit(p, Symbol::LParen)) return std::nullopt;
  // repeated b
  std::size_t blen = b_hi - b_lo;
  if (p + blen > n) return std::nullopt;
  for (std::size_t i = 0; i < blen; ++i)
    if (c.syms[p + i] != c.syms[b_lo + i]) return std::nullopt;
  p += blen;
  if (!lit(p, Symbol::Equal)) return std::nullopt;
  // y extends to the matching close paren (depth 0 within this group)
  std::size_t y_lo = p;
  int d = 0;
  while (p < n) {
    if (c.syms[p] == Symbol::LParen) ++d;
    if (c.syms[p] == Symbol::RParen) {
      if (d == 0) break;
      --d;
    }
    ++p;
  }
  if (p >= n) return std::nullopt;
  std::size_t y_hi = p;
  if (y_hi == y_lo) return std::nullopt;
  ++p; // close of (b=y)
  if (!lit(p, Symbol::Imp)) return std::nullopt;
  if (!lit(p, Symbol::LParen)) return std::nullopt;
  std::size_t a_lo = p;
  d = 0;
  while (p < n) {
    if (c.syms[p] == Symbol::LParen) ++d;
    if (c.syms[p] == Symbol::RParen) {
      if (d == 0) break;
      --d;
    }
    ++p;
  }
  if (p >= n) return std::nullopt;
  std::size_t a_hi = p;
  ++p; // close of (a)
  if (!lit(p, Symbol::RParen)) return std::nullopt;
  return SubMatch{{b_lo, b_hi}, {y_lo, y_hi}, {a_lo, a_hi}, p};
}

bool spans_eq(Ctx& c, std::pair<std::size_t, std::size_t> a,
              std::pair<std::size_t, std::size_t> b) {
  if (a.second - a.first != b.second - b.first) return false;
  for (std::size_t i = 0; i < a.second - a.first; ++i)
    if (c.syms[a.first + i] != c.syms[b.first + i]) return false;
  return true;
}

// item 26: ( sub(b,0) /\ all c ( sub(b,c) => sub(b,c') ) ) => all c sub(b,c)
bool p_mi(const GodelNumber& x) {
  auto ctx = make_ctx(x);
  if (!ctx || ctx->syms.size() < 10) return false;
  Ctx& c = *ctx;
  std::size_t n = c.syms.size();
  std::size_t p = 0;
  auto lit = [&](Symbol s) {
    if (p < n && c.syms[p] == s) {
      ++p;
      return true;
    }
    return false;
  };
  if (!lit(Symbol::LParen)) return false;
  auto s1 = match_sub(c, p);
  if (!s1) return false;
  p = s1->end;
  // y of s1 must be the single symbol 0
  if (!(s1->y.second - s1->y.first == 1 && c.syms[s1->y.first] == Symbol::Zero))
    return false;
  if (!lit(Symbol::And)) return false;
  if (!lit(Symbol::ForAll)) return false;
  std::size_t cv_lo = p;
  if (!lit(Symbol::LParen)) return false;
  while (p < n && c.syms[p] != Symbol::RParen) ++p;
  if (p >= n) return false;
  ++p;
  std::size_t cv_hi = p;
  if (!c.is_var_span(cv_lo, cv_hi)) return false;
  if (!lit(Symbol::LParen)) return false;
  auto s2 = match_sub(c, p);
  if (!s2) return false;
  p = s2->end;
  if (!lit(Symbol::Imp)) return false;
  auto s3 = match_sub(c, p);
  if (!s3) return false;
  p = s3->end;
  if (!lit(Symbol::RParen)) return false;
  if (!lit(Symbol::RParen)) return false;
  if (!lit(Symbol::Imp)) return false;
  if (!lit(Symbol::ForAll)) return false;
  std::size_t cv2_lo = p;
  if (p >= n || c.syms[p] != Symbol::LParen) return false;
  ++p;
  while (p < n && c.syms[p] != Symbol::RParen) ++p;
  if (p >= n) return false;
  ++p;
  std::size_t cv2_hi = p;
  if (!spans_eq(c, {cv_lo, cv_hi}, {cv2_lo, cv2_hi})) return false;
  auto s4 = match_sub(c, p);
  if (!s4) return false;
  if (s4->end != n) return false;
  // consistency: same b, same a across all four; y2 = c, y3 = c', y4 = c.
  if (!spans_eq(c, s1->b, s2->b) || !spans_eq(c, s1->b, s3->b) ||
      !spans_eq(c, s1->b, s4->b))
    return false;
  if (!spans_eq(c, s1->a, s2->a) || !spans_eq(c, s1->a, s3->a) ||
      !spans_eq(c, s1->a, s4->a))
    return false;
  if (!spans_eq(c, s2->y, {cv_lo, cv_hi})) return false;
  if (!spans_eq(c, s4->y, {cv_lo, cv_hi})) return false;
  // y3 = c followed by one prime
  if (s3->y.second - s3->y.first != cv_hi - cv_lo + 1) return false;
  if (!spans_eq(c, {s3->y.first, s3->y.second - 1}, {cv_lo, cv_hi})) return false;
  if (c.syms[s3->y.second - 1] != Symbol::Prime) return false;
  if (!c.is_form(s1->a.first, s1->a.second)) return false;
  // b and c must be variables (checked) and distinct spellings.
  if (spans_eq(c, s1->b, {cv_lo, cv_hi})) return false;
  return true;
}

bool p_axiom(const GodelNumber& x) {
  return p_pro(x) || p_pred1(x) || p_pred2(x) || p_nat(x) || p_mi(x);
}

// ------------------------------------------------------------- item 28

bool p_proof(const GodelNumber& x) {
  if (!p_seq(x)) return false;
  if (!try_decode_tokens(x)) return false; // marker runs never justify
  std::vector<GodelNumber> elems = sequence_elements(x);
  GodelNumber imp = symbol_code(Symbol::Imp);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const GodelNumber& y = elems[i];
    bool ok = false;
    try {
      ok = p_axiom(y);
    } catch (const DecodeError&) {
      ok = false;
    }
    if (ok) continue;
    // modus ponens: earlier elements v and w with w = v => y
    for (std::size_t a = 0; a < elems.size() && !ok; ++a) {
      if (!p_before(elems[a], y, x)) continue;
      for (std::size_t b = 0; b < elems.size() && !ok; ++b) {
        if (!p_before(elems[b], y, x)) continue;
        if (elems[b] == star(star(elems[a], imp), y)) ok = true;
      }
    }
    if (ok) continue;
    // generalization shape: v = b => a, y = b => c, c = all u ( a ),
    // no variable z <= a occurring as a part of b.
    for (std::size_t a = 0; a < elems.size() && !ok; ++a) {
      const GodelNumber& v = elems[a];
      if (!p_before(v, y, x)) continue;
      bool have_w = false;
      for (std::size_t b2 = 0; b2 < elems.size() && !have_w; ++b2)
        if (p_before(elems[b2], y, x)) have_w = true;
      if (!have_w) continue;
      auto vt = try_decode_tokens(v);
      if (!vt) continue;
      // enumerate => symbol positions in v as the b|a split
      std::vector<Symbol> vs;
      {
        GodelNumber total = 0;
        for (const auto& r : *vt) total += r.count;
        if (!total.fits_ulong_p()) continue;
        vs.reserve(total.get_ui());
        for (const auto& r : *vt)
          for (unsigned long k = 0, m = r.count.get_ui(); k < m; ++k)
            vs.push_back(r.sym);
      }
      for (std::size_t s = 0; s + 1 < vs.size() && !ok; ++s) {
        if (vs[s] != Symbol::Imp) continue;
        std::vector<Symbol> bsy(vs.begin(), vs.begin() + s);
        std::vector<Symbol> asy(vs.begin() + s + 1, vs.end());
        if (bsy.empty() || asy.empty()) continue;
        GodelNumber bcode = symbols_code(bsy);
        GodelNumber acode = symbols_code(asy);
        // y = b => c
        GodelNumber prefix = star(bcode, imp);
        if (!is_begin(prefix, y) && prefix != y) continue;
        unsigned long lp = ell(prefix), lyv = ell(y);
        if (lp >= lyv) continue;
        GodelNumber ccode = bit_slice(y, 0, lyv - lp);
        if (star(prefix, ccode) != y) continue;
        if (!p_gen(acode, ccode)) continue;
        // every variable value z <= a must not be a part of b
        bool clean = true;
        for (unsigned long k = 1; clean; ++k) {
          GodelNumber z = symbols_code(var_symbols(k));
          if (z > acode) break;
          if (p_var(z) && is_part(z, bcode)) clean = false;
        }
        if (clean) ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<GodelNumber> sequence_elements(const GodelNumber& x) {
  std::vector<GodelNumber> out;
  auto toks = try_decode_tokens(x);
  if (!toks) {
    // Not a symbol string: fall back to bit-level comma splitting.
    std::vector<unsigned long> commas = raw_offsets(comma_code(), x);
    if (commas.empty()) {
      out.push_back(x);
      return out;
    }
    unsigned long prev_top = ell(x);
    for (unsigned long off : commas) {
      // occurrence spans [off, off+18)
      out.push_back(bit_slice(x, off + 18, prev_top - (off + 18)));
      prev_top = off;
    }
    out.push_back(bit_slice(x, 0, prev_top));
    return out;
  }
  TokenString cur;
  auto flush = [&]() {
    out.push_back(encode_tokens(cur));
    cur.clear();
  };
  for (const auto& r : *toks) {
    if (r.sym == Symbol::Comma) {
      unsigned long k = r.count.get_ui();
      for (unsigned long i = 0; i < k; ++i) flush();
    } else {
      cur.push_back(r);
    }
  }
  flush();
  return out;
}

// --------------------------------------------------------- sub/neq/leq

} // namespace

GodelNumber sub_code(const GodelNumber& a, const GodelNumber& x,
                     const GodelNumber& y) {
  GodelNumber acc = symbol_code(Symbol::ForAll);
  acc = star(acc, x);
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, x);
  acc = star(acc, symbol_code(Symbol::Equal));
  acc = star(acc, y);
  acc = star(acc, symbol_code(Symbol::RParen));
  acc = star(acc, symbol_code(Symbol::Imp));
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, a);
  acc = star(acc, symbol_code(Symbol::RParen));
  acc = star(acc, symbol_code(Symbol::RParen));
  return acc;
}

GodelNumber neq_code(const GodelNumber& x, const GodelNumber& y) {
  GodelNumber acc = symbol_code(Symbol::Not);
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, x);
  acc = star(acc, symbol_code(Symbol::Equal));
  acc = star(acc, y);
  acc = star(acc, symbol_code(Symbol::RParen));
  return acc;
}

GodelNumber leq_code(const GodelNumber& x, const GodelNumber& y) {
  GodelNumber v1 = star(star(symbol_code(Symbol::LParen),
                             star(symbol_code(Symbol::Zero),
                                  symbol_code(Symbol::Prime))),
                        symbol_code(Symbol::RParen));
  GodelNumber xp = star(star(x, symbol_code(Symbol::Plus)), v1);
  GodelNumber acc = symbol_code(Symbol::Not);
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, symbol_code(Symbol::ForAll));
  acc = star(acc, v1);
  acc = star(acc, symbol_code(Symbol::LParen));
  acc = star(acc, neq_code(xp, y));
  acc = star(acc, symbol_code(Symbol::RParen));
  acc = star(acc, symbol_code(Symbol::RParen));
  return acc;
}

// ------------------------------------------------------------ witnesses

namespace {

void collect_subterms(const Ast& t, std::vector<GodelNumber>& out) {
  if (!t) return;
  switch (t->kind) {
    case Node::Succ:
      collect_subterms(t->a, out);
      break;
    case Node::Sum:
    case Node::Prod:
      collect_subterms(t->a, out);
      collect_subterms(t->b, out);
      break;
    default:
      break;
  }
  GodelNumber code = encode_ast(t);
  for (const auto& c : out)
    if (c == code) return;
  out.push_back(code);
}

void collect_subforms(const Ast& f, std::vector<GodelNumber>& out) {
  if (!f) return;
  switch (f->kind) {
    case Node::Imp:
      collect_subforms(f->a, out);
      collect_subforms(f->b, out);
      break;
    case Node::Not:
    case Node::ForAll:
      collect_subforms(f->a, out);
      break;
    default:
      break; // atoms (Eq, LeqAtom) are leaves
  }
  GodelNumber code = encode_ast(f);
  for (const auto& c : out)
    if (c == code) return;
  out.push_back(code);
}

GodelNumber join_sequence(const std::vector<GodelNumber>& elems) {
  GodelNumber acc = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) acc = star(acc, comma_code());
    acc = star(acc, elems[i]);
  }
  return acc;
}

} // namespace

std::optional<GodelNumber> term_witness(const GodelNumber& x) {
  auto toks = try_decode_tokens(x);
  if (!toks) return std::nullopt;
  CanonicalOptions o;
  auto t = parse_canonical_term(*toks, o);
  if (!t) return std::nullopt;
  std::vector<GodelNumber> elems;
  collect_subterms(*t, elems);
  if (elems.size() == 1) elems.push_back(elems[0]);
  return join_sequence(elems);
}

std::optional<GodelNumber> form_witness(const GodelNumber& x) {
  auto toks = try_decode_tokens(x);
  if (!toks) return std::nullopt;
  CanonicalOptions o;
  o.sugar = false;
  o.paren = false;
  o.leq_atom = true;
  auto f = parse_canonical_formula(*toks, o);
  if (!f) return std::nullopt;
  std::vector<GodelNumber> elems;
  collect_subforms(*f, elems);
  if (elems.size() == 1) elems.push_back(elems[0]);
  return join_sequence(elems);
}

bool validate_term_sequence(const GodelNumber& x, const GodelNumber& y,
                            const SearchBudget& budget) {
  if (!p_element_of(x, y)) return false;
  std::vector<GodelNumber> elems = sequence_elements(y);
  if (elems.size() > budget.element_bound) return false;
  auto lp = symbol_code(Symbol::LParen);
  auto rp = symbol_code(Symbol::RParen);
  for (const GodelNumber& z : elems) {
    if (p_var(z) || p_num(z)) continue;
    bool ok = false;
    for (const GodelNumber& v : elems) {
      if (ok) break;
      if (!p_before(v, z, y)) continue;
      for (const GodelNumber& w : elems) {
        if (ok) break;
        if (!p_before(w, z, y)) continue;
        GodelNumber lv = star(star(lp, v), rp);
        GodelNumber rw = star(star(lp, w), rp);
        if (z == star(star(lv, symbol_code(Symbol::Plus)), rw)) ok = true;
        else if (z == star(star(lv, symbol_code(Symbol::Times)), rw)) ok = true;
      }
      if (!ok && z == star(star(star(lp, v), rp), symbol_code(Symbol::Prime)))
        ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

bool validate_form_sequence(const GodelNumber& x, const GodelNumber& y,
                            const SearchBudget& budget) {
  if (!p_element_of(x, y)) return false;
  std::vector<GodelNumber> elems = sequence_elements(y);
  if (elems.size() > budget.element_bound) return false;
  auto lp = symbol_code(Symbol::LParen);
  auto rp = symbol_code(Symbol::RParen);
  for (const GodelNumber& z : elems) {
    bool ok = false;
    try {
      ok = p_atom(z);
    } catch (const DecodeError&) {
      ok = false;
    }
    if (ok) continue;
    for (const GodelNumber& v : elems) {
      if (ok) break;
      if (!p_before(v, z, y)) continue;
      bool have_w = false;
      for (const GodelNumber& w : elems)
        if (p_before(w, z, y)) { have_w = true; break; }
      if (!have_w) continue;
      if (z == star(star(symbol_code(Symbol::Not), lp), star(v, rp))) ok = true;
      for (const GodelNumber& w : elems) {
        if (ok) break;
        if (!p_before(w, z, y)) continue;
        if (z == star(star(v, symbol_code(Symbol::Imp)), w)) ok = true;
        else if (p_gen(w, z)) ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

GodelNumber pow2_witness(unsigned long x) {
  GodelNumber s = 1, t = 1;
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), kMarkerS);
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), kMarkerT);
  GodelNumber acc = s;
  GodelNumber pow = 1;
  for (unsigned long n = 0; n <= x; ++n) {
    acc = star(acc, GodelNumber(n));
    acc = star(acc, t);
    acc = star(acc, pow);
    acc = star(acc, s);
    pow <<= 1;
  }
  return acc;
}

std::vector<std::pair<GodelNumber, GodelNumber>> seq_pairs(const GodelNumber& w) {
  std::vector<std::pair<GodelNumber, GodelNumber>> out;
  GodelNumber s = 1, t = 1;
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), kMarkerS);
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), kMarkerT);
  // Pair components are marker free, so pairs live between consecutive
  // occurrences of the first marker with one second marker in between.
  std::vector<unsigned long> spos = raw_offsets(s, w); // descending lows
  std::vector<unsigned long> tpos = raw_offsets(t, w);
  unsigned long ls = kMarkerS + 1, lt = kMarkerT + 1;
  for (std::size_t i = 0; i + 1 < spos.size(); ++i) {
    unsigned long hi = spos[i];      // later marker (higher bits... lower low)
    unsigned long lo_mark = spos[i + 1];
    // zone between marker at spos[i] (bits [spos[i], spos[i]+ls)) going
    // down to the next marker: components sit between them.
    unsigned long zone_hi = spos[i]; // exclusive top of the zone
    unsigned long zone_lo = lo_mark + ls;
    if (zone_lo > zone_hi) continue;
    for (unsigned long tp : tpos) {
      if (tp + lt > zone_hi || tp < zone_lo) continue;
      GodelNumber a = bit_slice(w, tp + lt, zone_hi - (tp + lt));
      GodelNumber b = bit_slice(w, zone_lo, tp - zone_lo);
      std::vector<GodelNumber> args{a, b, w};
      if (eval_bounded(Pred::SEQ, args)) out.emplace_back(a, b);
    }
    (void)hi;
  }
  return out;
}

bool validate_pow2_sequence(const GodelNumber& x, const GodelNumber& y,
                            const GodelNumber& w) {
  std::vector<GodelNumber> target{x, y, w};
  if (!eval_bounded(Pred::SEQ, target)) return false;
  auto pairs = seq_pairs(w);
  for (const auto& [a, b] : pairs) {
    if (a == 0 && b == 1) continue;
    bool ok = false;
    for (const auto& [c, d] : pairs) {
      if (c <= a && d <= b && a == c + 1 && b == d * 2) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool pow2_matrix_literal(const GodelNumber& x, const GodelNumber& y) {
  // The closure chain descends to (0,1); components equal to a marker
  // make their pair fail the part conditions, so x >= 18 never holds.
  if (!(y > 0 && mpz_popcount(y.get_mpz_t()) == 1)) return false;
  if (!x.fits_ulong_p()) return false;
  unsigned long xv = x.get_ui();
  if (ell(y) != xv + 1) return false;
  return xv < kMarkerS;
}

// ----------------------------------------------------------- G and H

namespace {

std::optional<std::vector<Ast>> decode_proof_steps(const GodelNumber& b) {
  if (b == 0) return std::nullopt;
  auto toks = try_decode_tokens(b);
  if (!toks) return std::nullopt;
  std::vector<Ast> steps;
  TokenString cur;
  CanonicalOptions o; // sugar and parens allowed; lessthan atoms excluded
  auto flush = [&]() -> bool {
    auto f = parse_canonical_formula(cur, o);
    cur.clear();
    if (!f) return false;
    steps.push_back(*f);
    return true;
  };
  for (const auto& r : *toks) {
    if (r.sym == Symbol::Comma) {
      if (!r.count.fits_ulong_p()) return std::nullopt;
      for (unsigned long i = 0, k = r.count.get_ui(); i < k; ++i)
        if (!flush()) return std::nullopt;
    } else {
      cur.push_back(r);
    }
  }
  if (!flush()) return std::nullopt;
  return steps;
}

std::optional<unsigned long> single_free_var(const GodelNumber& a) {
  auto toks = try_decode_tokens(a);
  if (!toks) return std::nullopt;
  CanonicalOptions o;
  auto f = parse_canonical_formula(*toks, o);
  if (!f || !is_formula(*f)) return std::nullopt;
  auto fv = free_vars(*f);
  if (fv.size() != 1) return std::nullopt;
  return *fv.begin();
}

bool eval_gh(const GodelNumber& a, const GodelNumber& b, bool negated,
             bool require_last) {
  auto x = single_free_var(a);
  if (!x) return false;
  // The diagonal embeds a numeral of a primes, so its code has more than
  // a bits; membership in b is impossible once a exceeds b's bit length.
  if (a + 2 > GodelNumber(ell(b))) return false;
  auto steps = decode_proof_steps(b);
  if (!steps) return false;
  CheckResult res = check_proof(*steps);
  if (!res.ok) return false;
  GodelNumber var_code = encode_ast(mk_var(*x));
  GodelNumber target = sub_code(a, var_code, numeral_code(GodelNumber(a)));
  if (negated) {
    GodelNumber acc = symbol_code(Symbol::Not);
    acc = star(acc, symbol_code(Symbol::LParen));
    acc = star(acc, target);
    acc = star(acc, symbol_code(Symbol::RParen));
    target = acc;
  }
  std::vector<GodelNumber> elems = sequence_elements(b);
  if (require_last) return !elems.empty() && elems.back() == target;
  for (const auto& e : elems)
    if (e == target) return true;
  return false;
}

bool eval_gh_matrix(const GodelNumber& a, const GodelNumber& b, bool negated) {
  if (a + 2 > GodelNumber(ell(b))) return false;
  if (!p_proof(b)) return false;
  // enumerate variable values x with Var(x), Part(x,a), Free(x,a)
  for (unsigned long k = 1;; ++k) {
    GodelNumber x = symbols_code(var_symbols(k));
    if (x > a) break;
    if (!is_part(x, a)) continue;
    if (!p_free(x, a)) continue;
    GodelNumber target = sub_code(a, x, numeral_code(GodelNumber(a)));
    if (negated) {
      GodelNumber acc = symbol_code(Symbol::Not);
      acc = star(acc, symbol_code(Symbol::LParen));
      acc = star(acc, target);
      acc = star(acc, symbol_code(Symbol::RParen));
      target = acc;
    }
    if (p_element_of(target, b)) return true;
  }
  return false;
}

} // namespace

bool eval_G(const GodelNumber& a, const GodelNumber& b, bool require_last) {
  return eval_gh(a, b, false, require_last);
}

bool eval_H(const GodelNumber& a, const GodelNumber& b, bool require_last) {
  return eval_gh(a, b, true, require_last);
}

bool eval_G_matrix(const GodelNumber& a, const GodelNumber& b) {
  return eval_gh_matrix(a, b, false);
}

bool eval_H_matrix(const GodelNumber& a, const GodelNumber& b) {
  return eval_gh_matrix(a, b, true);
}

// ------------------------------------------------------------- dispatch

bool eval_bounded(Pred id, const std::vector<GodelNumber>& args) {
  const PredicateInfo& info = pred_info(id);
  if (static_cast<int>(args.size()) != info.arity)
    throw std::invalid_argument(std::string(info.name) + ": wrong arity");
  if (info.searched)
    throw std::invalid_argument(std::string(info.name) +
                                ": unbounded search; use eval_searched");
  switch (id) {
    case Pred::Div: return p_div(args[0], args[1]);
    case Pred::PowerOf2: return p_pow2(args[0]);
    case Pred::LeastPow2: return p_least_pow2(args[0], args[1]);
    case Pred::StarRel: return p_star_rel(args[0], args[1], args[2]);
    case Pred::Begin: return p_begin(args[0], args[1]);
    case Pred::End: return p_end(args[0], args[1]);
    case Pred::Part: return p_part(args[0], args[1]);
    case Pred::Succ: return p_succ(args[0]);
    case Pred::Var: return p_var(args[0]);
    case Pred::Num: return p_num(args[0]);
    case Pred::Seq: return p_seq(args[0]);
    case Pred::ElementOf: return p_element_of(args[0], args[1]);
    case Pred::Before: return p_before(args[0], args[1], args[2]);
    case Pred::Atom: return p_atom(args[0]);
    case Pred::Gen: return p_gen(args[0], args[1]);
    case Pred::Pro: return p_pro(args[0]);
    case Pred::Prop1: return p_prop(1, args[0]);
    case Pred::Prop2: return p_prop(2, args[0]);
    case Pred::Prop3: return p_prop(3, args[0]);
    case Pred::Prop4: return p_prop(4, args[0]);
    case Pred::Prop5: return p_prop(5, args[0]);
    case Pred::Prop6: return p_prop(6, args[0]);
    case Pred::Prop7: return p_prop(7, args[0]);
    case Pred::Prop8: return p_prop(8, args[0]);
    case Pred::Prop9: return p_prop(9, args[0]);
    case Pred::Prop10: return p_prop(10, args[0]);
    case Pred::Prop11: return p_prop(11, args[0]);
    case Pred::Free: return p_free(args[0], args[1]);
    case Pred::Pred1: return p_pred1(args[0]);
    case Pred::SeqPair: return p_seq_pair(args[0], args[1], args[2]);
    case Pred::Pred2: return p_pred2(args[0]);
    case Pred::Nat: return p_nat(args[0]);
    case Pred::Nat1: return p_nat_i(1, args[0]);
    case Pred::Nat2: return p_nat_i(2, args[0]);
    case Pred::Nat3: return p_nat_i(3, args[0]);
    case Pred::Nat4: return p_nat_i(4, args[0]);
    case Pred::Nat5: return p_nat_i(5, args[0]);
    case Pred::Nat6: return p_nat_i(6, args[0]);
    case Pred::Nat7: return p_nat_i(7, args[0]);
    case Pred::Nat8: return p_nat_i(8, args[0]);
    case Pred::MI: return p_mi(args[0]);
    case Pred::Axiom: return p_axiom(args[0]);
    case Pred::Proof: return p_proof(args[0]);
    case Pred::SEQ: {
      GodelNumber s = 1, t = 1;
      mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), kMarkerS);
      mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), kMarkerT);
      const GodelNumber &x = args[0], &y = args[1], &w = args[2];
      GodelNumber pat = star(star(star(star(s, x), t), y), s);
      return is_part(pat, w) && !is_part(s, x) && !is_part(s, y) &&
             !is_part(t, x) && !is_part(t, y);
    }
    case Pred::Gpred: return eval_G(args[0], args[1]);
    case Pred::Hpred: return eval_H(args[0], args[1]);
    case Pred::SubCode:
      throw std::invalid_argument("SubCode is a function; use sub_code");
    default:
      throw std::invalid_argument("not a bounded predicate");
  }
}

Tri eval_searched(Pred id, const std::vector<GodelNumber>& args,
                  const SearchBudget& budget, GodelNumber* witness) {
  const PredicateInfo& info = pred_info(id);
  if (static_cast<int>(args.size()) != info.arity)
    throw std::invalid_argument(std::string(info.name) + ": wrong arity");
  if (budget.element_bound == 0 || budget.fuel == 0)
    throw std::invalid_argument("budget must be positive");
  switch (id) {
    case Pred::Term: {
      auto w = term_witness(args[0]);
      if (!w) return Tri::False;
      if (!validate_term_sequence(args[0], *w, budget)) return Tri::False;
      if (witness) *witness = *w;
      return Tri::True;
    }
    case Pred::Form: {
      auto w = form_witness(args[0]);
      if (!w) return Tri::False;
      if (!validate_form_sequence(args[0], *w, budget)) return Tri::False;
      if (witness) *witness = *w;
      return Tri::True;
    }
    case Pred::Alt:
      return alt_decision(args[0], args[1], args[2], args[3]) ? Tri::True
                                                              : Tri::False;
    case Pred::Pow2Rel: {
      const GodelNumber &x = args[0], &y = args[1];
      bool holds = y > 0 && mpz_popcount(y.get_mpz_t()) == 1 &&
                   GodelNumber(ell(y) - 1) == x;
      if (!holds) return Tri::False;
      if (witness && x.fits_ulong_p() && x.get_ui() <= budget.element_bound)
        *witness = pow2_witness(x.get_ui());
      return Tri::True;
    }
    case Pred::Pr:
    case Pred::Re: {
      GodelNumber target = args[0];
      if (id == Pred::Re) {
        GodelNumber acc = symbol_code(Symbol::Not);
        acc = star(acc, symbol_code(Symbol::LParen));
        acc = star(acc, target);
        acc = star(acc, symbol_code(Symbol::RParen));
        target = acc;
      }
      for (unsigned long y = 1; y <= budget.element_bound; ++y) {
        GodelNumber yy(y);
        bool isproof = false;
        try {
          isproof = p_proof(yy);
        } catch (const DecodeError&) {
          isproof = false;
        }
        if (isproof && p_element_of(target, yy)) {
          if (witness) *witness = yy;
          return Tri::True;
        }
      }
      return Tri::Unknown;
    }
    default:
      throw std::invalid_argument(std::string(info.name) +
                                  ": bounded predicate; use eval_bounded");
  }
}

} // namespace godel::arith
