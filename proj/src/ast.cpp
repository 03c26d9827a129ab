#include "godel/ast.hpp"

#include <functional>

namespace godel {

namespace {

Ast make(Node k, unsigned long var, GodelNumber num, Ast a, Ast b) {
  auto n = std::make_shared<AstNode>();
  n->kind = k;
  n->var = var;
  n->num = std::move(num);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

void require(bool cond, const char* msg) {
  if (!cond) throw SyntaxError(msg);
}

} // namespace

bool is_term(const Ast& a) {
  if (!a) return false;
  switch (a->kind) {
    case Node::Zero:
    case Node::Var:
    case Node::Numeral:
    case Node::Succ:
    case Node::Sum:
    case Node::Prod:
      return true;
    default:
      return false;
  }
}

bool is_formula(const Ast& a) { return a && !is_term(a); }

Ast mk_zero() { return make(Node::Zero, 0, 0, nullptr, nullptr); }

Ast mk_var(unsigned long index) {
  require(index >= 1, "variable index must be positive");
  return make(Node::Var, index, 0, nullptr, nullptr);
}

Ast mk_numeral(GodelNumber n) {
  require(n >= 0, "numeral must be a natural number");
  if (n == 0) return mk_zero();
  return make(Node::Numeral, 0, std::move(n), nullptr, nullptr);
}

Ast mk_succ(Ast t) {
  require(is_term(t), "successor of a non-term");
  return make(Node::Succ, 0, 0, std::move(t), nullptr);
}

Ast mk_sum(Ast t, Ast u) {
  require(is_term(t) && is_term(u), "sum of non-terms");
  return make(Node::Sum, 0, 0, std::move(t), std::move(u));
}

Ast mk_prod(Ast t, Ast u) {
  require(is_term(t) && is_term(u), "product of non-terms");
  return make(Node::Prod, 0, 0, std::move(t), std::move(u));
}

Ast mk_eq(Ast t, Ast u) {
  require(is_term(t) && is_term(u), "equality of non-terms");
  return make(Node::Eq, 0, 0, std::move(t), std::move(u));
}

Ast mk_imp(Ast f, Ast g) {
  require(is_formula(f) && is_formula(g), "implication of non-formulas");
  return make(Node::Imp, 0, 0, std::move(f), std::move(g));
}

Ast mk_and(Ast f, Ast g) {
  require(is_formula(f) && is_formula(g), "conjunction of non-formulas");
  return make(Node::And, 0, 0, std::move(f), std::move(g));
}

Ast mk_or(Ast f, Ast g) {
  require(is_formula(f) && is_formula(g), "disjunction of non-formulas");
  return make(Node::Or, 0, 0, std::move(f), std::move(g));
}

Ast mk_not(Ast f) {
  require(is_formula(f), "negation of a non-formula");
  return make(Node::Not, 0, 0, std::move(f), nullptr);
}

Ast mk_forall(unsigned long v, Ast f) {
  require(v >= 1, "variable index must be positive");
  require(is_formula(f), "quantification of a non-formula");
  return make(Node::ForAll, v, 0, std::move(f), nullptr);
}

Ast mk_exists(unsigned long v, Ast f) {
  require(v >= 1, "variable index must be positive");
  require(is_formula(f), "quantification of a non-formula");
  return make(Node::Exists, v, 0, std::move(f), nullptr);
}

Ast mk_paren(Ast f) {
  require(is_formula(f), "parenthesization of a non-formula");
  return make(Node::Paren, 0, 0, std::move(f), nullptr);
}

Ast mk_leq_atom(Ast t, Ast u) {
  require(is_term(t) && is_term(u), "comparison of non-terms");
  return make(Node::LeqAtom, 0, 0, std::move(t), std::move(u));
}

bool equal(const Ast& a, const Ast& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->var != b->var) return false;
  if (a->num != b->num) return false;
  return equal(a->a, b->a) && equal(a->b, b->b);
}

std::size_t hash_ast(const Ast& a) {
  if (!a) return 0;
  std::size_t h = static_cast<std::size_t>(a->kind) * 1099511628211ull;
  h ^= a->var + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  if (a->kind == Node::Numeral) {
    std::size_t nh = mpz_get_ui(a->num.get_mpz_t()) ^ (ell(a->num) << 17);
    h ^= nh + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  h ^= hash_ast(a->a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= hash_ast(a->b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

bool is_core(const Ast& a) {
  if (!a) return true;
  switch (a->kind) {
    case Node::And:
    case Node::Or:
    case Node::Exists:
    case Node::Paren:
    case Node::LeqAtom:
      return false;
    default:
      return is_core(a->a) && is_core(a->b);
  }
}

Ast desugar(const Ast& a) {
  if (!a) return a;
  switch (a->kind) {
    case Node::Zero:
    case Node::Var:
    case Node::Numeral:
      return a;
    case Node::Succ:
      return mk_succ(desugar(a->a));
    case Node::Sum:
      return mk_sum(desugar(a->a), desugar(a->b));
    case Node::Prod:
      return mk_prod(desugar(a->a), desugar(a->b));
    case Node::Eq:
      return mk_eq(desugar(a->a), desugar(a->b));
    case Node::Imp:
      return mk_imp(desugar(a->a), desugar(a->b));
    case Node::Not:
      return mk_not(desugar(a->a));
    case Node::ForAll:
      return mk_forall(a->var, desugar(a->a));
    case Node::And:
      return mk_not(mk_imp(desugar(a->a), mk_not(desugar(a->b))));
    case Node::Or:
      return mk_imp(mk_not(desugar(a->a)), desugar(a->b));
    case Node::Exists:
      return mk_not(mk_forall(a->var, mk_not(desugar(a->a))));
    case Node::Paren:
      return desugar(a->a);
    case Node::LeqAtom:
      // t<=u spells ~(all a (~(t+(a)=u))) with the first variable.
      return mk_not(mk_forall(1, mk_not(mk_eq(mk_sum(desugar(a->a), mk_var(1)),
                                              desugar(a->b)))));
  }
  return a;
}

namespace {

void free_vars_go(const Ast& a, std::set<unsigned long>& bound,
                  std::set<unsigned long>& out) {
  if (!a) return;
  switch (a->kind) {
    case Node::Var:
      if (!bound.count(a->var)) out.insert(a->var);
      return;
    case Node::ForAll:
    case Node::Exists: {
      bool was = bound.count(a->var) > 0;
      bound.insert(a->var);
      free_vars_go(a->a, bound, out);
      if (!was) bound.erase(a->var);
      return;
    }
    case Node::LeqAtom: {
      // The spelled-out form quantifies the first variable over both sides.
      bool was = bound.count(1) > 0;
      bound.insert(1);
      free_vars_go(a->a, bound, out);
      free_vars_go(a->b, bound, out);
      if (!was) bound.erase(1);
      return;
    }
    default:
      free_vars_go(a->a, bound, out);
      free_vars_go(a->b, bound, out);
  }
}

} // namespace

std::set<unsigned long> free_vars(const Ast& a) {
  std::set<unsigned long> bound, out;
  free_vars_go(a, bound, out);
  return out;
}

std::set<unsigned long> all_vars(const Ast& a) {
  std::set<unsigned long> out;
  if (!a) return out;
  if (a->kind == Node::Var) out.insert(a->var);
  if (a->kind == Node::ForAll || a->kind == Node::Exists) out.insert(a->var);
  if (a->kind == Node::LeqAtom) out.insert(1);
  for (const Ast& c : {a->a, a->b}) {
    auto sub = all_vars(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool contains_var(const Ast& a, unsigned long v) {
  if (!a) return false;
  if (a->kind == Node::Var && a->var == v) return true;
  if ((a->kind == Node::ForAll || a->kind == Node::Exists) && a->var == v) return true;
  return contains_var(a->a, v) || contains_var(a->b, v);
}

namespace {

bool free_for_go(const Ast& f, unsigned long x, const std::set<unsigned long>& tvars,
                 std::set<unsigned long>& scopes) {
  if (!f) return true;
  switch (f->kind) {
    case Node::Var:
      if (f->var == x && !scopes.empty()) {
        // A free occurrence of x inside the scope of some quantifier on a
        // variable of t: only variables currently in scope matter.
        for (unsigned long v : tvars)
          if (scopes.count(v)) return false;
      }
      return true;
    case Node::ForAll:
    case Node::Exists: {
      if (f->var == x) return true; // occurrences below are bound
      bool added = false;
      if (tvars.count(f->var) && !scopes.count(f->var)) {
        scopes.insert(f->var);
        added = true;
      }
      bool ok = free_for_go(f->a, x, tvars, scopes);
      if (added) scopes.erase(f->var);
      return ok;
    }
    case Node::LeqAtom: {
      if (x == 1) return true; // the spelled form binds variable 1 inside
      bool added = false;
      if (tvars.count(1ul) && !scopes.count(1ul)) {
        scopes.insert(1ul);
        added = true;
      }
      bool ok = free_for_go(f->a, x, tvars, scopes) &&
                free_for_go(f->b, x, tvars, scopes);
      if (added) scopes.erase(1ul);
      return ok;
    }
    default:
      return free_for_go(f->a, x, tvars, scopes) &&
             free_for_go(f->b, x, tvars, scopes);
  }
}

} // namespace

bool term_free_for(const Ast& t, unsigned long x, const Ast& f) {
  std::set<unsigned long> tvars = free_vars(t);
  if (tvars.empty()) return true;
  std::set<unsigned long> scopes;
  return free_for_go(f, x, tvars, scopes);
}

Ast subst_term(const Ast& f, unsigned long x, const Ast& t) {
  if (!f) return f;
  switch (f->kind) {
    case Node::Var:
      return f->var == x ? t : f;
    case Node::ForAll:
    case Node::Exists: {
      if (f->var == x) return f;
      Ast body = subst_term(f->a, x, t);
      return f->kind == Node::ForAll ? mk_forall(f->var, body)
                                     : mk_exists(f->var, body);
    }
    case Node::Zero:
    case Node::Numeral:
      return f;
    case Node::LeqAtom: {
      if (x == 1) return f; // the spelled form binds variable 1 inside
      return mk_leq_atom(subst_term(f->a, x, t), subst_term(f->b, x, t));
    }
    default: {
      Ast a = f->a ? subst_term(f->a, x, t) : nullptr;
      Ast b = f->b ? subst_term(f->b, x, t) : nullptr;
      auto n = std::make_shared<AstNode>(*f);
      n->a = a;
      n->b = b;
      return n;
    }
  }
}

Ast subst_convention(const Ast& f, unsigned long x, const GodelNumber& n) {
  return mk_forall(x, mk_imp(mk_eq(mk_var(x), mk_numeral(n)), f));
}

Ast subst_convention_paren(const Ast& f, unsigned long x, const GodelNumber& n) {
  return mk_forall(
      x, mk_imp(mk_paren(mk_eq(mk_var(x), mk_numeral(n))), mk_paren(f)));
}

namespace {

void emit(TokenString& out, Symbol s, GodelNumber count = 1) {
  if (count == 0) return;
  if (!out.empty() && out.back().sym == s)
    out.back().count += count;
  else
    out.push_back(SymbolRun{s, std::move(count)});
}

void print_go(const Ast& a, TokenString& out) {
  switch (a->kind) {
    case Node::Zero:
      emit(out, Symbol::Zero);
      return;
    case Node::Var:
      emit(out, Symbol::LParen);
      emit(out, Symbol::Zero);
      emit(out, Symbol::Prime, a->var);
      emit(out, Symbol::RParen);
      return;
    case Node::Numeral:
      emit(out, Symbol::Zero);
      emit(out, Symbol::Prime, a->num);
      return;
    case Node::Succ:
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::RParen);
      emit(out, Symbol::Prime);
      return;
    case Node::Sum:
    case Node::Prod:
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::RParen);
      emit(out, a->kind == Node::Sum ? Symbol::Plus : Symbol::Times);
      emit(out, Symbol::LParen);
      print_go(a->b, out);
      emit(out, Symbol::RParen);
      return;
    case Node::Eq:
      print_go(a->a, out);
      emit(out, Symbol::Equal);
      print_go(a->b, out);
      return;
    case Node::Imp:
      print_go(a->a, out);
      emit(out, Symbol::Imp);
      print_go(a->b, out);
      return;
    case Node::Not:
      emit(out, Symbol::Not);
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::RParen);
      return;
    case Node::ForAll:
      emit(out, Symbol::ForAll);
      emit(out, Symbol::LParen);
      emit(out, Symbol::Zero);
      emit(out, Symbol::Prime, a->var);
      emit(out, Symbol::RParen);
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::RParen);
      return;
    case Node::Paren:
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::RParen);
      return;
    case Node::LeqAtom:
      // ~(all(0')(~(t+(0')=u)))
      emit(out, Symbol::Not);
      emit(out, Symbol::LParen);
      emit(out, Symbol::ForAll);
      emit(out, Symbol::LParen);
      emit(out, Symbol::Zero);
      emit(out, Symbol::Prime);
      emit(out, Symbol::RParen);
      emit(out, Symbol::LParen);
      emit(out, Symbol::Not);
      emit(out, Symbol::LParen);
      print_go(a->a, out);
      emit(out, Symbol::Plus);
      emit(out, Symbol::LParen);
      emit(out, Symbol::Zero);
      emit(out, Symbol::Prime);
      emit(out, Symbol::RParen);
      emit(out, Symbol::Equal);
      print_go(a->b, out);
      emit(out, Symbol::RParen);
      emit(out, Symbol::RParen);
      emit(out, Symbol::RParen);
      return;
    case Node::And:
    case Node::Or:
    case Node::Exists:
      throw SyntaxError("no canonical spelling; desugar first");
  }
}

} // namespace

TokenString print_tokens(const Ast& a) {
  require(static_cast<bool>(a), "null ast");
  TokenString out;
  print_go(a, out);
  return out;
}

SymbolString print_canonical(const Ast& a, const PrintOptions& opts) {
  TokenString toks = print_tokens(a);
  GodelNumber total = 0;
  for (const auto& r : toks) total += r.count;
  if (total > opts.numeral_guard)
    throw SyntaxError("expansion guard exceeded: " + total.get_str());
  SymbolString out;
  out.reserve(total.get_ui());
  for (const auto& r : toks)
    for (unsigned long i = 0, n = r.count.get_ui(); i < n; ++i)
      out.push_back(r.sym);
  return out;
}

GodelNumber encode_ast(const Ast& a) { return encode_tokens(print_tokens(a)); }

GodelNumber symbol_count(const Ast& a) {
  GodelNumber total = 0;
  for (const auto& r : print_tokens(a)) total += r.count;
  return total;
}

GodelNumber code_bit_length(const Ast& a) {
  GodelNumber total = 0;
  for (const auto& r : print_tokens(a)) total += r.count * (exponent(r.sym) + 1);
  return total;
}

std::string to_string(const Ast& a) { return render_ascii(print_canonical(a)); }

} // namespace godel
