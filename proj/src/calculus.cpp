#include "godel/calculus.hpp"

#include <functional>
#include <sstream>

#include "godel/parse.hpp"

namespace godel {

const char* axiom_tag_name(AxiomTag t) {
  switch (t) {
    case AxiomTag::Prop1: return "Prop1";
    case AxiomTag::Prop2: return "Prop2";
    case AxiomTag::Prop3: return "Prop3";
    case AxiomTag::Prop4: return "Prop4";
    case AxiomTag::Prop5: return "Prop5";
    case AxiomTag::Prop6: return "Prop6";
    case AxiomTag::Prop7: return "Prop7";
    case AxiomTag::Prop8: return "Prop8";
    case AxiomTag::Prop9: return "Prop9";
    case AxiomTag::Prop10: return "Prop10";
    case AxiomTag::Prop11: return "Prop11";
    case AxiomTag::Pred1: return "Pred1";
    case AxiomTag::Pred2: return "Pred2";
    case AxiomTag::Pred3: return "Pred3";
    case AxiomTag::Pred4: return "Pred4";
    case AxiomTag::Nat1: return "Nat1";
    case AxiomTag::Nat2: return "Nat2";
    case AxiomTag::Nat3: return "Nat3";
    case AxiomTag::Nat4: return "Nat4";
    case AxiomTag::Nat5: return "Nat5";
    case AxiomTag::Nat6: return "Nat6";
    case AxiomTag::Nat7: return "Nat7";
    case AxiomTag::Nat8: return "Nat8";
    case AxiomTag::Induction: return "Induction";
  }
  return "?";
}

Ast strip_parens(const Ast& f) {
  if (!f) return f;
  if (f->kind == Node::Paren) return strip_parens(f->a);
  if (!f->a && !f->b) return f;
  auto n = std::make_shared<AstNode>(*f);
  n->a = strip_parens(f->a);
  n->b = strip_parens(f->b);
  return n;
}

namespace {

// Successor view of a term: Succ(t) peels to t, a positive numeral peels
// to its predecessor.
std::optional<Ast> peel_succ(const Ast& t) {
  if (!t) return std::nullopt;
  if (t->kind == Node::Succ) return t->a;
  if (t->kind == Node::Numeral && t->num >= 1) return mk_numeral(t->num - 1);
  return std::nullopt;
}

struct M {
  std::map<std::string, Ast> b;

  bool bind(const char* name, const Ast& v) {
    auto it = b.find(name);
    if (it == b.end()) {
      b.emplace(name, v);
      return true;
    }
    return equal(it->second, v);
  }
};

bool is_f(const Ast& a) { return is_formula(a); }
bool is_t(const Ast& a) { return is_term(a); }

using Match = std::optional<std::map<std::string, Ast>>;

Match match_prop(AxiomTag tag, const Ast& f) {
  M m;
  auto imp = [](const Ast& x) { return x && x->kind == Node::Imp; };
  switch (tag) {
    case AxiomTag::Prop1: // A -> (B -> A)
      if (imp(f) && imp(f->b) && is_f(f->a) &&
          equal(f->a, f->b->b) && m.bind("A", f->a) && m.bind("B", f->b->a))
        return m.b;
      return std::nullopt;
    case AxiomTag::Prop2: { // (A->B) -> ((A->(B->C)) -> (A->C))
      if (!(imp(f) && imp(f->a) && imp(f->b) && imp(f->b->a) && imp(f->b->b) &&
            imp(f->b->a->b)))
        return std::nullopt;
      Ast A = f->a->a, B = f->a->b;
      if (!equal(f->b->a->a, A)) return std::nullopt;
      if (!equal(f->b->a->b->a, B)) return std::nullopt;
      Ast C = f->b->a->b->b;
      if (!equal(f->b->b->a, A) || !equal(f->b->b->b, C)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      m.bind("C", C);
      return m.b;
    }
    case AxiomTag::Prop3: { // A -> ((A->B) -> B)
      if (!(imp(f) && imp(f->b) && imp(f->b->a))) return std::nullopt;
      Ast A = f->a, B = f->b->a->b;
      if (!equal(f->b->a->a, A) || !equal(f->b->b, B)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      return m.b;
    }
    case AxiomTag::Prop4: { // A -> (B -> A/\B)
      if (!(imp(f) && imp(f->b) && f->b->b && f->b->b->kind == Node::And))
        return std::nullopt;
      Ast A = f->a, B = f->b->a;
      if (!equal(f->b->b->a, A) || !equal(f->b->b->b, B)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      return m.b;
    }
    case AxiomTag::Prop5: // A/\B -> A
    case AxiomTag::Prop6: { // A/\B -> B
      if (!(imp(f) && f->a && f->a->kind == Node::And)) return std::nullopt;
      Ast A = f->a->a, B = f->a->b;
      Ast want = tag == AxiomTag::Prop5 ? A : B;
      if (!equal(f->b, want)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      return m.b;
    }
    case AxiomTag::Prop7: // A -> A\/B
    case AxiomTag::Prop8: { // B -> A\/B
      if (!(imp(f) && f->b && f->b->kind == Node::Or)) return std::nullopt;
      Ast A = f->b->a, B = f->b->b;
      Ast want = tag == AxiomTag::Prop7 ? A : B;
      if (!equal(f->a, want)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      return m.b;
    }
    case AxiomTag::Prop9: { // (A->C) -> ((B->C) -> (A\/B -> C))
      if (!(imp(f) && imp(f->a) && imp(f->b) && imp(f->b->a) && imp(f->b->b) &&
            f->b->b->a && f->b->b->a->kind == Node::Or))
        return std::nullopt;
      Ast A = f->a->a, C = f->a->b, B = f->b->a->a;
      if (!equal(f->b->a->b, C)) return std::nullopt;
      if (!equal(f->b->b->a->a, A) || !equal(f->b->b->a->b, B) ||
          !equal(f->b->b->b, C))
        return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      m.bind("C", C);
      return m.b;
    }
    case AxiomTag::Prop10: { // (A->B) -> ((A->~B) -> ~A)
      if (!(imp(f) && imp(f->a) && imp(f->b) && imp(f->b->a) &&
            f->b->a->b && f->b->a->b->kind == Node::Not &&
            f->b->b && f->b->b->kind == Node::Not))
        return std::nullopt;
      Ast A = f->a->a, B = f->a->b;
      if (!equal(f->b->a->a, A) || !equal(f->b->a->b->a, B) ||
          !equal(f->b->b->a, A))
        return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      return m.b;
    }
    case AxiomTag::Prop11: { // ~~A -> A
      if (!(imp(f) && f->a && f->a->kind == Node::Not && f->a->a &&
            f->a->a->kind == Node::Not))
        return std::nullopt;
      if (!equal(f->a->a->a, f->b)) return std::nullopt;
      m.bind("A", f->b);
      return m.b;
    }
    default:
      return std::nullopt;
  }
}

// Infer the term t with subst_term(F, x, t) == G, where F has at least
// one free occurrence of x. Returns Var(x) when F == G and x not free.
std::optional<Ast> infer_subst(const Ast& F, unsigned long x, const Ast& G) {
  std::optional<Ast> t;
  // Walk both trees in lockstep; positions where F has a free x must all
  // carry the same subterm of G.
  std::function<bool(const Ast&, const Ast&, bool)> go =
      [&](const Ast& f, const Ast& g, bool x_bound) -> bool {
    if (!f || !g) return f == g;
    if (f->kind == Node::Var && f->var == x && !x_bound) {
      if (!is_term(g)) return false;
      if (t && !equal(*t, g)) return false;
      t = g;
      return true;
    }
    if (f->kind != g->kind || f->var != g->var || f->num != g->num) return false;
    bool bound = x_bound;
    if ((f->kind == Node::ForAll || f->kind == Node::Exists) && f->var == x)
      bound = true;
    if (f->kind == Node::LeqAtom && x == 1) bound = true;
    return go(f->a, g->a, bound) && go(f->b, g->b, bound);
  };
  if (!go(F, G, false)) return std::nullopt;
  if (!t) t = mk_var(x);
  return t;
}

Match match_pred(AxiomTag tag, const Ast& f) {
  M m;
  auto imp = [](const Ast& x) { return x && x->kind == Node::Imp; };
  switch (tag) {
    case AxiomTag::Pred1: { // (B->A) -> (B -> all x A), x not free in B
      if (!(imp(f) && imp(f->a) && imp(f->b) &&
            f->b->b && f->b->b->kind == Node::ForAll))
        return std::nullopt;
      Ast B = f->a->a, A = f->a->b;
      unsigned long x = f->b->b->var;
      if (!equal(f->b->a, B) || !equal(f->b->b->a, A)) return std::nullopt;
      if (free_vars(B).count(x)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      m.bind("x", mk_var(x));
      return m.b;
    }
    case AxiomTag::Pred2: { // all x F -> F[x:=t], t free for x in F
      if (!(imp(f) && f->a && f->a->kind == Node::ForAll)) return std::nullopt;
      unsigned long x = f->a->var;
      Ast F = f->a->a;
      auto t = infer_subst(F, x, f->b);
      if (!t) return std::nullopt;
      if (!term_free_for(*t, x, F)) return std::nullopt;
      if (!equal(subst_term(F, x, *t), f->b)) return std::nullopt;
      m.bind("F", F);
      m.bind("x", mk_var(x));
      m.bind("t", *t);
      return m.b;
    }
    case AxiomTag::Pred3: { // F[x:=t] -> ex x F, t free for x in F
      if (!(imp(f) && f->b && f->b->kind == Node::Exists)) return std::nullopt;
      unsigned long x = f->b->var;
      Ast F = f->b->a;
      auto t = infer_subst(F, x, f->a);
      if (!t) return std::nullopt;
      if (!term_free_for(*t, x, F)) return std::nullopt;
      if (!equal(subst_term(F, x, *t), f->a)) return std::nullopt;
      m.bind("F", F);
      m.bind("x", mk_var(x));
      m.bind("t", *t);
      return m.b;
    }
    case AxiomTag::Pred4: { // (A->B) -> ((ex x A) -> B), x not free in B
      if (!(imp(f) && imp(f->a) && imp(f->b) &&
            f->b->a && f->b->a->kind == Node::Exists))
        return std::nullopt;
      Ast A = f->a->a, B = f->a->b;
      unsigned long x = f->b->a->var;
      if (!equal(f->b->a->a, A) || !equal(f->b->b, B)) return std::nullopt;
      if (free_vars(B).count(x)) return std::nullopt;
      m.bind("A", A);
      m.bind("B", B);
      m.bind("x", mk_var(x));
      return m.b;
    }
    default:
      return std::nullopt;
  }
}

Match match_nat(AxiomTag tag, const Ast& f) {
  M m;
  auto eq = [](const Ast& x) { return x && x->kind == Node::Eq; };
  auto imp = [](const Ast& x) { return x && x->kind == Node::Imp; };
  switch (tag) {
    case AxiomTag::Nat1: { // a'=b' -> a=b
      if (!(imp(f) && eq(f->a) && eq(f->b))) return std::nullopt;
      auto a = peel_succ(f->a->a), b = peel_succ(f->a->b);
      if (!a || !b) return std::nullopt;
      if (!equal(*a, f->b->a) || !equal(*b, f->b->b)) return std::nullopt;
      m.bind("a", *a);
      m.bind("b", *b);
      return m.b;
    }
    case AxiomTag::Nat2: { // ~(a'=0)
      if (!(f && f->kind == Node::Not && eq(f->a))) return std::nullopt;
      if (f->a->b->kind != Node::Zero) return std::nullopt;
      auto a = peel_succ(f->a->a);
      if (!a) return std::nullopt;
      m.bind("a", *a);
      return m.b;
    }
    case AxiomTag::Nat3: { // a=b -> (a=c -> b=c)
      if (!(imp(f) && eq(f->a) && imp(f->b) && eq(f->b->a) && eq(f->b->b)))
        return std::nullopt;
      Ast a = f->a->a, b = f->a->b;
      if (!equal(f->b->a->a, a)) return std::nullopt;
      Ast c = f->b->a->b;
      if (!equal(f->b->b->a, b) || !equal(f->b->b->b, c)) return std::nullopt;
      m.bind("a", a);
      m.bind("b", b);
      m.bind("c", c);
      return m.b;
    }
    case AxiomTag::Nat4: { // a=b -> a'=b'
      if (!(imp(f) && eq(f->a) && eq(f->b))) return std::nullopt;
      auto a2 = peel_succ(f->b->a), b2 = peel_succ(f->b->b);
      if (!a2 || !b2) return std::nullopt;
      if (!equal(*a2, f->a->a) || !equal(*b2, f->a->b)) return std::nullopt;
      m.bind("a", f->a->a);
      m.bind("b", f->a->b);
      return m.b;
    }
    case AxiomTag::Nat5: { // a+0=a
      if (!(eq(f) && f->a && f->a->kind == Node::Sum &&
            f->a->b->kind == Node::Zero))
        return std::nullopt;
      if (!equal(f->a->a, f->b)) return std::nullopt;
      m.bind("a", f->b);
      return m.b;
    }
    case AxiomTag::Nat6: { // a+b'=(a+b)'
      if (!(eq(f) && f->a && f->a->kind == Node::Sum)) return std::nullopt;
      auto b = peel_succ(f->a->b);
      if (!b) return std::nullopt;
      auto rhs = peel_succ(f->b);
      if (!rhs || !(*rhs) || (*rhs)->kind != Node::Sum) return std::nullopt;
      if (!equal((*rhs)->a, f->a->a) || !equal((*rhs)->b, *b)) return std::nullopt;
      m.bind("a", f->a->a);
      m.bind("b", *b);
      return m.b;
    }
    case AxiomTag::Nat7: { // a*0=0
      if (!(eq(f) && f->a && f->a->kind == Node::Prod &&
            f->a->b->kind == Node::Zero && f->b->kind == Node::Zero))
        return std::nullopt;
      m.bind("a", f->a->a);
      return m.b;
    }
    case AxiomTag::Nat8: { // a*b'=a*b+a
      if (!(eq(f) && f->a && f->a->kind == Node::Prod && f->b &&
            f->b->kind == Node::Sum && f->b->a && f->b->a->kind == Node::Prod))
        return std::nullopt;
      auto b = peel_succ(f->a->b);
      if (!b) return std::nullopt;
      Ast a = f->a->a;
      if (!equal(f->b->a->a, a) || !equal(f->b->a->b, *b) || !equal(f->b->b, a))
        return std::nullopt;
      m.bind("a", a);
      m.bind("b", *b);
      return m.b;
    }
    default:
      return std::nullopt;
  }
}

// Substitution-convention induction: the instance quantifies the target
// formula through all b ((b=y) -> A).
struct SubShape {
  unsigned long b;
  Ast y;
  Ast body;
};

std::optional<SubShape> match_sub_shape(const Ast& s) {
  if (!(s && s->kind == Node::ForAll && s->a && s->a->kind == Node::Imp))
    return std::nullopt;
  Ast prem = s->a->a;
  if (!(prem && prem->kind == Node::Eq && prem->a->kind == Node::Var &&
        prem->a->var == s->var))
    return std::nullopt;
  return SubShape{s->var, prem->b, s->a->b};
}

Match match_induction(const Ast& f) {
  M m;
  if (!(f && f->kind == Node::Imp && f->a && f->a->kind == Node::And))
    return std::nullopt;
  auto s1 = match_sub_shape(f->a->a);
  if (!s1 || s1->y->kind != Node::Zero) return std::nullopt;
  Ast step = f->a->b;
  if (!(step && step->kind == Node::ForAll && step->a &&
        step->a->kind == Node::Imp))
    return std::nullopt;
  unsigned long c = step->var;
  auto s2 = match_sub_shape(step->a->a);
  auto s3 = match_sub_shape(step->a->b);
  if (!s2 || !s3) return std::nullopt;
  if (s2->b != s1->b || s3->b != s1->b) return std::nullopt;
  if (!(s2->y->kind == Node::Var && s2->y->var == c)) return std::nullopt;
  if (!(s3->y->kind == Node::Succ && s3->y->a->kind == Node::Var &&
        s3->y->a->var == c))
    return std::nullopt;
  if (!equal(s2->body, s1->body) || !equal(s3->body, s1->body)) return std::nullopt;
  Ast concl = f->b;
  if (!(concl && concl->kind == Node::ForAll && concl->var == c)) return std::nullopt;
  auto s4 = match_sub_shape(concl->a);
  if (!s4 || s4->b != s1->b) return std::nullopt;
  if (!(s4->y->kind == Node::Var && s4->y->var == c)) return std::nullopt;
  if (!equal(s4->body, s1->body)) return std::nullopt;
  m.bind("F", s1->body);
  m.bind("x", mk_var(s1->b));
  m.bind("c", mk_var(c));
  return m.b;
}

Match match_tag(AxiomTag tag, const Ast& f) {
  switch (tag) {
    case AxiomTag::Prop1:
    case AxiomTag::Prop2:
    case AxiomTag::Prop3:
    case AxiomTag::Prop4:
    case AxiomTag::Prop5:
    case AxiomTag::Prop6:
    case AxiomTag::Prop7:
    case AxiomTag::Prop8:
    case AxiomTag::Prop9:
    case AxiomTag::Prop10:
    case AxiomTag::Prop11:
      return match_prop(tag, f);
    case AxiomTag::Pred1:
    case AxiomTag::Pred2:
    case AxiomTag::Pred3:
    case AxiomTag::Pred4:
      return match_pred(tag, f);
    case AxiomTag::Induction:
      return match_induction(f);
    default:
      return match_nat(tag, f);
  }
}

const AxiomTag kAllTags[] = {
    AxiomTag::Prop1, AxiomTag::Prop2, AxiomTag::Prop3, AxiomTag::Prop4,
    AxiomTag::Prop5, AxiomTag::Prop6, AxiomTag::Prop7, AxiomTag::Prop8,
    AxiomTag::Prop9, AxiomTag::Prop10, AxiomTag::Prop11,
    AxiomTag::Pred1, AxiomTag::Pred2, AxiomTag::Pred3, AxiomTag::Pred4,
    AxiomTag::Nat1, AxiomTag::Nat2, AxiomTag::Nat3, AxiomTag::Nat4,
    AxiomTag::Nat5, AxiomTag::Nat6, AxiomTag::Nat7, AxiomTag::Nat8,
    AxiomTag::Induction,
};

} // namespace

std::optional<AxiomClass> classify_axiom(const Ast& f) {
  if (!is_formula(f)) return std::nullopt;
  Ast g = strip_parens(f);
  for (AxiomTag tag : kAllTags) {
    if (auto m = match_tag(tag, g)) return AxiomClass{tag, *m, g};
  }
  return std::nullopt;
}

Ast instantiate_axiom(AxiomTag tag, const std::map<std::string, Ast>& bs) {
  auto get = [&](const char* k) -> Ast {
    auto it = bs.find(k);
    if (it == bs.end()) throw SyntaxError(std::string("missing binding ") + k);
    return it->second;
  };
  auto var_of = [&](const char* k) { return get(k)->var; };
  switch (tag) {
    case AxiomTag::Prop1:
      return mk_imp(get("A"), mk_imp(get("B"), get("A")));
    case AxiomTag::Prop2:
      return mk_imp(
          mk_imp(get("A"), get("B")),
          mk_imp(mk_imp(get("A"), mk_imp(get("B"), get("C"))),
                 mk_imp(get("A"), get("C"))));
    case AxiomTag::Prop3:
      return mk_imp(get("A"), mk_imp(mk_imp(get("A"), get("B")), get("B")));
    case AxiomTag::Prop4:
      return mk_imp(get("A"), mk_imp(get("B"), mk_and(get("A"), get("B"))));
    case AxiomTag::Prop5:
      return mk_imp(mk_and(get("A"), get("B")), get("A"));
    case AxiomTag::Prop6:
      return mk_imp(mk_and(get("A"), get("B")), get("B"));
    case AxiomTag::Prop7:
      return mk_imp(get("A"), mk_or(get("A"), get("B")));
    case AxiomTag::Prop8:
      return mk_imp(get("B"), mk_or(get("A"), get("B")));
    case AxiomTag::Prop9:
      return mk_imp(mk_imp(get("A"), get("C")),
                    mk_imp(mk_imp(get("B"), get("C")),
                           mk_imp(mk_or(get("A"), get("B")), get("C"))));
    case AxiomTag::Prop10:
      return mk_imp(mk_imp(get("A"), get("B")),
                    mk_imp(mk_imp(get("A"), mk_not(get("B"))), mk_not(get("A"))));
    case AxiomTag::Prop11:
      return mk_imp(mk_not(mk_not(get("A"))), get("A"));
    case AxiomTag::Pred1:
      return mk_imp(mk_imp(get("B"), get("A")),
                    mk_imp(get("B"), mk_forall(var_of("x"), get("A"))));
    case AxiomTag::Pred2:
      return mk_imp(mk_forall(var_of("x"), get("F")),
                    subst_term(get("F"), var_of("x"), get("t")));
    case AxiomTag::Pred3:
      return mk_imp(subst_term(get("F"), var_of("x"), get("t")),
                    mk_exists(var_of("x"), get("F")));
    case AxiomTag::Pred4:
      return mk_imp(mk_imp(get("A"), get("B")),
                    mk_imp(mk_exists(var_of("x"), get("A")), get("B")));
    case AxiomTag::Nat1:
      return mk_imp(mk_eq(mk_succ(get("a")), mk_succ(get("b"))),
                    mk_eq(get("a"), get("b")));
    case AxiomTag::Nat2:
      return mk_not(mk_eq(mk_succ(get("a")), mk_zero()));
    case AxiomTag::Nat3:
      return mk_imp(mk_eq(get("a"), get("b")),
                    mk_imp(mk_eq(get("a"), get("c")), mk_eq(get("b"), get("c"))));
    case AxiomTag::Nat4:
      return mk_imp(mk_eq(get("a"), get("b")),
                    mk_eq(mk_succ(get("a")), mk_succ(get("b"))));
    case AxiomTag::Nat5:
      return mk_eq(mk_sum(get("a"), mk_zero()), get("a"));
    case AxiomTag::Nat6:
      return mk_eq(mk_sum(get("a"), mk_succ(get("b"))),
                   mk_succ(mk_sum(get("a"), get("b"))));
    case AxiomTag::Nat7:
      return mk_eq(mk_prod(get("a"), mk_zero()), mk_zero());
    case AxiomTag::Nat8:
      return mk_eq(mk_prod(get("a"), mk_succ(get("b"))),
                   mk_sum(mk_prod(get("a"), get("b")), get("a")));
    case AxiomTag::Induction: {
      unsigned long b = var_of("x"), c = var_of("c");
      Ast F = get("F");
      auto sub = [&](Ast y) {
        return mk_forall(b, mk_imp(mk_eq(mk_var(b), std::move(y)), F));
      };
      return mk_imp(
          mk_and(sub(mk_zero()),
                 mk_forall(c, mk_imp(sub(mk_var(c)), sub(mk_succ(mk_var(c)))))),
          mk_forall(c, sub(mk_var(c))));
    }
  }
  throw SyntaxError("unknown axiom tag");
}

namespace {

// Code-template pieces for the arithmetized spellings.
struct Chunk {
  enum Kind { Sym, Term, TermPrime, Formula, VarStr, SubZero, SubVar, SubVarPrime }
      kind;
  Symbol sym = Symbol::Prime;
  const char* name = nullptr;
};

GodelNumber chunk_code(const Chunk& c, const std::map<std::string, Ast>& bs) {
  auto get = [&](const char* k) -> const Ast& {
    auto it = bs.find(k);
    if (it == bs.end()) throw SyntaxError(std::string("missing binding ") + k);
    return it->second;
  };
  switch (c.kind) {
    case Chunk::Sym:
      return symbol_code(c.sym);
    case Chunk::Term:
    case Chunk::Formula:
    case Chunk::VarStr:
      return encode_ast(get(c.name));
    case Chunk::TermPrime:
      return star(encode_ast(get(c.name)), symbol_code(Symbol::Prime));
    default:
      throw SyntaxError("bad chunk");
  }
}

GodelNumber fold_chunks(std::initializer_list<Chunk> chunks,
                        const std::map<std::string, Ast>& bs) {
  GodelNumber acc = 0;
  for (const Chunk& c : chunks) acc = star(acc, chunk_code(c, bs));
  return acc;
}

Chunk S(Symbol s) { return Chunk{Chunk::Sym, s}; }
Chunk T(const char* n) { return Chunk{Chunk::Term, Symbol::Prime, n}; }
Chunk TP(const char* n) { return Chunk{Chunk::TermPrime, Symbol::Prime, n}; }
Chunk F(const char* n) { return Chunk{Chunk::Formula, Symbol::Prime, n}; }
Chunk V(const char* n) { return Chunk{Chunk::VarStr, Symbol::Prime, n}; }

// sub code: all x ((x = y) -> (a)) over raw codes.
GodelNumber sub_code_raw(const GodelNumber& a, const GodelNumber& x,
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

} // namespace

std::optional<GodelNumber> axiom_instance_code(
    AxiomTag tag, const std::map<std::string, Ast>& bs) {
  using Sy = Symbol;
  switch (tag) {
    case AxiomTag::Prop1:
      return fold_chunks({F("A"), S(Sy::Imp), S(Sy::LParen), F("B"), S(Sy::Imp),
                          F("A"), S(Sy::RParen)},
                         bs);
    case AxiomTag::Prop2:
      return fold_chunks(
          {S(Sy::LParen), F("A"), S(Sy::Imp), F("B"), S(Sy::RParen), S(Sy::Imp),
           S(Sy::LParen), S(Sy::LParen), F("A"), S(Sy::Imp), S(Sy::LParen),
           F("B"), S(Sy::Imp), F("C"), S(Sy::RParen), S(Sy::RParen), S(Sy::Imp),
           S(Sy::LParen), F("A"), S(Sy::Imp), F("C"), S(Sy::RParen),
           S(Sy::RParen)},
          bs);
    case AxiomTag::Prop3:
      return fold_chunks({F("A"), S(Sy::Imp), S(Sy::LParen), S(Sy::LParen),
                          F("A"), S(Sy::Imp), F("B"), S(Sy::RParen), S(Sy::Imp),
                          F("B"), S(Sy::RParen)},
                         bs);
    case AxiomTag::Prop4:
      return fold_chunks({F("A"), S(Sy::Imp), S(Sy::LParen), F("B"), S(Sy::Imp),
                          F("A"), S(Sy::And), F("B"), S(Sy::RParen)},
                         bs);
    case AxiomTag::Prop5:
      return fold_chunks({F("A"), S(Sy::And), F("B"), S(Sy::Imp), F("A")}, bs);
    case AxiomTag::Prop6:
      return fold_chunks({F("A"), S(Sy::And), F("B"), S(Sy::Imp), F("B")}, bs);
    case AxiomTag::Prop7:
      return fold_chunks({F("A"), S(Sy::Imp), F("A"), S(Sy::Or), F("B")}, bs);
    case AxiomTag::Prop8:
      return fold_chunks({F("B"), S(Sy::Imp), F("A"), S(Sy::Or), F("B")}, bs);
    case AxiomTag::Prop9:
      return fold_chunks(
          {S(Sy::LParen), F("A"), S(Sy::Imp), F("C"), S(Sy::RParen), S(Sy::Imp),
           S(Sy::LParen), S(Sy::LParen), F("B"), S(Sy::Imp), F("C"),
           S(Sy::RParen), S(Sy::Imp), S(Sy::LParen), F("A"), S(Sy::Or), F("B"),
           S(Sy::Imp), F("C"), S(Sy::RParen), S(Sy::RParen)},
          bs);
    case AxiomTag::Prop10:
      return fold_chunks(
          {S(Sy::LParen), F("A"), S(Sy::Imp), F("B"), S(Sy::RParen), S(Sy::Imp),
           S(Sy::LParen), S(Sy::LParen), F("A"), S(Sy::Imp), S(Sy::Not), F("B"),
           S(Sy::RParen), S(Sy::Imp), S(Sy::Not), F("A"), S(Sy::RParen)},
          bs);
    case AxiomTag::Prop11:
      return fold_chunks({S(Sy::Not), S(Sy::Not), F("A"), S(Sy::Imp), F("A")},
                         bs);
    case AxiomTag::Pred1:
      return fold_chunks(
          {S(Sy::LParen), F("B"), S(Sy::Imp), F("A"), S(Sy::RParen), S(Sy::Imp),
           S(Sy::LParen), F("B"), S(Sy::Imp), S(Sy::LParen), S(Sy::ForAll),
           V("x"), F("A"), S(Sy::RParen), S(Sy::RParen)},
          bs);
    case AxiomTag::Pred2: {
      // all x F -> F[x:=t], spelled all x-string F-string => result-string
      auto itF = bs.find("F");
      auto itx = bs.find("x");
      auto itt = bs.find("t");
      if (itF == bs.end() || itx == bs.end() || itt == bs.end()) return std::nullopt;
      Ast result = subst_term(itF->second, itx->second->var, itt->second);
      GodelNumber acc = symbol_code(Sy::ForAll);
      acc = star(acc, encode_ast(itx->second));
      acc = star(acc, encode_ast(itF->second));
      acc = star(acc, symbol_code(Sy::Imp));
      acc = star(acc, encode_ast(result));
      return acc;
    }
    case AxiomTag::Pred3:
    case AxiomTag::Pred4:
      return std::nullopt;
    case AxiomTag::Nat1:
      return fold_chunks(
          {TP("a"), S(Sy::Equal), TP("b"), S(Sy::Imp), T("a"), S(Sy::Equal),
           T("b")},
          bs);
    case AxiomTag::Nat2:
      return fold_chunks({S(Sy::Not), S(Sy::LParen), TP("a"), S(Sy::Equal),
                          S(Sy::Zero), S(Sy::RParen)},
                         bs);
    case AxiomTag::Nat3:
      return fold_chunks(
          {T("a"), S(Sy::Equal), T("b"), S(Sy::Imp), S(Sy::LParen), T("a"),
           S(Sy::Equal), T("c"), S(Sy::Imp), T("b"), S(Sy::Equal), T("c"),
           S(Sy::RParen)},
          bs);
    case AxiomTag::Nat4:
      return fold_chunks({T("a"), S(Sy::Equal), T("b"), S(Sy::Imp), TP("a"),
                          S(Sy::Equal), TP("b")},
                         bs);
    case AxiomTag::Nat5:
      return fold_chunks(
          {T("a"), S(Sy::Plus), S(Sy::Zero), S(Sy::Equal), T("a")}, bs);
    case AxiomTag::Nat6:
      return fold_chunks({T("a"), S(Sy::Plus), TP("b"), S(Sy::Equal),
                          S(Sy::LParen), T("a"), S(Sy::Plus), T("b"),
                          S(Sy::RParen), S(Sy::Prime)},
                         bs);
    case AxiomTag::Nat7:
      return fold_chunks(
          {T("a"), S(Sy::Times), S(Sy::Zero), S(Sy::Equal), S(Sy::Zero)}, bs);
    case AxiomTag::Nat8:
      return fold_chunks({T("a"), S(Sy::Times), TP("b"), S(Sy::Equal), T("a"),
                          S(Sy::Times), T("b"), S(Sy::Plus), T("a")},
                         bs);
    case AxiomTag::Induction: {
      auto itF = bs.find("F");
      auto itx = bs.find("x");
      auto itc = bs.find("c");
      if (itF == bs.end() || itx == bs.end() || itc == bs.end()) return std::nullopt;
      GodelNumber a = encode_ast(itF->second);
      GodelNumber b = encode_ast(itx->second);
      GodelNumber c = encode_ast(itc->second);
      GodelNumber cp = star(c, symbol_code(Sy::Prime));
      GodelNumber acc = symbol_code(Sy::LParen);
      acc = star(acc, sub_code_raw(a, b, symbol_code(Sy::Zero)));
      acc = star(acc, symbol_code(Sy::And));
      acc = star(acc, symbol_code(Sy::ForAll));
      acc = star(acc, c);
      acc = star(acc, symbol_code(Sy::LParen));
      acc = star(acc, sub_code_raw(a, b, c));
      acc = star(acc, symbol_code(Sy::Imp));
      acc = star(acc, sub_code_raw(a, b, cp));
      acc = star(acc, symbol_code(Sy::RParen));
      acc = star(acc, symbol_code(Sy::RParen));
      acc = star(acc, symbol_code(Sy::Imp));
      acc = star(acc, symbol_code(Sy::ForAll));
      acc = star(acc, c);
      acc = star(acc, sub_code_raw(a, b, c));
      return acc;
    }
  }
  return std::nullopt;
}

std::optional<RuleTag> immediate_consequence(const Ast& c,
                                             const std::vector<Ast>& premises) {
  if (premises.empty() || premises.size() > 2) return std::nullopt;
  Ast cd = desugar(c);
  if (premises.size() == 2) {
    Ast p0 = desugar(premises[0]), p1 = desugar(premises[1]);
    for (int k = 0; k < 2; ++k) {
      const Ast& A = k == 0 ? p0 : p1;
      const Ast& I = k == 0 ? p1 : p0;
      if (I->kind == Node::Imp && equal(I->a, A) && equal(I->b, cd))
        return RuleTag::MP;
    }
    return std::nullopt;
  }
  Ast p = desugar(premises[0]);
  // Gen: C->F gives C->all x(F), x not in C.
  if (cd->kind == Node::Imp && cd->b->kind == Node::ForAll &&
      p->kind == Node::Imp && equal(p->a, cd->a) &&
      equal(p->b, cd->b->a) && !contains_var(cd->a, cd->b->var))
    return RuleTag::Gen;
  // Spec: F->C gives (ex x F)->C; existentials read through desugaring.
  if (cd->kind == Node::Imp && cd->a->kind == Node::Not &&
      cd->a->a->kind == Node::ForAll && cd->a->a->a->kind == Node::Not &&
      p->kind == Node::Imp && equal(p->a, cd->a->a->a->a) &&
      equal(p->b, cd->b) && !contains_var(cd->b, cd->a->a->var))
    return RuleTag::Spec;
  return std::nullopt;
}

namespace {

CheckResult check(const std::vector<Ast>& assumptions,
                  const std::vector<Ast>& steps) {
  CheckResult r;
  if (steps.empty()) {
    r.reason = "empty sequence";
    return r;
  }
  std::vector<Ast> ds;
  ds.reserve(steps.size());
  for (const Ast& s : steps) ds.push_back(desugar(s));
  std::vector<Ast> da;
  da.reserve(assumptions.size());
  for (const Ast& s : assumptions) da.push_back(desugar(s));

  for (std::size_t i = 0; i < steps.size(); ++i) {
    Justification j{};
    bool justified = false;
    if (auto ax = classify_axiom(steps[i])) {
      j.kind = Justification::Axiom;
      j.axiom = std::move(ax);
      justified = true;
    }
    if (!justified) {
      for (std::size_t k = 0; k < da.size() && !justified; ++k) {
        if (equal(da[k], ds[i])) {
          j.kind = Justification::Assumption;
          j.i = k;
          justified = true;
        }
      }
    }
    if (!justified) {
      // single-premise rules
      for (std::size_t k = 0; k < i && !justified; ++k) {
        auto tag = immediate_consequence(steps[i], {steps[k]});
        if (tag == RuleTag::Gen || tag == RuleTag::Spec) {
          j.kind = tag == RuleTag::Gen ? Justification::Gen : Justification::Spec;
          j.i = k;
          justified = true;
        }
      }
    }
    if (!justified) {
      for (std::size_t k = 0; k < i && !justified; ++k) {
        if (ds[k]->kind != Node::Imp || !equal(ds[k]->b, ds[i])) continue;
        for (std::size_t l = 0; l < i; ++l) {
          if (l == k) continue;
          if (equal(ds[l], ds[k]->a)) {
            j.kind = Justification::MP;
            j.i = l;
            j.j = k;
            justified = true;
            break;
          }
        }
      }
    }
    if (!justified) {
      r.ok = false;
      r.bad_index = i;
      r.reason = "step is not an axiom, assumption, or immediate consequence";
      return r;
    }
    r.steps.push_back(std::move(j));
  }
  r.ok = true;
  r.conclusion = steps.back();
  return r;
}

} // namespace

CheckResult check_proof(const std::vector<Ast>& steps) { return check({}, steps); }

CheckResult check_deduction(const std::vector<Ast>& assumptions,
                            const std::vector<Ast>& steps) {
  return check(assumptions, steps);
}

bool check_contradiction(const std::vector<Ast>& p1, const std::vector<Ast>& p2) {
  CheckResult r1 = check_proof(p1);
  CheckResult r2 = check_proof(p2);
  if (!r1.ok || !r2.ok) throw SyntaxError("check_contradiction requires valid proofs");
  Ast c1 = desugar(r1.conclusion), c2 = desugar(r2.conclusion);
  return c2->kind == Node::Not && equal(c2->a, c1);
}

ProofFile parse_proof_file(const std::string& text) {
  ProofFile pf;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r\n");
    std::string body = line.substr(b, e - b + 1);
    bool assume = false;
    if (body.rfind("assume:", 0) == 0) {
      assume = true;
      body = body.substr(7);
    }
    Ast f;
    try {
      f = parse_surface(body);
    } catch (const SyntaxError& err) {
      throw SyntaxError("line " + std::to_string(lineno) + ": " + err.what());
    }
    if (!is_formula(f))
      throw SyntaxError("line " + std::to_string(lineno) + ": not a formula");
    (assume ? pf.assumptions : pf.steps).push_back(f);
  }
  return pf;
}

} // namespace godel
