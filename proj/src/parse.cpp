#include "godel/parse.hpp"

#include <cctype>
#include <cstring>

namespace godel {

// ---------------------------------------------------------------- surface

namespace {

struct SurfaceParser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at offset " + std::to_string(i));
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  bool eat_str(const char* t) {
    skip_ws();
    std::size_t n = std::strlen(t);
    if (s.compare(i, n, t) == 0) {
      i += n;
      return true;
    }
    return false;
  }

  bool peek_char(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  // Keyword followed by a non-identifier character.
  bool eat_kw(const char* kw) {
    skip_ws();
    std::size_t n = std::strlen(kw);
    if (s.compare(i, n, kw) != 0) return false;
    std::size_t j = i + n;
    if (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) return false;
    i += n;
    return true;
  }

  unsigned long parse_var_name() {
    skip_ws();
    if (i >= s.size()) fail("expected a variable");
    char c = s[i];
    if (c == 'v' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      ++i;
      unsigned long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + static_cast<unsigned long>(s[i++] - '0');
      if (v == 0) fail("variable index must be positive");
      return v;
    }
    if (c >= 'a' && c <= 'z') {
      ++i;
      return static_cast<unsigned long>(c - 'a') + 1;
    }
    fail("expected a variable");
  }

  unsigned long count_primes() {
    unsigned long n = 0;
    while (i < s.size() && s[i] == '\'') {
      ++n;
      ++i;
    }
    return n;
  }

  // (0'...') with k >= 1 primes; cursor must sit on '('.
  std::optional<unsigned long> try_canonical_var() {
    std::size_t save = i;
    if (!eat('(')) return std::nullopt;
    skip_ws();
    if (i >= s.size() || s[i] != '0') {
      i = save;
      return std::nullopt;
    }
    ++i;
    unsigned long k = count_primes();
    if (k >= 1 && eat(')')) {
      // A prime right after the group means successor-of-numeral instead.
      if (i < s.size() && s[i] == '\'') {
        i = save;
        return std::nullopt;
      }
      return k;
    }
    i = save;
    return std::nullopt;
  }

  Ast parse_primary_term() {
    skip_ws();
    if (i >= s.size()) fail("expected a term");
    char c = s[i];
    if (c == '0') {
      ++i;
      unsigned long k = count_primes();
      return k == 0 ? mk_zero() : mk_numeral(GodelNumber(k));
    }
    if (c == '(') {
      if (auto v = try_canonical_var()) return mk_var(*v);
      ++i;
      Ast t = parse_term();
      if (!eat(')')) fail("expected ')'");
      return t; // grouping vanishes
    }
    if ((c >= 'a' && c <= 'z')) return mk_var(parse_var_name());
    fail("expected a term");
  }

  Ast parse_postfix_term() {
    Ast t = parse_primary_term();
    while (i < s.size() && s[i] == '\'') {
      ++i;
      t = mk_succ(t);
    }
    return t;
  }

  Ast parse_mul_term() {
    Ast t = parse_postfix_term();
    while (true) {
      skip_ws();
      if (eat('*')) {
        t = mk_prod(t, parse_postfix_term());
        continue;
      }
      // A lone dot also multiplies.
      if (peek_char('.')) {
        ++i;
        t = mk_prod(t, parse_postfix_term());
        continue;
      }
      return t;
    }
  }

  Ast parse_term() {
    Ast t = parse_mul_term();
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == '+') {
        ++i;
        t = mk_sum(t, parse_mul_term());
        continue;
      }
      return t;
    }
  }

  Ast parse_unit_formula() {
    skip_ws();
    if (i >= s.size()) fail("expected a formula");
    if (eat('~')) {
      skip_ws();
      if (i < s.size() && s[i] == '~') return mk_not(parse_unit_formula());
      if (s.compare(i, 3, "all") == 0 || s.compare(i, 2, "ex") == 0)
        return mk_not(parse_unit_formula());
      if (!eat('(')) fail("expected '(' after '~'");
      Ast f = parse_formula();
      if (!eat(')')) fail("expected ')'");
      return mk_not(f);
    }
    if (eat_kw("all")) {
      unsigned long v = parse_var_name();
      return mk_forall(v, parse_quant_body());
    }
    if (eat_kw("ex")) {
      unsigned long v = parse_var_name();
      return mk_exists(v, parse_quant_body());
    }
    // atom or parenthesized formula
    if (peek_char('(')) {
      std::size_t save = i;
      try {
        return parse_atom();
      } catch (const SyntaxError&) {
        i = save;
      }
      if (!eat('(')) fail("expected '('");
      Ast f = parse_formula();
      if (!eat(')')) fail("expected ')'");
      return mk_paren(f);
    }
    return parse_atom();
  }

  Ast parse_quant_body() {
    skip_ws();
    if (i >= s.size()) fail("expected a quantifier body");
    if (s[i] == '(') {
      // Try an atom first so bodies like (a)+(0)=(a) work; otherwise the
      // group is the body and vanishes structurally.
      std::size_t save = i;
      try {
        return parse_atom();
      } catch (const SyntaxError&) {
        i = save;
      }
      if (!eat('(')) fail("expected '('");
      Ast f = parse_formula();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    return parse_unit_formula();
  }

  Ast parse_atom() {
    Ast t = parse_term();
    skip_ws();
    if (!eat('=')) fail("expected '='");
    Ast u = parse_term();
    return mk_eq(t, u);
  }

  Ast parse_and_chain() {
    Ast f = parse_unit_formula();
    while (eat('&')) f = mk_and(f, parse_unit_formula());
    return f;
  }

  Ast parse_or_chain() {
    Ast f = parse_and_chain();
    while (true) {
      skip_ws();
      if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') return f;
      if (eat('|')) {
        f = mk_or(f, parse_and_chain());
        continue;
      }
      return f;
    }
  }

  Ast parse_formula() {
    Ast f = parse_or_chain();
    skip_ws();
    if (eat_str("->")) return mk_imp(f, parse_formula());
    return f;
  }

  Ast parse_top() {
    skip_ws();
    // A bare term is accepted when no '=' follows (the `parse` CLI prints
    // terms too); otherwise parse a formula.
    std::size_t save = i;
    try {
      Ast f = parse_formula();
      skip_ws();
      if (i == s.size()) return f;
    } catch (const SyntaxError&) {
    }
    i = save;
    Ast t = parse_term();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return t;
  }
};

} // namespace

Ast parse_surface(const std::string& text) {
  SurfaceParser p{text};
  return p.parse_top();
}

std::optional<Ast> try_parse_surface(const std::string& text) {
  try {
    return parse_surface(text);
  } catch (const SyntaxError&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- lexer

std::optional<SymbolString> lex_ascii(const std::string& text) {
  SymbolString out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '\'': out.push_back(Symbol::Prime); ++i; continue;
      case '0': out.push_back(Symbol::Zero); ++i; continue;
      case '(': out.push_back(Symbol::LParen); ++i; continue;
      case ')': out.push_back(Symbol::RParen); ++i; continue;
      case '{': out.push_back(Symbol::LBrace); ++i; continue;
      case '}': out.push_back(Symbol::RBrace); ++i; continue;
      case '[': out.push_back(Symbol::LBrack); ++i; continue;
      case ']': out.push_back(Symbol::RBrack); ++i; continue;
      case '+': out.push_back(Symbol::Plus); ++i; continue;
      case '*': case '.': out.push_back(Symbol::Times); ++i; continue;
      case '=': out.push_back(Symbol::Equal); ++i; continue;
      case '&': out.push_back(Symbol::And); ++i; continue;
      case '|': out.push_back(Symbol::Or); ++i; continue;
      case '~': out.push_back(Symbol::Not); ++i; continue;
      case ',': out.push_back(Symbol::Comma); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back(Symbol::Imp);
          i += 2;
          continue;
        }
        return std::nullopt;
      case 'a':
        if (text.compare(i, 3, "all") == 0) {
          out.push_back(Symbol::ForAll);
          i += 3;
          continue;
        }
        return std::nullopt;
      case 'e':
        if (text.compare(i, 2, "ex") == 0) {
          out.push_back(Symbol::Exists);
          i += 2;
          continue;
        }
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }
  return out;
}

TokenString to_tokens(const SymbolString& s) {
  TokenString out;
  for (Symbol sym : s) {
    if (!out.empty() && out.back().sym == sym)
      out.back().count += 1;
    else
      out.push_back(SymbolRun{sym, 1});
  }
  return out;
}

// ---------------------------------------------------------------- canonical

namespace {

struct Cursor {
  const TokenString& t;
  std::size_t idx = 0;
  GodelNumber used = 0; // consumed from the current run

  bool at_end() const { return idx >= t.size(); }

  std::optional<Symbol> peek() const {
    if (at_end()) return std::nullopt;
    return t[idx].sym;
  }

  GodelNumber remaining_in_run() const { return t[idx].count - used; }

  bool take(Symbol s) {
    if (at_end() || t[idx].sym != s) return false;
    used += 1;
    if (used == t[idx].count) {
      ++idx;
      used = 0;
    }
    return true;
  }

  // Consume the whole remaining prime run; 0 when not on a prime.
  GodelNumber take_prime_run() {
    if (at_end() || t[idx].sym != Symbol::Prime) return 0;
    GodelNumber n = t[idx].count - used;
    ++idx;
    used = 0;
    return n;
  }
};

struct CanonicalParser {
  const CanonicalOptions& opts;

  std::optional<Ast> parse_term(Cursor& c) {
    auto p = c.peek();
    if (!p) return std::nullopt;
    if (*p == Symbol::Zero) {
      c.take(Symbol::Zero);
      GodelNumber k = c.take_prime_run();
      return mk_numeral(k);
    }
    if (*p == Symbol::LParen) {
      c.take(Symbol::LParen);
      auto inner = parse_term(c);
      if (!inner) return std::nullopt;
      if (!c.take(Symbol::RParen)) return std::nullopt;
      auto q = c.peek();
      if (q && *q == Symbol::Prime) {
        c.take(Symbol::Prime);
        return mk_succ(*inner);
      }
      if (q && (*q == Symbol::Plus || *q == Symbol::Times)) {
        Symbol op = *q;
        c.take(op);
        if (!c.take(Symbol::LParen)) return std::nullopt;
        auto rhs = parse_term(c);
        if (!rhs) return std::nullopt;
        if (!c.take(Symbol::RParen)) return std::nullopt;
        return op == Symbol::Plus ? mk_sum(*inner, *rhs) : mk_prod(*inner, *rhs);
      }
      // Bare (0'...') is the variable of that index.
      if ((*inner)->kind == Node::Numeral && (*inner)->num.fits_ulong_p())
        return mk_var((*inner)->num.get_ui());
      return std::nullopt;
    }
    return std::nullopt;
  }

  // all-or-exists quantified variable: (0'^k), k >= 1.
  std::optional<unsigned long> parse_bound_var(Cursor& c) {
    if (!c.take(Symbol::LParen)) return std::nullopt;
    if (!c.take(Symbol::Zero)) return std::nullopt;
    GodelNumber k = c.take_prime_run();
    if (k == 0 || !k.fits_ulong_p()) return std::nullopt;
    if (!c.take(Symbol::RParen)) return std::nullopt;
    return k.get_ui();
  }

  std::optional<Ast> try_leq_atom(Cursor& c) {
    Cursor save = c;
    auto step = [&](Symbol s) { return c.take(s); };
    if (step(Symbol::Not) && step(Symbol::LParen) && step(Symbol::ForAll) &&
        step(Symbol::LParen) && step(Symbol::Zero) && step(Symbol::Prime)) {
      if (c.peek() == std::optional<Symbol>(Symbol::Prime)) {
        c = save;
        return std::nullopt;
      }
      if (step(Symbol::RParen) && step(Symbol::LParen) && step(Symbol::Not) &&
          step(Symbol::LParen)) {
        auto t1 = parse_term(c);
        if (t1 && step(Symbol::Plus) && step(Symbol::LParen) && step(Symbol::Zero) &&
            step(Symbol::Prime) && c.peek() != std::optional<Symbol>(Symbol::Prime) &&
            step(Symbol::RParen) && step(Symbol::Equal)) {
          auto t2 = parse_term(c);
          if (t2 && step(Symbol::RParen) && step(Symbol::RParen) &&
              step(Symbol::RParen)) {
            return mk_leq_atom(*t1, *t2);
          }
        }
      }
    }
    c = save;
    return std::nullopt;
  }

  std::optional<Ast> parse_unit(Cursor& c) {
    auto p = c.peek();
    if (!p) return std::nullopt;
    if (*p == Symbol::Not) {
      if (opts.leq_atom) {
        if (auto leq = try_leq_atom(c)) return leq;
      }
      c.take(Symbol::Not);
      if (!c.take(Symbol::LParen)) return std::nullopt;
      auto f = parse_formula(c);
      if (!f) return std::nullopt;
      if (!c.take(Symbol::RParen)) return std::nullopt;
      return mk_not(*f);
    }
    if (*p == Symbol::ForAll || (*p == Symbol::Exists && opts.sugar)) {
      Symbol q = *p;
      c.take(q);
      auto v = parse_bound_var(c);
      if (!v) return std::nullopt;
      if (!c.take(Symbol::LParen)) return std::nullopt;
      auto f = parse_formula(c);
      if (!f) return std::nullopt;
      if (!c.take(Symbol::RParen)) return std::nullopt;
      return q == Symbol::ForAll ? mk_forall(*v, *f) : mk_exists(*v, *f);
    }
    if (*p == Symbol::LParen) {
      Cursor save = c;
      if (auto atom = parse_atom(c)) return atom;
      c = save;
      if (!opts.paren) return std::nullopt;
      c.take(Symbol::LParen);
      auto f = parse_formula(c);
      if (!f) return std::nullopt;
      if (!c.take(Symbol::RParen)) return std::nullopt;
      return mk_paren(*f);
    }
    return parse_atom(c);
  }

  std::optional<Ast> parse_atom(Cursor& c) {
    auto t = parse_term(c);
    if (!t) return std::nullopt;
    if (!c.take(Symbol::Equal)) return std::nullopt;
    auto u = parse_term(c);
    if (!u) return std::nullopt;
    return mk_eq(*t, *u);
  }

  std::optional<Ast> parse_and_chain(Cursor& c) {
    auto f = parse_unit(c);
    if (!f) return std::nullopt;
    while (opts.sugar && c.peek() == std::optional<Symbol>(Symbol::And)) {
      c.take(Symbol::And);
      auto g = parse_unit(c);
      if (!g) return std::nullopt;
      f = mk_and(*f, *g);
    }
    return f;
  }

  std::optional<Ast> parse_or_chain(Cursor& c) {
    auto f = parse_and_chain(c);
    if (!f) return std::nullopt;
    while (opts.sugar && c.peek() == std::optional<Symbol>(Symbol::Or)) {
      c.take(Symbol::Or);
      auto g = parse_and_chain(c);
      if (!g) return std::nullopt;
      f = mk_or(*f, *g);
    }
    return f;
  }

  std::optional<Ast> parse_formula(Cursor& c) {
    auto f = parse_or_chain(c);
    if (!f) return std::nullopt;
    if (c.peek() == std::optional<Symbol>(Symbol::Imp)) {
      c.take(Symbol::Imp);
      auto g = parse_formula(c);
      if (!g) return std::nullopt;
      return mk_imp(*f, *g);
    }
    return f;
  }
};

} // namespace

std::optional<Ast> parse_canonical_formula(const TokenString& toks,
                                           const CanonicalOptions& opts) {
  CanonicalParser p{opts};
  Cursor c{toks};
  auto f = p.parse_formula(c);
  if (!f || !c.at_end()) return std::nullopt;
  return f;
}

std::optional<Ast> parse_canonical_term(const TokenString& toks,
                                        const CanonicalOptions& opts) {
  CanonicalParser p{opts};
  Cursor c{toks};
  auto t = p.parse_term(c);
  if (!t || !c.at_end()) return std::nullopt;
  return t;
}

} // namespace godel
