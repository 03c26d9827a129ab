#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "godel/numbering.hpp"
#include "godel/symbol.hpp"

namespace godel {

enum class Node : std::uint8_t {
  Zero,
  Var,     // variable with positive index; prints as (0'...')
  Numeral, // 0 followed by n primes, n held exactly
  Succ,    // (t)'
  Sum,     // (t)+(u)
  Prod,    // (t)*(u)
  Eq,      // t=u
  Imp,     // F->G
  And,
  Or,
  Not,     // ~(F)
  ForAll,  // all v(F)
  Exists,
  Paren,   // (F) explicit formula parenthesization
  LeqAtom, // atomic t<=u in its fixed object-language spelling
};

struct AstNode;
using Ast = std::shared_ptr<const AstNode>;

struct AstNode {
  Node kind;
  unsigned long var = 0; // Var index or quantified variable
  GodelNumber num;       // Numeral payload
  Ast a, b;
};

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Factories validate term/formula sorts and normalize Numeral(0) to Zero.
Ast mk_zero();
Ast mk_var(unsigned long index);
Ast mk_numeral(GodelNumber n);
Ast mk_succ(Ast t);
Ast mk_sum(Ast t, Ast u);
Ast mk_prod(Ast t, Ast u);
Ast mk_eq(Ast t, Ast u);
Ast mk_imp(Ast f, Ast g);
Ast mk_and(Ast f, Ast g);
Ast mk_or(Ast f, Ast g);
Ast mk_not(Ast f);
Ast mk_forall(unsigned long v, Ast f);
Ast mk_exists(unsigned long v, Ast f);
Ast mk_paren(Ast f);
Ast mk_leq_atom(Ast t, Ast u);

bool is_term(const Ast& a);
bool is_formula(const Ast& a);

bool equal(const Ast& a, const Ast& b);
std::size_t hash_ast(const Ast& a);

// Pure {~, ->, all} language over =-atoms: no And/Or/Exists/Paren/LeqAtom.
bool is_core(const Ast& a);

// Eliminates And, Or, Exists, Paren and LeqAtom; idempotent.
Ast desugar(const Ast& a);

std::set<unsigned long> free_vars(const Ast& a);
std::set<unsigned long> all_vars(const Ast& a);
bool contains_var(const Ast& a, unsigned long v);

// Term t is free for x in f: no free occurrence of x lies in the scope
// of a quantifier binding a variable of t.
bool term_free_for(const Ast& t, unsigned long x, const Ast& f);

// Replace every free occurrence of x in f by the term t (no capture
// check; pair with term_free_for).
Ast subst_term(const Ast& f, unsigned long x, const Ast& t);

// all x (x=numeral(n) -> f), applied even when x does not occur in f.
Ast subst_convention(const Ast& f, unsigned long x, const GodelNumber& n);

// Same with the parenthesization the coded substitution function uses:
// all x ((x=numeral(n)) -> (f)).
Ast subst_convention_paren(const Ast& f, unsigned long x, const GodelNumber& n);

struct PrintOptions {
  // Largest numeral materialized symbol by symbol.
  unsigned long numeral_guard = 1ul << 20;
};

// Canonical projection to the symbol string. Throws SyntaxError on
// And/Or/Exists and on numerals above the guard.
SymbolString print_canonical(const Ast& a, const PrintOptions& opts = {});

// Run-length form of the canonical projection; numerals of any size.
TokenString print_tokens(const Ast& a);

// Code of the canonical projection, computed without materializing.
GodelNumber encode_ast(const Ast& a);

// Symbol count of the canonical projection (numerals via closed form).
GodelNumber symbol_count(const Ast& a);

// Bit length of encode_ast(a), computed without materializing.
GodelNumber code_bit_length(const Ast& a);

std::string to_string(const Ast& a); // ASCII rendering, unguarded small use

} // namespace godel
