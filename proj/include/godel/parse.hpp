#pragma once

#include <optional>
#include <string>

#include "godel/ast.hpp"

namespace godel {

// --- surface grammar (user input: CLI arguments, proof files) ---
//
// Relaxed infix over ASCII aliases: ->, &, |, ~, all/ex, * for the
// product dot, letters a..z (or vN) for variables 1..26 (or N), numerals
// as 0 followed by primes. Parenthesized formulas become Paren nodes;
// parentheses around terms group and vanish. (0'...') denotes the
// variable of that index unless immediately followed by a prime.
Ast parse_surface(const std::string& text); // throws SyntaxError with position
std::optional<Ast> try_parse_surface(const std::string& text);

// --- canonical grammar (symbol strings of the object language) ---

struct CanonicalOptions {
  bool sugar = true;     // accept infix /\ \/ and the existential quantifier
  bool paren = true;     // accept (F) formula groups
  bool leq_atom = false; // accept the spelled t<=u atomic strings
};

std::optional<Ast> parse_canonical_formula(const TokenString& toks,
                                           const CanonicalOptions& opts = {});
std::optional<Ast> parse_canonical_term(const TokenString& toks,
                                        const CanonicalOptions& opts = {});

// Lex the exact ASCII rendering produced by render_ascii.
std::optional<SymbolString> lex_ascii(const std::string& text);

TokenString to_tokens(const SymbolString& s);

} // namespace godel
