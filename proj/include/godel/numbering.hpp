#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "godel/symbol.hpp"

namespace godel {

// Codes are arbitrary-precision naturals; 0 codes the empty expression.
using GodelNumber = mpz_class;

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of binary digits of m; ell(0) = 0.
unsigned long ell(const GodelNumber& m);

// n*m = 2^ell(m) * n + m; binary concatenation of the two codes.
GodelNumber star(const GodelNumber& n, const GodelNumber& m);

GodelNumber symbol_code(Symbol s);

// Left fold of star over the symbol codes.
GodelNumber encode(const SymbolString& s);

// Inverse of encode. Throws DecodeError when some chunk 1 0^k has
// k >= 18 (no symbol carries that code).
SymbolString decode(const GodelNumber& x);

// Run-length token: `count` consecutive copies of `sym`.
struct SymbolRun {
  Symbol sym;
  GodelNumber count;
};
using TokenString = std::vector<SymbolRun>;

// Run-length decode; linear in the number of runs, so numerals of any
// size stay cheap. Throws DecodeError as decode does.
TokenString decode_tokens(const GodelNumber& x);

std::optional<TokenString> try_decode_tokens(const GodelNumber& x);

GodelNumber encode_tokens(const TokenString& toks);

// Code of the numeral 0'...' with a primes: 2^1 * (2^a - 1) = 3*2^a - 1.
GodelNumber numeral_code(const GodelNumber& a);

// --- bit-level string relations used throughout the arithmetization ---

// bits(x) is a prefix of bits(y) with the remainder starting in a 1 bit
// (or x == y). False when x == 0 != y.
bool is_begin(const GodelNumber& x, const GodelNumber& y);

// bits(x) is a suffix of bits(y) (or x == y).
bool is_end(const GodelNumber& x, const GodelNumber& y);

// bits(x) occurs in bits(y) ending at a 1 bit boundary or at the end.
bool is_part(const GodelNumber& x, const GodelNumber& y);

// All bit offsets d such that bits(x) occurs in bits(y) with d bits
// remaining to the right of the occurrence, the occurrence ending at a
// valid boundary (next bit 1, or d == 0). Offsets sorted descending.
std::vector<unsigned long> part_offsets(const GodelNumber& x, const GodelNumber& y);

// Value of the length-`len` bit field of y ending `low` bits from the
// least significant end.
GodelNumber bit_slice(const GodelNumber& y, unsigned long low, unsigned long len);

} // namespace godel
