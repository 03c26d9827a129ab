#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace godel {

// The 18 primitive symbols of the object language. Variables are not
// symbols; they are derived strings of the form (0'...').
enum class Symbol : std::uint8_t {
  Prime = 0,   // '
  Zero = 1,    // 0
  LParen = 2,  // (
  RParen = 3,  // )
  LBrace = 4,  // {
  RBrace = 5,  // }
  LBrack = 6,  // [
  RBrack = 7,  // ]
  Plus = 8,    // +
  Times = 9,   // .
  Equal = 10,  // =
  Imp = 11,    // =>
  And = 12,    // /\
  Or = 13,     // \/
  Not = 14,    // ~
  ForAll = 15, // forall
  Exists = 16, // exists
  Comma = 17,  // ,
};

inline constexpr int kSymbolCount = 18;

// Reserved marker exponents; not symbols of the language.
inline constexpr int kMarkerS = 18; // 2^18
inline constexpr int kMarkerT = 19; // 2^19

using SymbolString = std::vector<Symbol>;

// Exponent of the symbol's code: code(sym) = 2^exponent(sym).
constexpr int exponent(Symbol s) { return static_cast<int>(s); }

std::optional<Symbol> symbol_from_exponent(int e);

// ASCII rendering, one token per symbol; re-parseable by the surface
// grammar (quantifiers render with a trailing space).
std::string render_ascii(const SymbolString& s);
std::string render_ascii(Symbol s);

// Single-glyph UTF-8 rendering for display.
std::string render_unicode(const SymbolString& s);

SymbolString operator+(const SymbolString& a, const SymbolString& b);
SymbolString& operator+=(SymbolString& a, const SymbolString& b);

} // namespace godel
