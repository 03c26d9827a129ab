#include "godel/symbol.hpp"

namespace godel {

std::optional<Symbol> symbol_from_exponent(int e) {
  if (e < 0 || e >= kSymbolCount) return std::nullopt;
  return static_cast<Symbol>(e);
}

std::string render_ascii(Symbol s) {
  switch (s) {
    case Symbol::Prime: return "'";
    case Symbol::Zero: return "0";
    case Symbol::LParen: return "(";
    case Symbol::RParen: return ")";
    case Symbol::LBrace: return "{";
    case Symbol::RBrace: return "}";
    case Symbol::LBrack: return "[";
    case Symbol::RBrack: return "]";
    case Symbol::Plus: return "+";
    case Symbol::Times: return "*";
    case Symbol::Equal: return "=";
    case Symbol::Imp: return "->";
    case Symbol::And: return "&";
    case Symbol::Or: return "|";
    case Symbol::Not: return "~";
    case Symbol::ForAll: return "all ";
    case Symbol::Exists: return "ex ";
    case Symbol::Comma: return ",";
  }
  return "?";
}

std::string render_ascii(const SymbolString& s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol sym : s) out += render_ascii(sym);
  return out;
}

std::string render_unicode(const SymbolString& s) {
  std::string out;
  for (Symbol sym : s) {
    switch (sym) {
      case Symbol::Prime: out += "′"; break;
      case Symbol::Times: out += "·"; break;
      case Symbol::Imp: out += "⇒"; break;
      case Symbol::And: out += "∧"; break;
      case Symbol::Or: out += "∨"; break;
      case Symbol::Not: out += "¬"; break;
      case Symbol::ForAll: out += "∀"; break;
      case Symbol::Exists: out += "∃"; break;
      default: out += render_ascii(sym); break;
    }
  }
  return out;
}

SymbolString operator+(const SymbolString& a, const SymbolString& b) {
  SymbolString r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

SymbolString& operator+=(SymbolString& a, const SymbolString& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace godel
