#include "godel/numbering.hpp"

namespace godel {

unsigned long ell(const GodelNumber& m) {
  if (m == 0) return 0;
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

GodelNumber star(const GodelNumber& n, const GodelNumber& m) {
  GodelNumber r;
  mpz_mul_2exp(r.get_mpz_t(), n.get_mpz_t(), ell(m));
  r += m;
  return r;
}

GodelNumber symbol_code(Symbol s) {
  GodelNumber r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exponent(s));
  return r;
}

GodelNumber encode(const SymbolString& s) {
  GodelNumber acc = 0;
  for (Symbol sym : s) {
    mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), exponent(sym) + 1);
    mpz_setbit(acc.get_mpz_t(), exponent(sym));
  }
  return acc;
}

SymbolString decode(const GodelNumber& x) {
  SymbolString out;
  TokenString toks = decode_tokens(x);
  for (const SymbolRun& r : toks) {
    if (!r.count.fits_ulong_p())
      throw DecodeError("expression too large to materialize symbol by symbol");
    unsigned long n = r.count.get_ui();
    for (unsigned long i = 0; i < n; ++i) out.push_back(r.sym);
  }
  return out;
}

TokenString decode_tokens(const GodelNumber& x) {
  auto r = try_decode_tokens(x);
  if (!r) throw DecodeError("not the code of any expression");
  return *r;
}

std::optional<TokenString> try_decode_tokens(const GodelNumber& x) {
  TokenString out;
  if (x == 0) return out;
  if (x < 0) return std::nullopt;
  unsigned long len = ell(x);
  // Alternating runs of ones and zeros, least significant bit upward.
  // A run of m ones followed (above) by z zeros reads, in string order,
  // as m-1 prime symbols then one symbol of exponent z.
  struct Run {
    unsigned long ones;
    unsigned long zeros;
  };
  std::vector<Run> runs; // bottom-up: zeros below the ones of the same run
  unsigned long pos = 0;
  while (pos < len) {
    unsigned long one_at = mpz_scan1(x.get_mpz_t(), pos);
    unsigned long zeros = one_at - pos;
    unsigned long one_end = mpz_scan0(x.get_mpz_t(), one_at);
    runs.push_back(Run{one_end - one_at, zeros});
    pos = one_end;
  }
  // Emit most significant run first.
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    if (it->zeros >= static_cast<unsigned long>(kSymbolCount)) return std::nullopt;
    Symbol tail = static_cast<Symbol>(it->zeros);
    unsigned long primes = it->ones - 1;
    if (tail == Symbol::Prime) {
      primes += 1;
      if (!out.empty() && out.back().sym == Symbol::Prime)
        out.back().count += primes;
      else
        out.push_back(SymbolRun{Symbol::Prime, GodelNumber(primes)});
    } else {
      if (primes > 0) {
        if (!out.empty() && out.back().sym == Symbol::Prime)
          out.back().count += primes;
        else
          out.push_back(SymbolRun{Symbol::Prime, GodelNumber(primes)});
      }
      out.push_back(SymbolRun{tail, 1});
    }
  }
  return out;
}

GodelNumber encode_tokens(const TokenString& toks) {
  GodelNumber acc = 0;
  for (const SymbolRun& r : toks) {
    if (r.count < 0) throw DecodeError("negative run length");
    if (r.count == 0) continue;
    if (r.sym == Symbol::Prime) {
      // Run of k primes appends k one-bits.
      if (!r.count.fits_ulong_p()) throw DecodeError("run too long");
      unsigned long k = r.count.get_ui();
      mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), k);
      GodelNumber ones = 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), k);
      ones -= 1;
      acc += ones;
    } else {
      if (!r.count.fits_ulong_p()) throw DecodeError("run too long");
      unsigned long k = r.count.get_ui();
      for (unsigned long i = 0; i < k; ++i) {
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), exponent(r.sym) + 1);
        mpz_setbit(acc.get_mpz_t(), exponent(r.sym));
      }
    }
  }
  return acc;
}

GodelNumber numeral_code(const GodelNumber& a) {
  if (a < 0) throw DecodeError("negative numeral");
  if (!a.fits_ulong_p()) throw DecodeError("numeral code exceeds representable size");
  GodelNumber r = 3;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), a.get_ui());
  r -= 1;
  return r;
}

bool is_begin(const GodelNumber& x, const GodelNumber& y) {
  if (x == y) return true;
  if (x == 0) return false;
  unsigned long lx = ell(x), ly = ell(y);
  if (lx >= ly) return false;
  unsigned long d = ly - lx;
  GodelNumber hi;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), y.get_mpz_t(), d);
  if (hi != x) return false;
  return mpz_tstbit(y.get_mpz_t(), d - 1) != 0;
}

bool is_end(const GodelNumber& x, const GodelNumber& y) {
  if (x == y) return true;
  if (x == 0) return false;
  unsigned long lx = ell(x), ly = ell(y);
  if (lx >= ly) return false;
  GodelNumber lo = bit_slice(y, 0, lx);
  return lo == x;
}

GodelNumber bit_slice(const GodelNumber& y, unsigned long low, unsigned long len) {
  GodelNumber shifted;
  mpz_fdiv_q_2exp(shifted.get_mpz_t(), y.get_mpz_t(), low);
  GodelNumber mask = 1;
  mpz_mul_2exp(mask.get_mpz_t(), mask.get_mpz_t(), len);
  mask -= 1;
  shifted &= mask;
  return shifted;
}

std::vector<unsigned long> part_offsets(const GodelNumber& x, const GodelNumber& y) {
  std::vector<unsigned long> out;
  if (x == 0 || y == 0 || x < 0 || y < 0) {
    if (x == y) out.push_back(0);
    return out;
  }
  unsigned long lx = ell(x), ly = ell(y);
  if (lx > ly) return out;
  // Occurrences start at 1 bits of y (x's leading bit is 1).
  for (unsigned long start = ly; start >= lx; --start) {
    // Window of length lx whose most significant bit is at start-1.
    unsigned long low = start - lx;
    if (!mpz_tstbit(y.get_mpz_t(), start - 1)) {
      if (start == lx) break;
      continue;
    }
    // Boundary: occurrence must end at the string end or before a 1 bit.
    if (low != 0 && !mpz_tstbit(y.get_mpz_t(), low - 1)) {
      if (start == lx) break;
      continue;
    }
    if (bit_slice(y, low, lx) == x) out.push_back(low);
    if (start == lx) break;
  }
  return out;
}

bool is_part(const GodelNumber& x, const GodelNumber& y) {
  if (x == y) return true;
  if (x == 0) return false;
  return !part_offsets(x, y).empty();
}

} // namespace godel
