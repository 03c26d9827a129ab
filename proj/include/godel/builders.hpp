#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "godel/ast.hpp"
#include "godel/numbering.hpp"

namespace godel::builders {

// ---- template IR: terms and formulas over object-language variables ----

struct TExpr;
using TExprP = std::shared_ptr<const TExpr>;
struct TExpr {
  enum K { Var, Const, Plus, Times, Succ } k;
  unsigned long var = 0; // object variable index (parameter or binder)
  GodelNumber num;       // Const
  TExprP a, b;
};

TExprP tv(unsigned long v);
TExprP tc(GodelNumber n);
TExprP tplus(TExprP a, TExprP b);
TExprP ttimes(TExprP a, TExprP b);
TExprP tsucc(TExprP a);

struct FExpr;
using FExprP = std::shared_ptr<const FExpr>;
struct FExpr {
  enum K {
    Eq, Neq, Leq, Lt, And, Or, Imp, Not, ForAll, Exists,
    BForAllLe, BExistsLe, BForAllLt, BExistsLt, // quantifier bounded by a term
    Call,   // reference to an earlier definition
    StarEq, // args[0] is the result; args[1..] concatenate to it
  } k;
  unsigned long var = 0; // quantified variable
  TExprP t, u;           // terms / quantifier bound
  FExprP f, g;
  std::string callee;
  std::vector<TExprP> args;
};

FExprP feq(TExprP t, TExprP u);
FExprP fneq(TExprP t, TExprP u);
FExprP fleq(TExprP t, TExprP u);
FExprP flt(TExprP t, TExprP u);
FExprP fand(FExprP f, FExprP g);
FExprP f_or(FExprP f, FExprP g);
FExprP fimp(FExprP f, FExprP g);
FExprP fnot(FExprP f);
FExprP fall(unsigned long v, FExprP f);
FExprP fex(unsigned long v, FExprP f);
FExprP fall_le(unsigned long v, TExprP bound, FExprP f);
FExprP fex_le(unsigned long v, TExprP bound, FExprP f);
FExprP fall_lt(unsigned long v, TExprP bound, FExprP f);
FExprP fex_lt(unsigned long v, TExprP bound, FExprP f);
FExprP fcall(std::string callee, std::vector<TExprP> args);
FExprP fstar(std::vector<TExprP> result_then_operands);

struct Definition {
  std::string name;
  int item = 0; // defining item number, 0 for helpers
  std::vector<unsigned long> params;
  FExprP body;
};

class DefDag {
 public:
  void add(Definition d);
  const Definition* find(const std::string& name) const;
  const std::vector<Definition>& definitions() const { return defs_; }

 private:
  std::vector<Definition> defs_;
  std::map<std::string, std::size_t> index_;
};

// The full chain: items 1-34 plus the helpers they need, ending with the
// rosser and goedel sentence templates over the free variable a.
DefDag build_library();

struct GuardError : std::runtime_error {
  GodelNumber exact_count;
  explicit GuardError(GodelNumber c)
      : std::runtime_error("expansion guard exceeded: " + c.get_str()),
        exact_count(std::move(c)) {}
};

struct ExpandOptions {
  GodelNumber symbol_guard = GodelNumber(1) << 20;
};

// Full definitional expansion into a pure wff; parameters stay free.
Ast expand(const DefDag& dag, const std::string& name,
           const ExpandOptions& opts = {});

// Magnitudes that outgrow exact integers: tower counts the number of
// two-to-the-power applications over the exact base. Comparisons are
// valid within one construction chain, where each level strictly
// exceeds the one below.
struct BigSize {
  int tower = 0;
  GodelNumber base;
};
bool big_less(const BigSize& a, const BigSize& b);
std::string big_to_string(const BigSize& s);

struct SentenceStats {
  GodelNumber expanded_symbol_count;
  GodelNumber bit_length;
  std::optional<GodelNumber> godel_number; // present only under the guard
  std::set<unsigned long> free_vars;
};

struct StatsOptions {
  GodelNumber code_bit_guard = GodelNumber(1) << 24;
};

// Exact counts via memoized linear recurrences; no materialization.
SentenceStats stats(const DefDag& dag, const std::string& name,
                    const StatsOptions& opts = {});

enum class DiagonalKind { Rosser, Goedel };

struct DiagonalSentence {
  DiagonalKind kind;
  std::string body;           // template name: the one-free-variable formula
  GodelNumber body_count;     // its exact symbol count
  GodelNumber body_bits;      // its exact code bit length
  std::optional<GodelNumber> q; // the code, when under the guard
  BigSize diagonal_count;     // symbol count of the diagonalized sentence
  BigSize diagonal_bits;      // bit length of its code
};

struct BuildOptions {
  GodelNumber code_bit_guard = GodelNumber(1) << 24;
};

DiagonalSentence build_rosser(const DefDag& dag, const BuildOptions& opts = {});
DiagonalSentence build_goedel(const DefDag& dag, const BuildOptions& opts = {});

// The diagonal of a small template, at the ast level, spelled with the
// parentheses of the coded substitution function.
Ast diagonal_ast(const Ast& body, unsigned long var, const GodelNumber& q);

} // namespace godel::builders
