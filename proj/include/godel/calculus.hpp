#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "godel/ast.hpp"

namespace godel {

enum class AxiomTag {
  Prop1, Prop2, Prop3, Prop4, Prop5, Prop6, Prop7, Prop8, Prop9, Prop10, Prop11,
  Pred1, Pred2, Pred3, Pred4,
  Nat1, Nat2, Nat3, Nat4, Nat5, Nat6, Nat7, Nat8,
  Induction,
};

const char* axiom_tag_name(AxiomTag t);

struct AxiomClass {
  AxiomTag tag;
  std::map<std::string, Ast> bindings;
  Ast normalized; // the classified formula with explicit parentheses removed
};

// First match in the fixed order Prop1..Prop11, Pred1..Pred4, Nat1..Nat8,
// Induction, against the formula with Paren nodes stripped.
std::optional<AxiomClass> classify_axiom(const Ast& f);

// Rebuilds the normalized formula from tag and bindings.
Ast instantiate_axiom(AxiomTag tag, const std::map<std::string, Ast>& bindings);

// Code of the instance spelled exactly as the arithmetized axiom
// recognizers expect. Pred3 and Pred4 have no such spelling.
std::optional<GodelNumber> axiom_instance_code(
    AxiomTag tag, const std::map<std::string, Ast>& bindings);

enum class RuleTag { MP, Gen, Spec };

// Rule recognition on desugared forms; premises of length 1 or 2.
std::optional<RuleTag> immediate_consequence(const Ast& c,
                                             const std::vector<Ast>& premises);

struct Justification {
  enum Kind { Axiom, Assumption, MP, Gen, Spec } kind;
  std::optional<AxiomClass> axiom;
  std::size_t i = 0, j = 0; // earlier step indices (MP uses both)
};

struct CheckResult {
  bool ok = false;
  std::size_t bad_index = 0;
  std::string reason;
  std::vector<Justification> steps;
  Ast conclusion; // last formula when ok
};

CheckResult check_proof(const std::vector<Ast>& steps);
CheckResult check_deduction(const std::vector<Ast>& assumptions,
                            const std::vector<Ast>& steps);

// True when the second proof concludes the negation of the first's
// conclusion (compared after desugaring). Throws on invalid proofs.
bool check_contradiction(const std::vector<Ast>& p1, const std::vector<Ast>& p2);

// One formula per line in the surface grammar; '#' comments and blank
// lines ignored; assumption lines start with "assume:".
struct ProofFile {
  std::vector<Ast> assumptions;
  std::vector<Ast> steps;
};
ProofFile parse_proof_file(const std::string& text);

Ast strip_parens(const Ast& f);

} // namespace godel
