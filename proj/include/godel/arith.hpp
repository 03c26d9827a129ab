#pragma once

#include <optional>
#include <string>
#include <vector>

#include "godel/ast.hpp"
#include "godel/numbering.hpp"

namespace godel::arith {

enum class Pred {
  Div, PowerOf2, LeastPow2, StarRel, Begin, End, Part, Succ, Var, Num,
  Seq, ElementOf, Before, Term, Atom, Gen, Form,
  Pro, Prop1, Prop2, Prop3, Prop4, Prop5, Prop6, Prop7, Prop8, Prop9,
  Prop10, Prop11,
  Free, Pred1, SeqPair, Alt, Pred2,
  Nat, Nat1, Nat2, Nat3, Nat4, Nat5, Nat6, Nat7, Nat8,
  SubCode, MI, Axiom, Proof, Pr, Re, SEQ, Pow2Rel, Gpred, Hpred,
};

struct PredicateInfo {
  Pred id;
  const char* name;
  int arity;
  int item;      // defining item number, 0 for the named sub-cases
  bool searched; // outer existential; use eval_searched
};

const std::vector<PredicateInfo>& registry();
std::optional<Pred> pred_by_name(const std::string& name);
const PredicateInfo& pred_info(Pred id);

struct SearchBudget {
  unsigned long element_bound = 4096; // cap for enumerated witnesses
  unsigned long fuel = 1u << 20;      // step cap for validations
};

enum class Tri { False, True, Unknown };

// Decision for the predicates whose defining search is bounded. Throws
// on arity mismatch and when called with a searched predicate.
bool eval_bounded(Pred id, const std::vector<GodelNumber>& args);

// Term, Form, Alt, Pow2Rel: decision plus witness construction and
// validation. Pr, Re: bounded enumeration, never returns False.
Tri eval_searched(Pred id, const std::vector<GodelNumber>& args,
                  const SearchBudget& budget, GodelNumber* witness = nullptr);

// Code of all x ((x=y) -> (a)): the formal substitution of E_y into E_x.
GodelNumber sub_code(const GodelNumber& a, const GodelNumber& x,
                     const GodelNumber& y);

// Codes of E_x != E_y and E_x <= E_y in their fixed spellings.
GodelNumber neq_code(const GodelNumber& x, const GodelNumber& y);
GodelNumber leq_code(const GodelNumber& x, const GodelNumber& y);

// Def 7.6 semantics: decode(a) is a formula with exactly one free
// variable, decode(b) a structurally valid proof sequence, and the
// diagonal substitution instance of E_a is an element of E_b (Gpred), or
// its negation is (Hpred). require_last checks the end of the proof
// instead of mere membership.
bool eval_G(const GodelNumber& a, const GodelNumber& b, bool require_last = false);
bool eval_H(const GodelNumber& a, const GodelNumber& b, bool require_last = false);

// Literal item matrices for the same predicates (arithmetized Proof and
// free-variable tests instead of the structural ones).
bool eval_G_matrix(const GodelNumber& a, const GodelNumber& b);
bool eval_H_matrix(const GodelNumber& a, const GodelNumber& b);

// Elements of the sequence E_x in order (the comma-separated segments).
std::vector<GodelNumber> sequence_elements(const GodelNumber& x);

// Witness construction helpers.
std::optional<GodelNumber> term_witness(const GodelNumber& x);
std::optional<GodelNumber> form_witness(const GodelNumber& x);
GodelNumber pow2_witness(unsigned long x);

// Honest validation of a construction sequence against the term/formula
// matrix clauses.
bool validate_term_sequence(const GodelNumber& x, const GodelNumber& y,
                            const SearchBudget& budget = {});
bool validate_form_sequence(const GodelNumber& x, const GodelNumber& y,
                            const SearchBudget& budget = {});

// Honest pattern-closure validation of a power-relation witness: the
// target pair is present and every marker-delimited pair in w descends
// to (0,1).
bool validate_pow2_sequence(const GodelNumber& x, const GodelNumber& y,
                            const GodelNumber& w);

// Literal pattern-closure reading of the power relation; false for all
// x >= 18 because the sequence values collide with the markers.
bool pow2_matrix_literal(const GodelNumber& x, const GodelNumber& y);

} // namespace godel::arith
