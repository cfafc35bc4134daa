#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "atomata/atom.hpp"
#include "atomata/errors.hpp"

namespace atomata {

// A term is a variable or an atom constant.
class Term {
 public:
  static Term var(std::string name) { return Term(std::move(name)); }
  static Term constant(Atom a) { return Term(std::move(a)); }

  bool is_var() const { return is_var_; }
  const std::string& var_name() const { return name_; }
  const Atom& atom() const { return atom_; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.is_var_ != b.is_var_) return false;
    return a.is_var_ ? a.name_ == b.name_ : a.atom_ == b.atom_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b) {
    if (a.is_var_ != b.is_var_) return a.is_var_;  // constants sort after variables
    return a.is_var_ ? a.name_ < b.name_ : a.atom_ < b.atom_;
  }

  std::string str() const { return is_var_ ? name_ : atom_.str(); }

 private:
  explicit Term(std::string n) : is_var_(true), name_(std::move(n)) {}
  explicit Term(Atom a) : is_var_(false), atom_(std::move(a)) {}
  bool is_var_;
  std::string name_;
  Atom atom_;
};

enum class Conn { True, False, Cmp, And, Or, Not, Implies, Exists, Forall, Pred };
enum class CmpOp { Eq, Neq, Lt };

class Formula;

struct FormulaNode {
  Conn conn;
  CmpOp op = CmpOp::Eq;                // Cmp
  std::vector<Term> terms;             // Cmp: {lhs, rhs}; Pred: arguments
  std::vector<Formula> kids;           // And/Or: n-ary; Not/Exists/Forall: 1; Implies: 2
  std::string name;                    // Exists/Forall: bound variable; Pred: relation variable
};

// Immutable first-order formula over one atom sort. Shared-structure value
// type: copies are cheap, nodes are never mutated after construction.
// Pred nodes are relation-variable applications used only by fixpoint
// templates; they must be substituted away before evaluation or QE.
class Formula {
 public:
  Formula() : p_(truth_node()) {}

  static Formula truth();
  static Formula falsity();
  static Formula boolean(bool b) { return b ? truth() : falsity(); }
  static Formula cmp(CmpOp op, Term lhs, Term rhs);
  static Formula eq(Term a, Term b) { return cmp(CmpOp::Eq, std::move(a), std::move(b)); }
  static Formula neq(Term a, Term b) { return cmp(CmpOp::Neq, std::move(a), std::move(b)); }
  static Formula lt(Term a, Term b) { return cmp(CmpOp::Lt, std::move(a), std::move(b)); }
  static Formula conj(std::vector<Formula> kids);
  static Formula disj(std::vector<Formula> kids);
  static Formula conj2(Formula a, Formula b) { return conj({std::move(a), std::move(b)}); }
  static Formula disj2(Formula a, Formula b) { return disj({std::move(a), std::move(b)}); }
  static Formula neg(Formula f);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula exists_all(const std::vector<std::string>& vars, Formula body);
  static Formula forall_all(const std::vector<std::string>& vars, Formula body);
  static Formula pred(std::string name, std::vector<Term> args);

  const FormulaNode& node() const { return *p_; }
  Conn conn() const { return p_->conn; }
  bool is_true() const { return p_->conn == Conn::True; }
  bool is_false() const { return p_->conn == Conn::False; }
  bool is_literal() const { return p_->conn == Conn::Cmp; }

  std::string str() const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> p) : p_(std::move(p)) {}
  static Formula make(FormulaNode n);
  static const std::shared_ptr<const FormulaNode>& truth_node();
  std::shared_ptr<const FormulaNode> p_;
};

// -- Structural queries --------------------------------------------------

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> all_var_names(const Formula& f);  // free and bound
std::set<std::string> pred_names(const Formula& f);
bool mentions_var(const Formula& f, const std::string& v);
int quantifier_depth(const Formula& f);
std::vector<Atom> constants_of(const Formula& f);

// True iff every occurrence of relation variable `name` is under an even
// number of negations (counting the left side of => as one negation).
bool occurs_positively(const Formula& f, const std::string& name);

// -- Transformations ------------------------------------------------------

// Capture-avoiding substitution of terms for free variables.
Formula substitute(const Formula& f, const std::map<std::string, Term>& sub);

// Replaces every application of relation variable `name` with `body`
// instantiated at the application's arguments; `params` are the body's
// canonical coordinates (the i-th argument replaces params[i]).
Formula substitute_pred(const Formula& f, const std::string& name,
                        const std::vector<std::string>& params, const Formula& body);

// Renames bound variables so no name is bound twice along a path and no
// binder shadows a free variable. Idempotent on already-clean formulas.
Formula alpha_rename(const Formula& f);

// Bottom-up logical simplification with canonical child order: flattens
// and sorts And/Or, folds constant literals, drops vacuous quantifiers.
// Deterministic and idempotent; canonical keys for caching come from
// str() of the simplified formula.
Formula simplify(const Formula& f);

// Fresh identifier starting from `base` that avoids every name in `used`;
// inserts the result into `used`.
std::string fresh_name(const std::string& base, std::set<std::string>& used);

}  // namespace atomata
