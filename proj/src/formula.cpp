#include "atomata/formula.hpp"

#include <algorithm>
#include <functional>

namespace atomata {

const std::shared_ptr<const FormulaNode>& Formula::truth_node() {
  static const auto node = std::make_shared<const FormulaNode>(FormulaNode{Conn::True});
  return node;
}

Formula Formula::make(FormulaNode n) {
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::truth() { return Formula(truth_node()); }

Formula Formula::falsity() {
  static const auto node = std::make_shared<const FormulaNode>(FormulaNode{Conn::False});
  return Formula(node);
}

Formula Formula::cmp(CmpOp op, Term lhs, Term rhs) {
  FormulaNode n{Conn::Cmp};
  n.op = op;
  n.terms = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::conj(std::vector<Formula> kids) {
  if (kids.empty()) return truth();
  if (kids.size() == 1) return kids[0];
  FormulaNode n{Conn::And};
  n.kids = std::move(kids);
  return make(std::move(n));
}

Formula Formula::disj(std::vector<Formula> kids) {
  if (kids.empty()) return falsity();
  if (kids.size() == 1) return kids[0];
  FormulaNode n{Conn::Or};
  n.kids = std::move(kids);
  return make(std::move(n));
}

Formula Formula::neg(Formula f) {
  FormulaNode n{Conn::Not};
  n.kids = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  FormulaNode n{Conn::Implies};
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::iff(Formula a, Formula b) {
  return conj2(implies(a, b), implies(b, a));
}

Formula Formula::exists(std::string var, Formula body) {
  FormulaNode n{Conn::Exists};
  n.name = std::move(var);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  FormulaNode n{Conn::Forall};
  n.name = std::move(var);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::exists_all(const std::vector<std::string>& vars, Formula body) {
  Formula f = std::move(body);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = exists(*it, std::move(f));
  return f;
}

Formula Formula::forall_all(const std::vector<std::string>& vars, Formula body) {
  Formula f = std::move(body);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = forall(*it, std::move(f));
  return f;
}

Formula Formula::pred(std::string name, std::vector<Term> args) {
  FormulaNode n{Conn::Pred};
  n.name = std::move(name);
  n.terms = std::move(args);
  return make(std::move(n));
}

std::string Formula::str() const {
  const FormulaNode& n = *p_;
  switch (n.conn) {
    case Conn::True:
      return "true";
    case Conn::False:
      return "false";
    case Conn::Cmp: {
      const char* op = n.op == CmpOp::Eq ? "=" : n.op == CmpOp::Neq ? "!=" : "<";
      return std::string("(") + op + " " + n.terms[0].str() + " " + n.terms[1].str() + ")";
    }
    case Conn::And:
    case Conn::Or: {
      std::string out = n.conn == Conn::And ? "(and" : "(or";
      for (const Formula& k : n.kids) out += " " + k.str();
      return out + ")";
    }
    case Conn::Not:
      return "(not " + n.kids[0].str() + ")";
    case Conn::Implies:
      return "(=> " + n.kids[0].str() + " " + n.kids[1].str() + ")";
    case Conn::Exists:
      return "(exists (" + n.name + ") " + n.kids[0].str() + ")";
    case Conn::Forall:
      return "(forall (" + n.name + ") " + n.kids[0].str() + ")";
    case Conn::Pred: {
      std::string out = "(" + n.name;
      for (const Term& t : n.terms) out += " " + t.str();
      return out + ")";
    }
  }
  return "?";
}

// -- Structural queries ----------------------------------------------------

namespace {

void walk(const Formula& f, const std::function<void(const FormulaNode&)>& fn) {
  fn(f.node());
  for (const Formula& k : f.node().kids) walk(k, fn);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::Cmp:
    case Conn::Pred:
      for (const Term& t : n.terms)
        if (t.is_var() && !bound.count(t.var_name())) out.insert(t.var_name());
      return;
    case Conn::Exists:
    case Conn::Forall: {
      bool fresh = bound.insert(n.name).second;
      collect_free(n.kids[0], bound, out);
      if (fresh) bound.erase(n.name);
      return;
    }
    default:
      for (const Formula& k : n.kids) collect_free(k, bound, out);
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_var_names(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const FormulaNode& n) {
    if (n.conn == Conn::Exists || n.conn == Conn::Forall) out.insert(n.name);
    for (const Term& t : n.terms)
      if (t.is_var()) out.insert(t.var_name());
  });
  return out;
}

std::set<std::string> pred_names(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const FormulaNode& n) {
    if (n.conn == Conn::Pred) out.insert(n.name);
  });
  return out;
}

bool mentions_var(const Formula& f, const std::string& v) {
  return free_vars(f).count(v) > 0;
}

int quantifier_depth(const Formula& f) {
  const FormulaNode& n = f.node();
  int d = 0;
  for (const Formula& k : n.kids) d = std::max(d, quantifier_depth(k));
  if (n.conn == Conn::Exists || n.conn == Conn::Forall) d += 1;
  return d;
}

std::vector<Atom> constants_of(const Formula& f) {
  std::set<Atom> seen;
  walk(f, [&](const FormulaNode& n) {
    for (const Term& t : n.terms)
      if (!t.is_var()) seen.insert(t.atom());
  });
  return {seen.begin(), seen.end()};
}

namespace {

bool positive_rec(const Formula& f, const std::string& name, bool positive) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::Pred:
      return n.name != name || positive;
    case Conn::Not:
      return positive_rec(n.kids[0], name, !positive);
    case Conn::Implies:
      return positive_rec(n.kids[0], name, !positive) && positive_rec(n.kids[1], name, positive);
    default:
      for (const Formula& k : n.kids)
        if (!positive_rec(k, name, positive)) return false;
      return true;
  }
}

}  // namespace

bool occurs_positively(const Formula& f, const std::string& name) {
  return positive_rec(f, name, true);
}

// -- Substitution and renaming ----------------------------------------------

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
  if (!used.count(base)) {
    used.insert(base);
    return base;
  }
  for (int i = 2;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (used.insert(cand).second) return cand;
  }
}

namespace {

Term subst_term(const Term& t, const std::map<std::string, Term>& sub) {
  if (!t.is_var()) return t;
  auto it = sub.find(t.var_name());
  return it == sub.end() ? t : it->second;
}

Formula subst_rec(const Formula& f, std::map<std::string, Term> sub, std::set<std::string>& used) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::True:
    case Conn::False:
      return f;
    case Conn::Cmp:
      return Formula::cmp(n.op, subst_term(n.terms[0], sub), subst_term(n.terms[1], sub));
    case Conn::Pred: {
      std::vector<Term> args;
      args.reserve(n.terms.size());
      for (const Term& t : n.terms) args.push_back(subst_term(t, sub));
      return Formula::pred(n.name, std::move(args));
    }
    case Conn::And:
    case Conn::Or: {
      std::vector<Formula> kids;
      kids.reserve(n.kids.size());
      for (const Formula& k : n.kids) kids.push_back(subst_rec(k, sub, used));
      return n.conn == Conn::And ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Conn::Not:
      return Formula::neg(subst_rec(n.kids[0], sub, used));
    case Conn::Implies:
      return Formula::implies(subst_rec(n.kids[0], sub, used), subst_rec(n.kids[1], sub, used));
    case Conn::Exists:
    case Conn::Forall: {
      sub.erase(n.name);
      // Rename the binder if any substituted term captures it.
      bool captures = false;
      for (const auto& [from, to] : sub)
        if (to.is_var() && to.var_name() == n.name && mentions_var(n.kids[0], from)) captures = true;
      std::string var = n.name;
      Formula body = n.kids[0];
      if (captures) {
        var = fresh_name(n.name, used);
        std::map<std::string, Term> ren{{n.name, Term::var(var)}};
        body = subst_rec(body, ren, used);
      }
      body = subst_rec(body, sub, used);
      return n.conn == Conn::Exists ? Formula::exists(var, std::move(body))
                                    : Formula::forall(var, std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Term>& sub) {
  if (sub.empty()) return f;
  std::set<std::string> used = all_var_names(f);
  for (const auto& [from, to] : sub) {
    used.insert(from);
    if (to.is_var()) used.insert(to.var_name());
  }
  return subst_rec(f, sub, used);
}

Formula substitute_pred(const Formula& f, const std::string& name,
                        const std::vector<std::string>& params, const Formula& body) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::Pred: {
      if (n.name != name) return f;
      if (n.terms.size() != params.size())
        throw TheoryError("relation variable " + name + " applied with arity " +
                          std::to_string(n.terms.size()) + ", declared " +
                          std::to_string(params.size()));
      std::map<std::string, Term> sub;
      for (size_t i = 0; i < params.size(); ++i) sub[params[i]] = n.terms[i];
      return substitute(body, sub);
    }
    case Conn::And:
    case Conn::Or: {
      std::vector<Formula> kids;
      kids.reserve(n.kids.size());
      for (const Formula& k : n.kids) kids.push_back(substitute_pred(k, name, params, body));
      return n.conn == Conn::And ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Conn::Not:
      return Formula::neg(substitute_pred(n.kids[0], name, params, body));
    case Conn::Implies:
      return Formula::implies(substitute_pred(n.kids[0], name, params, body),
                              substitute_pred(n.kids[1], name, params, body));
    case Conn::Exists:
      return Formula::exists(n.name, substitute_pred(n.kids[0], name, params, body));
    case Conn::Forall:
      return Formula::forall(n.name, substitute_pred(n.kids[0], name, params, body));
    default:
      return f;
  }
}

namespace {

Formula alpha_rec(const Formula& f, std::map<std::string, Term> ren,
                  std::set<std::string>& bound_on_path, std::set<std::string>& used) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::Exists:
    case Conn::Forall: {
      std::string var = n.name;
      if (bound_on_path.count(var) || used.count(var)) {
        var = fresh_name(n.name, used);
        ren[n.name] = Term::var(var);
      } else {
        used.insert(var);
        ren.erase(n.name);
      }
      bound_on_path.insert(var);
      Formula body = alpha_rec(n.kids[0], ren, bound_on_path, used);
      bound_on_path.erase(var);
      return n.conn == Conn::Exists ? Formula::exists(var, std::move(body))
                                    : Formula::forall(var, std::move(body));
    }
    case Conn::Cmp:
      return Formula::cmp(n.op, subst_term(n.terms[0], ren), subst_term(n.terms[1], ren));
    case Conn::Pred: {
      std::vector<Term> args;
      for (const Term& t : n.terms) args.push_back(subst_term(t, ren));
      return Formula::pred(n.name, std::move(args));
    }
    case Conn::And:
    case Conn::Or: {
      std::vector<Formula> kids;
      for (const Formula& k : n.kids) kids.push_back(alpha_rec(k, ren, bound_on_path, used));
      return n.conn == Conn::And ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Conn::Not:
      return Formula::neg(alpha_rec(n.kids[0], ren, bound_on_path, used));
    case Conn::Implies:
      return Formula::implies(alpha_rec(n.kids[0], ren, bound_on_path, used),
                              alpha_rec(n.kids[1], ren, bound_on_path, used));
    default:
      return f;
  }
}

}  // namespace

Formula alpha_rename(const Formula& f) {
  std::set<std::string> used = free_vars(f);
  std::set<std::string> bound;
  return alpha_rec(f, {}, bound, used);
}

// -- Simplification ----------------------------------------------------------

namespace {

// Constant-folds a comparison when both sides are decided: identical terms,
// or two constants (names distinct by fiat; rationals by value).
Formula fold_literal(CmpOp op, const Term& a, const Term& b) {
  if (a == b) {
    switch (op) {
      case CmpOp::Eq:
        return Formula::truth();
      case CmpOp::Neq:
      case CmpOp::Lt:
        return Formula::falsity();
    }
  }
  if (!a.is_var() && !b.is_var()) {
    const Atom& x = a.atom();
    const Atom& y = b.atom();
    switch (op) {
      case CmpOp::Eq:
        return Formula::boolean(x == y);
      case CmpOp::Neq:
        return Formula::boolean(x != y);
      case CmpOp::Lt:
        if (!x.is_name() && !y.is_name())
          return Formula::boolean(x.as_rational() < y.as_rational());
        break;  // named atoms are unordered; leave as-is (rejected upstream)
    }
  }
  // Canonical argument order for the symmetric comparisons.
  if (op != CmpOp::Lt && b < a) return Formula::cmp(op, b, a);
  return Formula::cmp(op, a, b);
}

CmpOp complement_of(CmpOp op) { return op == CmpOp::Eq ? CmpOp::Neq : CmpOp::Eq; }

Formula simp(const Formula& f);

Formula simp_junction(const FormulaNode& n) {
  const bool is_and = n.conn == Conn::And;
  const Formula absorb = is_and ? Formula::falsity() : Formula::truth();
  const Formula unit = is_and ? Formula::truth() : Formula::falsity();

  std::vector<Formula> flat;
  for (const Formula& raw : n.kids) {
    Formula k = simp(raw);
    if (k.node().conn == n.conn) {
      for (const Formula& g : k.node().kids) flat.push_back(g);
    } else {
      flat.push_back(std::move(k));
    }
  }

  std::vector<Formula> kept;
  std::set<std::string> seen;
  std::set<std::string> literal_keys;
  for (Formula& k : flat) {
    if (k.str() == absorb.str()) return absorb;
    if (k.str() == unit.str()) continue;
    if (!seen.insert(k.str()).second) continue;
    if (k.is_literal()) literal_keys.insert(k.str());
    kept.push_back(std::move(k));
  }

  // Complementary literal pairs decide the whole junction.
  for (const Formula& k : kept) {
    if (!k.is_literal()) continue;
    const FormulaNode& ln = k.node();
    if (ln.op == CmpOp::Lt) {
      // x<y together with y<x is inconsistent; their disjunction is not total,
      // so only the And case folds.
      if (is_and && literal_keys.count(Formula::lt(ln.terms[1], ln.terms[0]).str()))
        return absorb;
      if (is_and && literal_keys.count(fold_literal(CmpOp::Eq, ln.terms[0], ln.terms[1]).str()))
        return absorb;
      continue;
    }
    Formula comp = fold_literal(complement_of(ln.op), ln.terms[0], ln.terms[1]);
    if (literal_keys.count(comp.str())) return absorb;
  }

  std::sort(kept.begin(), kept.end(),
            [](const Formula& a, const Formula& b) { return a.str() < b.str(); });
  return is_and ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
}

Formula simp(const Formula& f) {
  const FormulaNode& n = f.node();
  switch (n.conn) {
    case Conn::True:
    case Conn::False:
    case Conn::Pred:
      return f;
    case Conn::Cmp:
      return fold_literal(n.op, n.terms[0], n.terms[1]);
    case Conn::And:
    case Conn::Or:
      return simp_junction(n);
    case Conn::Not: {
      Formula k = simp(n.kids[0]);
      if (k.is_true()) return Formula::falsity();
      if (k.is_false()) return Formula::truth();
      if (k.node().conn == Conn::Not) return k.node().kids[0];
      if (k.is_literal() && k.node().op != CmpOp::Lt)
        return fold_literal(complement_of(k.node().op), k.node().terms[0], k.node().terms[1]);
      return Formula::neg(std::move(k));
    }
    case Conn::Implies: {
      Formula a = simp(n.kids[0]);
      Formula b = simp(n.kids[1]);
      if (a.is_false() || b.is_true()) return Formula::truth();
      if (a.is_true()) return b;
      if (b.is_false()) return simp(Formula::neg(std::move(a)));
      return Formula::implies(std::move(a), std::move(b));
    }
    case Conn::Exists:
    case Conn::Forall: {
      Formula body = simp(n.kids[0]);
      if (body.is_true() || body.is_false() || !mentions_var(body, n.name)) return body;
      return n.conn == Conn::Exists ? Formula::exists(n.name, std::move(body))
                                    : Formula::forall(n.name, std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula simplify(const Formula& f) { return simp(f); }

}  // namespace atomata
