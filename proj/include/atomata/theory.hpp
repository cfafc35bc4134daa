#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atomata/formula.hpp"

namespace atomata {

// One of the two built-in atom theories plus its declared constants.
// Equality constants are pairwise-distinct abstract names; dense-order
// constants are exact rationals carrying their numeric order.
struct TheoryConfig {
  TheoryKind kind = TheoryKind::Equality;
  std::vector<Atom> constants;  // sorted, unique

  static TheoryConfig equality(std::vector<std::string> names = {});
  static TheoryConfig dense_order(std::vector<Rational> values = {});

  void declare(const Atom& a);
  bool is_declared(const Atom& a) const;
  // Same theory, possibly more constants; constants of both are merged.
  TheoryConfig with_constants(const std::vector<Atom>& extra) const;
  // An atom distinct from every declared constant and every atom in `avoid`.
  Atom fresh_atom(const std::vector<Atom>& avoid) const;

  std::string fingerprint() const;  // cache key component
  friend bool operator==(const TheoryConfig& a, const TheoryConfig& b) {
    return a.kind == b.kind && a.constants == b.constants;
  }
};

// Requires both objects to live over the same theory kind; returns the
// config with the union of the declared constants.
TheoryConfig merge_theories(const TheoryConfig& a, const TheoryConfig& b);

enum class DecideMode { Sat, Valid };

// Aggregate counters for one engine run; reported in CLI stats.
struct SolverStats {
  std::atomic<std::uint64_t> qe_calls{0};
  std::atomic<std::uint64_t> decide_calls{0};
  std::atomic<std::uint64_t> cache_hits{0};
};
SolverStats& solver_stats();
void reset_solver_stats();

// -- Formula text ------------------------------------------------------------

// Parses the s-expression grammar; the result is alpha-renamed so no
// variable is bound twice on a path. Rejects `<` under the equality
// theory and undeclared named constants.
Formula parse_formula(const std::string& text, const TheoryConfig& cfg);

// Checks an already-built formula against the theory (signature and
// constant declarations); throws TheoryError on violation.
void check_formula(const Formula& f, const TheoryConfig& cfg);

// -- Semantics ----------------------------------------------------------------

// Truth value of a quantifier-free formula under a concrete assignment.
bool evaluate_qf(const Formula& f, const std::map<std::string, Atom>& env);

// Truth in the canonical countable model: quantifiers are eliminated
// first, then the quantifier-free residue is evaluated.
bool evaluate(const Formula& f, const std::map<std::string, Atom>& env, const TheoryConfig& cfg);

// Equivalent quantifier-free formula over the same (or fewer) free
// variables. Total on Pred-free formulas.
Formula eliminate_quantifiers(const Formula& f, const TheoryConfig& cfg);

// Sat: some assignment satisfies f. Valid: all do. Memoized on the
// canonical form; the cache is a transparent, thread-safe memo.
bool decide(DecideMode mode, const Formula& f, const TheoryConfig& cfg);
bool equivalent(const Formula& a, const Formula& b, const TheoryConfig& cfg);

// Pairwise-inconsistent, jointly-exhaustive, satisfiable quantifier-free
// complete formulas over x1..xk, one per orbit of the k-tuple space.
// With `with_constants`, orbits are taken over the theory extended with
// the declared constants; otherwise enumeration is equivariant.
std::vector<Formula> enumerate_complete_types(int k, const TheoryConfig& cfg,
                                              bool with_constants = false);

// Canonical coordinate names x1..xk used by definable-set constraints.
std::string coord_name(int i);                  // 1-based
std::vector<std::string> coord_names(int k);    // x1..xk
std::vector<std::string> coord_names(int from, int count);  // x{from}..x{from+count-1}

}  // namespace atomata
