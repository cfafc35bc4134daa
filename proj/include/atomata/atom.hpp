#pragma once

#include <string>
#include <variant>

#include "atomata/rational.hpp"

namespace atomata {

enum class TheoryKind { Equality, DenseOrder };

// A concrete point of the atom universe: an abstract name under the
// equality theory, an exact rational under the dense-order theory.
class Atom {
 public:
  Atom() : v_(std::string()) {}

  static Atom name(std::string n) { return Atom(std::move(n)); }
  static Atom rational(Rational r) { return Atom(r); }

  bool is_name() const { return std::holds_alternative<std::string>(v_); }
  const std::string& as_name() const { return std::get<std::string>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }

  TheoryKind kind() const { return is_name() ? TheoryKind::Equality : TheoryKind::DenseOrder; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    if (a.is_name()) return a.as_name() < b.as_name();
    return a.as_rational() < b.as_rational();
  }

  // Printed form, including the leading '@'.
  std::string str() const {
    return "@" + (is_name() ? as_name() : as_rational().str());
  }

 private:
  explicit Atom(std::string n) : v_(std::move(n)) {}
  explicit Atom(Rational r) : v_(r) {}
  std::variant<std::string, Rational> v_;
};

}  // namespace atomata
