#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gvd/rational.hpp"
#include "gvd/ring.hpp"

namespace gvd {

/// Exponent vector; its length always equals the ambient ring's variable
/// count. The all-zeros vector is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

  static Monomial variable(int nvars, int i, std::int32_t power = 1);

  int size() const { return static_cast<int>(e_.size()); }
  std::int32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<std::int32_t>& exponents() const { return e_; }

  bool is_one() const;
  std::int64_t degree() const;
  bool is_squarefree() const;
  bool divides(const Monomial& m) const;
  bool contains_variable(int i) const { return e_[static_cast<size_t>(i)] > 0; }

  Monomial times(const Monomial& m) const;        // overflow-checked
  Monomial divided_by(const Monomial& m) const;   // requires m | *this
  Monomial lcm_with(const Monomial& m) const;
  Monomial gcd_with(const Monomial& m) const;
  Monomial with_exponent(int i, std::int32_t v) const;
  Monomial squarefree_part() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<std::int32_t> e_;
};

/// Lexicographic monomial order given by a priority permutation of the ring's
/// variables: priority()[0] is the greatest variable. Total, multiplicative,
/// with 1 smallest.
class LexOrder {
 public:
  LexOrder() = default;
  explicit LexOrder(std::vector<int> priority);

  static LexOrder default_order(int nvars);
  /// Lex order with variable y greatest, the rest in declaration order.
  static LexOrder with_variable_first(int nvars, int y);
  /// Elimination order: `first` block (in given order) above the rest.
  static LexOrder with_block_first(int nvars, std::span<const int> first);

  int size() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  bool is_default() const;

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const LexOrder& a, const LexOrder& b) { return a.priority_ == b.priority_; }
  friend bool operator<(const LexOrder& a, const LexOrder& b) { return a.priority_ < b.priority_; }

 private:
  std::vector<int> priority_;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted descending
/// under the ring's default lex order, with no zero coefficients and no
/// duplicate monomials; values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; combines duplicates, drops zeros, sorts.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
  static Polynomial constant(const Ring& ring, Rational c);
  static Polynomial variable(const Ring& ring, int i, std::int32_t power = 1);
  static Polynomial from_monomial(const Ring& ring, Monomial m, Rational c = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial_term() const { return terms_.size() == 1; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Order-maximal term; throws on the zero polynomial.
  const Term& leading_term(const LexOrder& order) const;

  std::int64_t total_degree() const;  // -1 for zero
  std::int32_t degree_in(int var) const;
  bool contains_variable(int var) const;
  std::vector<int> support() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Term& t) const;
  Polynomial pow(int k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Integer-coefficient rescaling: divide by content, clear denominators,
  /// make the default-lex leading coefficient positive.
  Polynomial primitive_part() const;
  /// Scale so the leading coefficient under `order` is 1.
  Polynomial monic(const LexOrder& order) const;

  /// Terms of maximal degree in variable y, as alpha_d * y^d.
  Polynomial initial_form(int y) const;
  std::int32_t top_degree_in(int y) const;  // d above; 0 for the zero polynomial

  /// Re-expression in `target`, which must contain every variable in the
  /// support; throws if a dropped variable occurs.
  Polynomial mapped_to(const Ring& target) const;

  /// Ring hom: variable i |-> images[i]. Images live in `target`.
  Polynomial substituted(const Ring& target, const std::vector<Polynomial>& images) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
  void normalize();
};

/// Splits f as q * y^d + r with in_y(f) = q * y^d; q is free of y.
struct InitialSplit {
  Polynomial q;
  std::int32_t d = 0;
  Polynomial r;
};
InitialSplit split_initial_form(const Polynomial& f, int y);

}  // namespace gvd
