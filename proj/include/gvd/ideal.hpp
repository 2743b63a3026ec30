#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gvd/groebner.hpp"
#include "gvd/polynomial.hpp"

namespace gvd {

/// Ideal of a polynomial ring, presented by generators. Immutable; reduced
/// Groebner bases are cached per monomial order behind a lock, so values may
/// be shared freely across threads.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(Ring ring) : Ideal(std::move(ring), {}) {}
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }

  const GroebnerBasis& reduced_basis(const LexOrder& order) const;
  const GroebnerBasis& reduced_basis() const;  // ring's default lex order

  bool is_zero() const { return reduced_basis().elements.empty(); }
  bool is_unit() const { return reduced_basis().is_trivial_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool contains(const Polynomial& f) const;

  /// Canonical string key: ring variables plus the reduced default-lex basis.
  std::string canonical_key() const;

 private:
  struct State {
    Ring ring;
    std::vector<Polynomial> generators;
    mutable std::mutex lock;
    mutable std::map<LexOrder, GroebnerBasis> bases;
  };
  std::shared_ptr<State> state_;
};

/// Reduced default-lex bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Polynomial& f);

/// A and B via an auxiliary variable t: eliminate t from t*A + (1-t)*B.
Ideal intersection(const Ideal& a, const Ideal& b);

/// I : f, computed as (I  ∩ <f>) / f.
Ideal quotient(const Ideal& i, const Polynomial& f);

/// I : f^inf, eliminating t from I + <1 - t*f>.
Ideal saturation(const Ideal& i, const Polynomial& f);

/// f in sqrt(I), decided by 1 in I + <1 - t*f> (Rabinowitsch).
bool radical_membership(const Polynomial& f, const Ideal& i);

/// Generators of each ideal lie in the radical of the other.
bool radical_equality(const Ideal& a, const Ideal& b);

/// Generators of I inside k[remaining variables]; the result lives in the
/// smaller ring obtained by deleting `drop`.
Ideal elimination_ideal(const Ideal& i, const std::vector<int>& drop);

/// Ideal of leading monomials of the reduced basis.
Ideal initial_ideal(const Ideal& i, const LexOrder& order);

/// dim R/I (dimension of R/in(I) under default lex); -1 for the unit ideal.
int dimension(const Ideal& i);
int codimension(const Ideal& i);

/// Reduced default-lex basis consists solely of monomials.
bool is_monomial_ideal(const Ideal& i);
/// Minimal monomial generators (the reduced basis, made primitive).
std::vector<Monomial> minimal_monomial_generators(const Ideal& i);
/// Minimal primes of a monomial ideal, each generated by variables.
std::vector<Ideal> minimal_primes_monomial(const Ideal& i);
bool is_unmixed_monomial(const Ideal& i);
bool is_squarefree_monomial_ideal(const Ideal& i);

/// Reduced default-lex basis consists solely of single variables (true for
/// <0>); false for the unit ideal.
bool is_generated_by_variables(const Ideal& i);

/// Reinterprets generators in a ring without `drop`; generators must be free
/// of it.
Ideal contracted_to_subring(const Ideal& i, int drop);
/// Reinterprets generators in a super-ring containing all variables.
Ideal mapped_to_ring(const Ideal& i, const Ring& target);

}  // namespace gvd
