#pragma once

#include <span>
#include <vector>

#include "gvd/polynomial.hpp"

namespace gvd {

/// Groebner basis of an ideal for a fixed lex order. When `reduced` is set
/// the elements are monic, mutually tail-reduced, sorted ascending by leading
/// monomial, and hence canonical for the ideal and order.
struct GroebnerBasis {
  LexOrder order;
  std::vector<Polynomial> elements;
  bool reduced = false;

  bool is_trivial_unit() const;  // basis == {1}
};

/// (lcm/lt(f))*f - (lcm/lt(g))*g for the leading terms under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& order);

/// Remainder of multivariate division of f by the basis elements: no term of
/// the result is divisible by any leading monomial, and f - result lies in
/// the ideal generated by the divisors.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const LexOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const LexOrder& order);

/// Exact division f / g; throws if the remainder is nonzero.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm (normal pair-selection strategy, coprime-lead and
/// chain criteria), followed by autoreduction to the unique reduced basis.
GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> generators,
                         const LexOrder& order);

}  // namespace gvd
