#include <iostream>
#include "gvd/ideal.hpp"
#include "gvd/parse.hpp"

using namespace gvd;

int main() {
  Ring R = parse_ring("a..f");
  auto gens = parse_polynomial_list(
      "b*(c*f - a^2), b*d*e, d*e*(c^2+a*c+d*e+f^2)", R);
  Ideal I(R, gens);
  auto yfirst = LexOrder::with_variable_first(R.size(), *R.index_of("b"));
  for (const auto& g : I.reduced_basis(yfirst).elements)
    std::cout << "gb: " << g.to_string() << "\n";
  std::cout << "dim = " << dimension(I) << " codim = " << codimension(I) << "\n";
  Ideal A(R, parse_polynomial_list("a", R));
  Ideal B(R, parse_polynomial_list("b", R));
  Ideal AB = intersection(A, B);
  std::cout << "<a> cap <b> = ";
  for (const auto& g : AB.generators()) std::cout << g.to_string() << " ";
  std::cout << "\n";
  Ideal S(R, parse_polynomial_list("a^2*b", R));
  Ideal sat = saturation(S, parse_polynomial("a", R));
  std::cout << "<a^2 b> : a^inf = ";
  for (const auto& g : sat.generators()) std::cout << g.to_string() << " ";
  std::cout << "\n";
  std::cout << "a in sqrt<a^2>: "
            << radical_membership(parse_polynomial("a", R), Ideal(R, parse_polynomial_list("a^2", R)))
            << "\n";
  return 0;
}
