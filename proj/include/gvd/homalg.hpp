#pragma once

#include <vector>

#include "gvd/ideal.hpp"
#include "gvd/outcome.hpp"

namespace gvd {

/// Map of free modules R^source -> R^target, stored as a target x source
/// matrix of polynomials (column j is the image of the j-th source basis
/// vector).
struct FreeModuleMap {
  Ring ring;
  int target_rank = 0;
  int source_rank = 0;
  std::vector<std::vector<Polynomial>> entries;  // entries[t][s]

  static FreeModuleMap zero(const Ring& ring, int target, int source);
  static FreeModuleMap from_columns(const Ring& ring, int target,
                                    const std::vector<std::vector<Polynomial>>& columns);

  const Polynomial& at(int t, int s) const {
    return entries[static_cast<size_t>(t)][static_cast<size_t>(s)];
  }
  std::vector<Polynomial> column(int s) const;
  FreeModuleMap transposed() const;
  bool is_zero_map() const;
};

/// a after b (matrix product a*b); requires a.source_rank == b.target_rank.
FreeModuleMap compose(const FreeModuleMap& a, const FreeModuleMap& b);

/// A map whose image is exactly the kernel of m.
FreeModuleMap syzygies(const FreeModuleMap& m);

/// Free resolution of R/I: the returned maps are
/// R^{b_k} -> ... -> R^{b_1} -> R, built by iterated syzygies with unit-entry
/// pruning, stopping at the first zero kernel or after max_length maps.
std::vector<FreeModuleMap> free_resolution(const Ideal& i, int max_length);

/// Ext^i(R/I, R) = 0, read off the dualized resolution.
bool ext_is_zero(const Ideal& i, int index);

/// Largest i with Ext^i(R/I, R) != 0; 0 for the zero ideal.
int projective_dimension(const Ideal& i);

struct HomalgOptions {
  /// Accept the pd == codim criterion as a definite verdict on
  /// inhomogeneous input instead of reporting Unknown.
  bool accept_inhomogeneous_cm = false;
};

/// Cohen-Macaulay test via pd == codim (exact for homogeneous ideals).
CheckOutcome is_cm(const Ideal& i, const HomalgOptions& options = {});

/// Equidimensional hull: annihilator of Ext^c(R/I, R) with c = codim I.
Ideal unmixed_part(const Ideal& i);

/// All associated primes share one height; fast paths for monomial,
/// principal and complete-intersection input, Ext-based hull otherwise.
CheckOutcome is_unmixed(const Ideal& i);

/// Tiered radicality: certified True via a squarefree initial ideal,
/// certified False via an explicit witness f in sqrt(I) \ I, else Unknown.
CheckOutcome is_radical_tiered(const Ideal& i);

}  // namespace gvd
