#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "gvd/homalg.hpp"
#include "gvd/ideal.hpp"
#include "gvd/outcome.hpp"

namespace gvd {

enum class Degeneracy { Degenerate, Nondegenerate };

/// Result of testing one geometric vertex decomposition step at a pivot
/// variable y: the verdict of the defining ideal equality, the ideals C and N
/// extracted from the reduced y-first Groebner basis, and the split data
/// (q_i, d_i) with g_i = q_i * y^{d_i} + r_i.
struct OneStepResult {
  bool is_gvd = false;
  Ideal c;
  Ideal n;
  Degeneracy degeneracy = Degeneracy::Nondegenerate;
  std::vector<std::pair<Polynomial, std::int32_t>> split;

  bool is_degenerate() const { return degeneracy == Degeneracy::Degenerate; }
};

OneStepResult one_step_gvd(const Ideal& ideal, int pivot);
OneStepResult one_step_gvd(const Ideal& ideal, const std::string& pivot);

Ideal c_ideal(const Ideal& ideal, const std::string& pivot);
Ideal n_ideal(const Ideal& ideal, const std::string& pivot);

/// All variables giving a one-step geometric vertex decomposition, in
/// declaration order.
std::vector<std::string> find_one_step_gvd(const Ideal& ideal);

enum class PivotStrategy { DeclarationOrder, FewestOccurrences };

struct GVDConfig {
  bool assume_unmixed = false;
  bool assume_radical = false;
  bool assume_cm = false;
  bool accept_inhomogeneous_cm = false;
  PivotStrategy strategy = PivotStrategy::DeclarationOrder;
};

/// Recursive decomposability checks with a shared memo table; safe for
/// concurrent use, and memoization never changes a verdict.
class Decomposer {
 public:
  Decomposer() = default;
  explicit Decomposer(GVDConfig config) : config_(config) {}

  const GVDConfig& config() const { return config_; }

  CheckOutcome is_gvd(const Ideal& ideal);
  /// Pivot forced to the largest remaining variable of `order` (a permutation
  /// of the ring's variable indices, greatest first).
  CheckOutcome is_lex_compatibly_gvd(const Ideal& ideal, const std::vector<int>& order);
  /// All variable orders (as name lists, greatest first) under which the
  /// ideal is lex-compatibly decomposable. Bounded at `max_variables`
  /// variables unless `allow_large`.
  std::vector<std::vector<std::string>> find_lex_orders(const Ideal& ideal,
                                                        int max_variables = 8,
                                                        bool allow_large = false);
  CheckOutcome is_weakly_gvd(const Ideal& ideal);

 private:
  GVDConfig config_;
  std::mutex lock_;
  std::map<std::string, CheckOutcome> memo_;

  CheckOutcome unmixedness(const Ideal& ideal);
  CheckOutcome gvd_recursive(const Ideal& ideal);
  CheckOutcome lex_recursive(const Ideal& ideal, const std::vector<std::string>& remaining);
  CheckOutcome weak_recursive(const Ideal& ideal);
  std::vector<int> pivot_candidates(const Ideal& ideal) const;

  bool memo_get(const std::string& key, CheckOutcome& out);
  void memo_put(const std::string& key, const CheckOutcome& out);
  std::string memo_key(char kind, const Ideal& ideal, const std::string& extra = "") const;
};

}  // namespace gvd
