#include "gvd/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace gvd {

namespace {

Ideal initial_y_ideal(const Ideal& ideal, int pivot, const GroebnerBasis& basis) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : basis.elements) {
    InitialSplit s = split_initial_form(g, pivot);
    gens.push_back(s.q * Polynomial::variable(ideal.ring(), pivot, s.d));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace

OneStepResult one_step_gvd(const Ideal& ideal, int pivot) {
  const Ring& ring = ideal.ring();
  if (pivot < 0 || pivot >= ring.size()) throw std::invalid_argument("unknown pivot variable");
  LexOrder order = LexOrder::with_variable_first(ring.size(), pivot);
  const GroebnerBasis& basis = ideal.reduced_basis(order);

  OneStepResult result;
  std::vector<Polynomial> c_gens, n_gens;
  for (const Polynomial& g : basis.elements) {
    InitialSplit s = split_initial_form(g, pivot);
    result.split.emplace_back(s.q, s.d);
    c_gens.push_back(s.q);
    if (s.d == 0) n_gens.push_back(s.q);
  }
  result.c = Ideal(ring, std::move(c_gens));
  result.n = Ideal(ring, std::move(n_gens));

  Ideal in_y = initial_y_ideal(ideal, pivot, basis);
  Ideal n_plus_y = ideal_sum(result.n, Polynomial::variable(ring, pivot));
  result.is_gvd = ideal_equal(in_y, intersection(result.c, n_plus_y));
  result.degeneracy = (result.c.is_unit() || radical_equality(result.c, result.n))
                          ? Degeneracy::Degenerate
                          : Degeneracy::Nondegenerate;
  return result;
}

OneStepResult one_step_gvd(const Ideal& ideal, const std::string& pivot) {
  auto idx = ideal.ring().index_of(pivot);
  if (!idx) throw std::invalid_argument("unknown pivot variable '" + pivot + "'");
  return one_step_gvd(ideal, *idx);
}

Ideal c_ideal(const Ideal& ideal, const std::string& pivot) {
  return one_step_gvd(ideal, pivot).c;
}

Ideal n_ideal(const Ideal& ideal, const std::string& pivot) {
  return one_step_gvd(ideal, pivot).n;
}

std::vector<std::string> find_one_step_gvd(const Ideal& ideal) {
  std::vector<std::string> out;
  for (int v = 0; v < ideal.ring().size(); ++v)
    if (one_step_gvd(ideal, v).is_gvd) out.push_back(ideal.ring().name(v));
  return out;
}

bool Decomposer::memo_get(const std::string& key, CheckOutcome& out) {
  std::lock_guard<std::mutex> guard(lock_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void Decomposer::memo_put(const std::string& key, const CheckOutcome& out) {
  std::lock_guard<std::mutex> guard(lock_);
  memo_.emplace(key, out);
}

std::string Decomposer::memo_key(char kind, const Ideal& ideal, const std::string& extra) const {
  std::string key(1, kind);
  key += config_.assume_unmixed ? 'u' : '-';
  key += config_.assume_radical ? 'r' : '-';
  key += config_.assume_cm ? 'c' : '-';
  key += config_.accept_inhomogeneous_cm ? 'h' : '-';
  key += config_.strategy == PivotStrategy::FewestOccurrences ? 'f' : 'd';
  key += '#';
  key += ideal.canonical_key();
  key += '#';
  key += extra;
  return key;
}

CheckOutcome Decomposer::unmixedness(const Ideal& ideal) {
  if (config_.assume_unmixed) return CheckOutcome::yes("unmixedness assumed");
  return is_unmixed(ideal);
}

std::vector<int> Decomposer::pivot_candidates(const Ideal& ideal) const {
  const auto& basis = ideal.reduced_basis().elements;
  std::vector<int> occurrences(static_cast<size_t>(ideal.ring().size()), 0);
  for (const Polynomial& g : basis)
    for (int v : g.support()) ++occurrences[static_cast<size_t>(v)];
  std::vector<int> present;
  for (int v = 0; v < ideal.ring().size(); ++v)
    if (occurrences[static_cast<size_t>(v)] > 0) present.push_back(v);
  if (config_.strategy == PivotStrategy::FewestOccurrences)
    std::stable_sort(present.begin(), present.end(), [&](int a, int b) {
      return occurrences[static_cast<size_t>(a)] < occurrences[static_cast<size_t>(b)];
    });
  return present;
}

CheckOutcome Decomposer::is_gvd(const Ideal& ideal) { return gvd_recursive(ideal); }

CheckOutcome Decomposer::gvd_recursive(const Ideal& ideal) {
  std::string key = memo_key('g', ideal);
  CheckOutcome cached;
  if (memo_get(key, cached)) return cached;

  CheckOutcome out;
  if (ideal.is_unit()) {
    out = CheckOutcome::yes("unit ideal");
  } else if (is_generated_by_variables(ideal)) {
    out = CheckOutcome::yes("generated by a subset of variables");
  } else {
    CheckOutcome unmixed = unmixedness(ideal);
    if (unmixed.is_false()) {
      out = CheckOutcome::no("not unmixed: " + (unmixed.reasons.empty() ? "" : unmixed.reasons[0]));
    } else if (unmixed.is_unknown()) {
      out = CheckOutcome::unknown("unmixedness undecided");
      out.reasons.insert(out.reasons.end(), unmixed.reasons.begin(), unmixed.reasons.end());
    } else {
      bool tainted = false;
      for (int y : pivot_candidates(ideal)) {
        OneStepResult step = one_step_gvd(ideal, y);
        if (!step.is_gvd) continue;
        CheckOutcome c_branch = gvd_recursive(contracted_to_subring(step.c, y));
        if (c_branch.is_false()) continue;
        CheckOutcome n_branch = gvd_recursive(contracted_to_subring(step.n, y));
        if (n_branch.is_false()) continue;
        if (c_branch.is_true() && n_branch.is_true()) {
          out = CheckOutcome::yes();
          if (config_.assume_unmixed) out.reasons.push_back("unmixedness assumed");
          out.trace.push_back({ideal.ring().to_string(), ideal.ring().name(y), "both",
                               step.is_degenerate()});
          out.trace.insert(out.trace.end(), c_branch.trace.begin(), c_branch.trace.end());
          out.trace.insert(out.trace.end(), n_branch.trace.begin(), n_branch.trace.end());
          memo_put(key, out);
          return out;
        }
        tainted = true;  // at least one branch Unknown, none False
      }
      out = tainted ? CheckOutcome::unknown("a side-condition was undecided on some branch")
                    : CheckOutcome::no("no pivot admits a geometric vertex decomposition with "
                                       "decomposable contractions");
    }
  }
  memo_put(key, out);
  return out;
}

CheckOutcome Decomposer::is_lex_compatibly_gvd(const Ideal& ideal, const std::vector<int>& order) {
  const Ring& ring = ideal.ring();
  if (static_cast<int>(order.size()) != ring.size())
    throw std::invalid_argument("order must be a permutation of the ring's variables");
  std::vector<bool> seen(static_cast<size_t>(ring.size()), false);
  std::vector<std::string> names;
  for (int v : order) {
    if (v < 0 || v >= ring.size() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("order must be a permutation of the ring's variables");
    seen[static_cast<size_t>(v)] = true;
    names.push_back(ring.name(v));
  }
  return lex_recursive(ideal, names);
}

CheckOutcome Decomposer::lex_recursive(const Ideal& ideal,
                                       const std::vector<std::string>& remaining) {
  std::string extra;
  for (const std::string& n : remaining) extra += n + ",";
  std::string key = memo_key('l', ideal, extra);
  CheckOutcome cached;
  if (memo_get(key, cached)) return cached;

  CheckOutcome out;
  if (ideal.is_unit()) {
    out = CheckOutcome::yes("unit ideal");
  } else if (is_generated_by_variables(ideal)) {
    out = CheckOutcome::yes("generated by a subset of variables");
  } else {
    CheckOutcome unmixed = unmixedness(ideal);
    if (unmixed.is_false()) {
      out = CheckOutcome::no("not unmixed");
    } else if (unmixed.is_unknown()) {
      out = CheckOutcome::unknown("unmixedness undecided");
    } else if (remaining.empty()) {
      // No variables left yet the ideal is proper and not variable-generated;
      // cannot happen for well-formed input.
      out = CheckOutcome::no("no variables remain");
    } else {
      int y = *ideal.ring().index_of(remaining[0]);
      OneStepResult step = one_step_gvd(ideal, y);
      if (!step.is_gvd) {
        out = CheckOutcome::no("no geometric vertex decomposition at the forced pivot " +
                               remaining[0]);
      } else {
        std::vector<std::string> rest(remaining.begin() + 1, remaining.end());
        CheckOutcome c_branch = lex_recursive(contracted_to_subring(step.c, y), rest);
        CheckOutcome n_branch =
            c_branch.is_false() ? CheckOutcome::no("")
                                : lex_recursive(contracted_to_subring(step.n, y), rest);
        if (c_branch.is_true() && n_branch.is_true()) {
          out = CheckOutcome::yes();
          out.trace.push_back({ideal.ring().to_string(), remaining[0], "both",
                               step.is_degenerate()});
          out.trace.insert(out.trace.end(), c_branch.trace.begin(), c_branch.trace.end());
          out.trace.insert(out.trace.end(), n_branch.trace.begin(), n_branch.trace.end());
        } else if (c_branch.is_false() || n_branch.is_false()) {
          out = CheckOutcome::no("a contraction is not lex-compatibly decomposable");
        } else {
          out = CheckOutcome::unknown("a side-condition was undecided on some branch");
        }
      }
    }
  }
  memo_put(key, out);
  return out;
}

std::vector<std::vector<std::string>> Decomposer::find_lex_orders(const Ideal& ideal,
                                                                  int max_variables,
                                                                  bool allow_large) {
  const Ring& ring = ideal.ring();
  if (ring.size() > max_variables && !allow_large)
    throw std::invalid_argument(
        "ring has " + std::to_string(ring.size()) + " variables, above the search bound " +
        std::to_string(max_variables) + "; pass --allow-large-order-search to override");

  std::vector<std::vector<std::string>> found;

  // DFS over shared prefixes; a failed one-step at a prefix prunes every
  // extension. The active set carries all contracted ideals that must still
  // decompose with the remaining order.
  struct Walker {
    Decomposer& self;
    std::vector<std::vector<std::string>>& found;

    void emit_all(std::vector<std::string>& prefix, std::vector<std::string> remaining) {
      if (remaining.empty()) {
        found.push_back(prefix);
        return;
      }
      std::sort(remaining.begin(), remaining.end());
      do {
        std::vector<std::string> full = prefix;
        full.insert(full.end(), remaining.begin(), remaining.end());
        found.push_back(std::move(full));
      } while (std::next_permutation(remaining.begin(), remaining.end()));
    }

    void walk(std::vector<Ideal> active, const std::vector<std::string>& remaining,
              std::vector<std::string>& prefix) {
      // Drop branches that are decomposable outright.
      std::vector<Ideal> live;
      for (const Ideal& j : active) {
        if (j.is_unit() || is_generated_by_variables(j)) continue;
        if (!self.unmixedness(j).is_true()) return;  // prune the whole prefix
        live.push_back(j);
      }
      if (live.empty()) {
        emit_all(prefix, remaining);
        return;
      }
      if (remaining.empty()) return;
      for (size_t pick = 0; pick < remaining.size(); ++pick) {
        const std::string& name = remaining[pick];
        std::vector<Ideal> next;
        bool viable = true;
        for (const Ideal& j : live) {
          int y = *j.ring().index_of(name);
          OneStepResult step = one_step_gvd(j, y);
          if (!step.is_gvd) {
            viable = false;
            break;
          }
          next.push_back(contracted_to_subring(step.c, y));
          next.push_back(contracted_to_subring(step.n, y));
        }
        if (!viable) continue;
        // Dedupe reconverging branches.
        std::sort(next.begin(), next.end(), [](const Ideal& a, const Ideal& b) {
          return a.canonical_key() < b.canonical_key();
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Ideal& a, const Ideal& b) {
                                 return a.canonical_key() == b.canonical_key();
                               }),
                   next.end());
        std::vector<std::string> rest;
        for (size_t k = 0; k < remaining.size(); ++k)
          if (k != pick) rest.push_back(remaining[k]);
        prefix.push_back(name);
        walk(std::move(next), rest, prefix);
        prefix.pop_back();
      }
    }
  };

  std::vector<std::string> prefix;
  Walker{*this, found}.walk({ideal}, ring.variables(), prefix);
  std::sort(found.begin(), found.end());
  return found;
}

CheckOutcome Decomposer::is_weakly_gvd(const Ideal& ideal) { return weak_recursive(ideal); }

CheckOutcome Decomposer::weak_recursive(const Ideal& ideal) {
  std::string key = memo_key('w', ideal);
  CheckOutcome cached;
  if (memo_get(key, cached)) return cached;

  CheckOutcome out;
  if (ideal.is_unit()) {
    out = CheckOutcome::yes("unit ideal");
  } else if (is_generated_by_variables(ideal)) {
    out = CheckOutcome::yes("generated by a subset of variables");
  } else {
    CheckOutcome unmixed = unmixedness(ideal);
    if (unmixed.is_false()) {
      out = CheckOutcome::no("not unmixed");
    } else if (unmixed.is_unknown()) {
      out = CheckOutcome::unknown("unmixedness undecided");
    } else {
      bool tainted = false;
      for (int y : pivot_candidates(ideal)) {
        OneStepResult step = one_step_gvd(ideal, y);
        if (!step.is_gvd) continue;
        if (step.is_degenerate()) {
          CheckOutcome branch = weak_recursive(contracted_to_subring(step.n, y));
          if (branch.is_true()) {
            out = CheckOutcome::yes();
            out.trace.push_back({ideal.ring().to_string(), ideal.ring().name(y), "N", true});
            out.trace.insert(out.trace.end(), branch.trace.begin(), branch.trace.end());
            memo_put(key, out);
            return out;
          }
          if (branch.is_unknown()) tainted = true;
          continue;
        }
        // Nondegenerate case: N must be radical and Cohen-Macaulay.
        std::vector<std::string> assumptions;
        CheckOutcome radical = config_.assume_radical
                                   ? CheckOutcome::yes("radicality assumed")
                                   : is_radical_tiered(step.n);
        if (config_.assume_radical) assumptions.push_back("radicality of N assumed");
        if (radical.is_false()) continue;
        CheckOutcome cm = config_.assume_cm
                              ? CheckOutcome::yes("Cohen-Macaulayness assumed")
                              : is_cm(step.n, {config_.accept_inhomogeneous_cm});
        if (config_.assume_cm) assumptions.push_back("Cohen-Macaulayness of N assumed");
        if (cm.is_false()) continue;
        CheckOutcome branch = weak_recursive(contracted_to_subring(step.c, y));
        if (branch.is_false()) continue;
        if (radical.is_true() && cm.is_true() && branch.is_true()) {
          out = CheckOutcome::yes();
          out.reasons = std::move(assumptions);
          if (config_.assume_unmixed) out.reasons.push_back("unmixedness assumed");
          out.trace.push_back({ideal.ring().to_string(), ideal.ring().name(y), "C", false});
          out.trace.insert(out.trace.end(), branch.trace.begin(), branch.trace.end());
          memo_put(key, out);
          return out;
        }
        tainted = true;  // undecided radical/CM/branch kept this pivot open
      }
      out = tainted ? CheckOutcome::unknown("a side-condition was undecided on some branch")
                    : CheckOutcome::no("no pivot admits a weak decomposition step");
    }
  }
  memo_put(key, out);
  return out;
}

}  // namespace gvd
