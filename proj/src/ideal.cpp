#include "gvd/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gvd {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) {
  auto st = std::make_shared<State>();
  st->ring = std::move(ring);
  for (Polynomial& g : generators) {
    if (g.ring() != st->ring) throw std::invalid_argument("generator ring mismatch");
    if (!g.is_zero()) st->generators.push_back(std::move(g));
  }
  state_ = std::move(st);
}

const GroebnerBasis& Ideal::reduced_basis(const LexOrder& order) const {
  std::lock_guard<std::mutex> guard(state_->lock);
  auto it = state_->bases.find(order);
  if (it == state_->bases.end())
    it = state_->bases.emplace(order, buchberger(state_->ring, state_->generators, order)).first;
  return it->second;
}

const GroebnerBasis& Ideal::reduced_basis() const {
  return reduced_basis(LexOrder::default_order(ring().size()));
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, reduced_basis()).is_zero();
}

std::string Ideal::canonical_key() const {
  std::string key = ring().to_string() + ";";
  for (const Polynomial& g : reduced_basis().elements) key += g.primitive_part().to_string() + ";";
  return key;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  return a.reduced_basis().elements == b.reduced_basis().elements;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Polynomial& f) {
  std::vector<Polynomial> gens = a.generators();
  gens.push_back(f);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Extend the ring with a fresh auxiliary variable t in first position and
// lift the given polynomials.
struct AuxExtension {
  Ring big;
  Polynomial t;
};

AuxExtension extend_with_aux(const Ring& ring) {
  AuxExtension e;
  e.big = ring.with_variable_prepended(ring.fresh_variable_name());
  e.t = Polynomial::variable(e.big, 0);
  return e;
}

}  // namespace

Ideal elimination_ideal(const Ideal& i, const std::vector<int>& drop) {
  const Ring& ring = i.ring();
  for (int d : drop)
    if (d < 0 || d >= ring.size()) throw std::invalid_argument("unknown variable index");
  LexOrder order = LexOrder::with_block_first(ring.size(), drop);
  const GroebnerBasis& basis = i.reduced_basis(order);

  std::vector<bool> dropped(static_cast<size_t>(ring.size()), false);
  for (int d : drop) dropped[static_cast<size_t>(d)] = true;
  std::vector<std::string> remaining;
  for (int v = 0; v < ring.size(); ++v)
    if (!dropped[static_cast<size_t>(v)]) remaining.push_back(ring.name(v));
  Ring small(std::move(remaining));

  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis.elements) {
    bool free = std::none_of(drop.begin(), drop.end(),
                             [&](int d) { return g.contains_variable(d); });
    if (free) kept.push_back(g.mapped_to(small));
  }
  return Ideal(small, std::move(kept));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  const Ring& ring = a.ring();
  AuxExtension e = extend_with_aux(ring);
  Polynomial one_minus_t = Polynomial::constant(e.big, 1) - e.t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) gens.push_back(e.t * f.mapped_to(e.big));
  for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * g.mapped_to(e.big));
  Ideal extended(e.big, std::move(gens));
  Ideal small = elimination_ideal(extended, {0});
  return mapped_to_ring(small, ring);
}

Ideal quotient(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  if (f.ring() != i.ring()) throw std::invalid_argument("ring mismatch");
  if (f.is_constant()) return i;
  Ideal principal(i.ring(), {f});
  Ideal inter = intersection(i, principal);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : inter.generators()) gens.push_back(exact_divide(g, f));
  return Ideal(i.ring(), std::move(gens));
}

Ideal saturation(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (f.ring() != i.ring()) throw std::invalid_argument("ring mismatch");
  const Ring& ring = i.ring();
  AuxExtension e = extend_with_aux(ring);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : i.generators()) gens.push_back(g.mapped_to(e.big));
  gens.push_back(Polynomial::constant(e.big, 1) - e.t * f.mapped_to(e.big));
  Ideal extended(e.big, std::move(gens));
  Ideal small = elimination_ideal(extended, {0});
  return mapped_to_ring(small, ring);
}

bool radical_membership(const Polynomial& f, const Ideal& i) {
  if (f.is_zero()) return true;
  if (f.ring() != i.ring()) throw std::invalid_argument("ring mismatch");
  AuxExtension e = extend_with_aux(i.ring());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : i.generators()) gens.push_back(g.mapped_to(e.big));
  gens.push_back(Polynomial::constant(e.big, 1) - e.t * f.mapped_to(e.big));
  Ideal extended(e.big, std::move(gens));
  return extended.is_unit();
}

bool radical_equality(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
  if (ideal_equal(a, b)) return true;
  for (const Polynomial& g : a.generators())
    if (!radical_membership(g, b)) return false;
  for (const Polynomial& g : b.generators())
    if (!radical_membership(g, a)) return false;
  return true;
}

Ideal initial_ideal(const Ideal& i, const LexOrder& order) {
  const GroebnerBasis& basis = i.reduced_basis(order);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : basis.elements)
    gens.push_back(Polynomial::from_monomial(i.ring(), g.leading_term(order).mono));
  return Ideal(i.ring(), std::move(gens));
}

namespace {

// Largest subset of variables meeting the support of no generator.
int max_independent_set_size(int nvars, const std::vector<Monomial>& gens) {
  if (nvars > 30) throw std::invalid_argument("too many variables for subset search");
  std::vector<unsigned> supports;
  supports.reserve(gens.size());
  for (const Monomial& m : gens) {
    unsigned mask = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.contains_variable(v)) mask |= 1u << v;
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](unsigned m) { return (m & ~s) == 0; });
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace

int dimension(const Ideal& i) {
  if (i.is_unit()) return -1;
  std::vector<Monomial> leads;
  for (const Polynomial& g : i.reduced_basis().elements)
    leads.push_back(g.leading_term(i.reduced_basis().order).mono);
  return max_independent_set_size(i.ring().size(), leads);
}

int codimension(const Ideal& i) { return i.ring().size() - dimension(i); }

bool is_monomial_ideal(const Ideal& i) {
  const auto& elements = i.reduced_basis().elements;
  return std::all_of(elements.begin(), elements.end(),
                     [](const Polynomial& g) { return g.is_monomial_term(); });
}

std::vector<Monomial> minimal_monomial_generators(const Ideal& i) {
  if (!is_monomial_ideal(i)) throw std::invalid_argument("not a monomial ideal");
  std::vector<Monomial> out;
  for (const Polynomial& g : i.reduced_basis().elements) out.push_back(g.terms()[0].mono);
  return out;
}

std::vector<Ideal> minimal_primes_monomial(const Ideal& i) {
  std::vector<Monomial> gens = minimal_monomial_generators(i);
  const Ring& ring = i.ring();
  // Support transversals: expand generator by generator, minimalize at the end.
  std::set<std::vector<int>> transversals{{}};
  for (const Monomial& m : gens) {
    std::set<std::vector<int>> next;
    for (const std::vector<int>& tv : transversals) {
      bool hit = std::any_of(tv.begin(), tv.end(),
                             [&](int v) { return m.contains_variable(v); });
      if (hit) {
        next.insert(tv);
        continue;
      }
      for (int v = 0; v < ring.size(); ++v) {
        if (!m.contains_variable(v)) continue;
        std::vector<int> extended = tv;
        extended.insert(std::lower_bound(extended.begin(), extended.end(), v), v);
        next.insert(std::move(extended));
      }
    }
    transversals = std::move(next);
  }
  // Keep inclusion-minimal transversals.
  std::vector<std::vector<int>> list(transversals.begin(), transversals.end());
  std::vector<Ideal> primes;
  for (size_t i1 = 0; i1 < list.size(); ++i1) {
    bool minimal = true;
    for (size_t i2 = 0; i2 < list.size() && minimal; ++i2) {
      if (i1 == i2) continue;
      if (std::includes(list[i1].begin(), list[i1].end(), list[i2].begin(), list[i2].end()) &&
          list[i1].size() > list[i2].size())
        minimal = false;
    }
    if (minimal) {
      std::vector<Polynomial> vars;
      for (int v : list[i1]) vars.push_back(Polynomial::variable(ring, v));
      primes.emplace_back(ring, std::move(vars));
    }
  }
  return primes;
}

namespace {

std::vector<Monomial> monomial_minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[i].divides(gens[j]) && j > i)) keep = false;
    }
    if (keep) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Monomial> monomial_intersection(const std::vector<Monomial>& a,
                                            const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const Monomial& m : a)
    for (const Monomial& n : b) out.push_back(m.lcm_with(n));
  return monomial_minimalize(std::move(out));
}

}  // namespace

bool is_unmixed_monomial(const Ideal& i) {
  std::vector<Monomial> gens = minimal_monomial_generators(i);
  if (gens.empty()) return true;  // zero ideal
  std::vector<Ideal> primes = minimal_primes_monomial(i);
  if (primes.empty()) return true;  // unit ideal, by convention
  size_t height0 = primes[0].generators().size();
  for (const Ideal& p : primes)
    if (p.generators().size() != height0) return false;
  if (is_squarefree_monomial_ideal(i)) return true;  // radical: no embedded primes
  // Compare I with the intersection of its minimal primary components; the
  // component at P is I with all variables outside P saturated away.
  const Ring& ring = i.ring();
  std::vector<Monomial> hull;
  bool first = true;
  for (const Ideal& p : primes) {
    std::vector<bool> in_p(static_cast<size_t>(ring.size()), false);
    for (const Polynomial& v : p.generators()) in_p[static_cast<size_t>(v.support()[0])] = true;
    std::vector<Monomial> component;
    for (const Monomial& m : gens) {
      Monomial restricted = m;
      for (int v = 0; v < ring.size(); ++v)
        if (!in_p[static_cast<size_t>(v)]) restricted = restricted.with_exponent(v, 0);
      component.push_back(restricted);
    }
    component = monomial_minimalize(std::move(component));
    hull = first ? component : monomial_intersection(hull, component);
    first = false;
  }
  std::vector<Polynomial> hull_polys;
  for (const Monomial& m : hull) hull_polys.push_back(Polynomial::from_monomial(ring, m));
  return ideal_equal(i, Ideal(ring, std::move(hull_polys)));
}

bool is_squarefree_monomial_ideal(const Ideal& i) {
  std::vector<Monomial> gens = minimal_monomial_generators(i);
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool is_generated_by_variables(const Ideal& i) {
  const auto& elements = i.reduced_basis().elements;
  return std::all_of(elements.begin(), elements.end(), [](const Polynomial& g) {
    return g.is_monomial_term() && g.terms()[0].mono.degree() == 1;
  });
}

Ideal contracted_to_subring(const Ideal& i, int drop) {
  const Ring& ring = i.ring();
  if (drop < 0 || drop >= ring.size()) throw std::invalid_argument("unknown variable index");
  Ring small = ring.without_variable(drop);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : i.generators()) gens.push_back(g.mapped_to(small));
  return Ideal(small, std::move(gens));
}

Ideal mapped_to_ring(const Ideal& i, const Ring& target) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : i.generators()) gens.push_back(g.mapped_to(target));
  return Ideal(target, std::move(gens));
}

}  // namespace gvd
