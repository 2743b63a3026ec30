#include "gvd/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace gvd {

bool GroebnerBasis::is_trivial_unit() const {
  return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s-polynomial of the zero polynomial");
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial l = lf.mono.lcm_with(lg.mono);
  Polynomial a = f.times_term({lf.coeff.inverse(), l.divided_by(lf.mono)});
  Polynomial b = g.times_term({lg.coeff.inverse(), l.divided_by(lg.mono)});
  return a - b;
}

namespace {

// Division loop shared by normal_form and divide. `quotients` may be null.
Polynomial division(const Polynomial& f, std::span<const Polynomial> divisors,
                    const LexOrder& order, std::vector<Polynomial>* quotients) {
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("zero divisor in division");
    if (g.ring() != f.ring()) throw std::invalid_argument("ring mismatch");
  }
  std::vector<const Term*> leads;
  leads.reserve(divisors.size());
  for (const Polynomial& g : divisors) leads.push_back(&g.leading_term(order));

  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term(order);
    bool reduced_step = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i]->mono.divides(lt.mono)) {
        Term ratio{lt.coeff / leads[i]->coeff, lt.mono.divided_by(leads[i]->mono)};
        p = p - divisors[i].times_term(ratio);
        if (quotients)
          (*quotients)[i] = (*quotients)[i] + Polynomial::from_monomial(f.ring(), ratio.mono, ratio.coeff);
        reduced_step = true;
        break;
      }
    }
    if (!reduced_step) {
      remainder.push_back(lt);
      p = p - Polynomial::from_monomial(f.ring(), lt.mono, lt.coeff);
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const LexOrder& order) {
  if (divisors.empty()) return f;
  return division(f, divisors, order, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis.elements, basis.order);
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const LexOrder& order) {
  DivisionResult r;
  r.quotients.assign(divisors.size(), Polynomial::zero(f.ring()));
  r.remainder = division(f, divisors, order, &r.quotients);
  return r;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("exact division by zero");
  if (f.is_zero()) return f;
  LexOrder order = LexOrder::default_order(f.ring().size());
  std::vector<Polynomial> d{g};
  DivisionResult r = divide(f, d, order);
  if (!r.remainder.is_zero()) throw std::invalid_argument("division is not exact");
  return r.quotients[0];
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

// Autoreduce a Groebner basis: minimal leads, tail-reduced, monic, sorted.
std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis, const LexOrder& order) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).mono, b.leading_term(order).mono) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    const Monomial& m = g.leading_term(order).mono;
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_term(order).mono.divides(m);
    });
    if (!redundant) minimal.push_back(g);
  }
  // Tail-reduce each element against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  for (Polynomial& g : minimal) g = g.monic(order);
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).mono, b.leading_term(order).mono) < 0;
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> generators,
                         const LexOrder& order) {
  if (order.size() != ring.size()) throw std::invalid_argument("order size mismatch");
  for (const Polynomial& g : generators)
    if (g.ring() != ring) throw std::invalid_argument("ring mismatch");

  std::vector<Polynomial> basis;
  for (Polynomial& g : generators)
    if (!g.is_zero()) basis.push_back(g.primitive_part());

  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const Polynomial& g : basis) leads.push_back(g.leading_term(order).mono);

  std::vector<Pair> pending;
  std::set<std::pair<int, int>> treated;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      pending.push_back({i, j, leads[static_cast<size_t>(i)].lcm_with(leads[static_cast<size_t>(j)])});
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k)
      if (order.compare(pending[k].lcm, pending[best].lcm) < 0) best = k;
    Pair pr = std::move(pending[best]);
    pending[best] = std::move(pending.back());
    pending.pop_back();
    treated.insert({pr.i, pr.j});

    const Polynomial& f = basis[static_cast<size_t>(pr.i)];
    const Polynomial& g = basis[static_cast<size_t>(pr.j)];

    // Coprime-lead criterion.
    if (pr.lcm == leads[static_cast<size_t>(pr.i)].times(leads[static_cast<size_t>(pr.j)]))
      continue;
    // Chain criterion: some k with lt(k) | lcm and both pairs already done.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!leads[static_cast<size_t>(k)].divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (treated.count({key_ik.first, key_ik.second}) &&
          treated.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = normal_form(s_polynomial(f, g, order), basis, order);
    if (!s.is_zero()) {
      basis.push_back(s.primitive_part());
      leads.push_back(basis.back().leading_term(order).mono);
      add_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }

  GroebnerBasis out;
  out.order = order;
  out.elements = autoreduce(std::move(basis), order);
  out.reduced = true;
  return out;
}

}  // namespace gvd
