#include "gvd/homalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace gvd {

FreeModuleMap FreeModuleMap::zero(const Ring& ring, int target, int source) {
  FreeModuleMap m;
  m.ring = ring;
  m.target_rank = target;
  m.source_rank = source;
  m.entries.assign(static_cast<size_t>(target),
                   std::vector<Polynomial>(static_cast<size_t>(source), Polynomial::zero(ring)));
  return m;
}

FreeModuleMap FreeModuleMap::from_columns(const Ring& ring, int target,
                                          const std::vector<std::vector<Polynomial>>& columns) {
  FreeModuleMap m = zero(ring, target, static_cast<int>(columns.size()));
  for (size_t s = 0; s < columns.size(); ++s) {
    if (static_cast<int>(columns[s].size()) != target)
      throw std::invalid_argument("column length mismatch");
    for (int t = 0; t < target; ++t)
      m.entries[static_cast<size_t>(t)][s] = columns[s][static_cast<size_t>(t)];
  }
  return m;
}

std::vector<Polynomial> FreeModuleMap::column(int s) const {
  std::vector<Polynomial> col;
  col.reserve(static_cast<size_t>(target_rank));
  for (int t = 0; t < target_rank; ++t) col.push_back(at(t, s));
  return col;
}

FreeModuleMap FreeModuleMap::transposed() const {
  FreeModuleMap m = zero(ring, source_rank, target_rank);
  for (int t = 0; t < target_rank; ++t)
    for (int s = 0; s < source_rank; ++s) m.entries[static_cast<size_t>(s)][static_cast<size_t>(t)] = at(t, s);
  return m;
}

bool FreeModuleMap::is_zero_map() const {
  for (const auto& row : entries)
    for (const Polynomial& p : row)
      if (!p.is_zero()) return false;
  return true;
}

FreeModuleMap compose(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.source_rank != b.target_rank) throw std::invalid_argument("rank mismatch in composition");
  FreeModuleMap m = FreeModuleMap::zero(a.ring, a.target_rank, b.source_rank);
  for (int t = 0; t < a.target_rank; ++t)
    for (int s = 0; s < b.source_rank; ++s) {
      Polynomial acc = Polynomial::zero(a.ring);
      for (int k = 0; k < a.source_rank; ++k) acc = acc + a.at(t, k) * b.at(k, s);
      m.entries[static_cast<size_t>(t)][static_cast<size_t>(s)] = acc;
    }
  return m;
}

namespace {

// ---------------------------------------------------------------------------
// Module Groebner machinery: elements of a free module R^r as term lists with
// a position, ordered position-over-term (smaller position dominates) with
// the ring's default lex order on the monomial part.
// ---------------------------------------------------------------------------

struct ModTerm {
  Rational coeff;
  Monomial mono;
  int pos = 0;
};

// >0 if a > b under POT.
int mod_compare(const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  if (a.mono.exponents() > b.mono.exponents()) return 1;
  if (a.mono.exponents() < b.mono.exponents()) return -1;
  return 0;
}

struct ModPoly {
  std::vector<ModTerm> terms;  // sorted descending, no zeros, no duplicates

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead() const { return terms.front(); }
};

ModPoly mod_normalize(std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const ModTerm& a, const ModTerm& b) { return mod_compare(a, b) > 0; });
  ModPoly p;
  for (ModTerm& t : terms) {
    if (!p.terms.empty() && p.terms.back().pos == t.pos && p.terms.back().mono == t.mono)
      p.terms.back().coeff += t.coeff;
    else
      p.terms.push_back(std::move(t));
    if (!p.terms.empty() && p.terms.back().coeff.is_zero()) p.terms.pop_back();
  }
  return p;
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
  ModPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = mod_compare(a.terms[i], b.terms[j]);
    if (c == 0) {
      Rational s = a.terms[i].coeff + b.terms[j].coeff;
      if (!s.is_zero()) r.terms.push_back({std::move(s), a.terms[i].mono, a.terms[i].pos});
      ++i, ++j;
    } else if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else {
      r.terms.push_back(b.terms[j++]);
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

// v * (c * m), multiplication by a ring term; preserves term order.
ModPoly mod_times_term(const ModPoly& v, const Rational& c, const Monomial& m) {
  ModPoly r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.terms.size());
  for (const ModTerm& t : v.terms) r.terms.push_back({t.coeff * c, t.mono.times(m), t.pos});
  return r;
}

ModPoly mod_scale(const ModPoly& v, const Rational& c) {
  ModPoly r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.terms.size());
  for (const ModTerm& t : v.terms) r.terms.push_back({t.coeff * c, t.mono, t.pos});
  return r;
}

ModPoly mod_primitive(const ModPoly& v) {
  if (v.is_zero()) return v;
  Integer den = 1, num = 0;
  for (const ModTerm& t : v.terms) den = lcm(den, t.coeff.denominator());
  for (const ModTerm& t : v.terms) num = gcd(num, t.coeff.numerator() * (den / t.coeff.denominator()));
  Rational scale(den, num);
  if (v.lead().coeff.sign() < 0) scale = -scale;
  return mod_scale(v, scale);
}

ModPoly mod_normal_form(ModPoly p, const std::vector<ModPoly>& basis) {
  std::vector<ModTerm> remainder;
  while (!p.is_zero()) {
    const ModTerm lt = p.lead();
    bool reduced = false;
    for (const ModPoly& g : basis) {
      const ModTerm& lg = g.lead();
      if (lg.pos == lt.pos && lg.mono.divides(lt.mono)) {
        ModPoly sub = mod_times_term(g, -(lt.coeff / lg.coeff), lt.mono.divided_by(lg.mono));
        p = mod_add(p, sub);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  ModPoly r;
  r.terms = std::move(remainder);  // already sorted descending
  return r;
}

std::vector<ModPoly> mod_autoreduce(std::vector<ModPoly> basis) {
  std::erase_if(basis, [](const ModPoly& p) { return p.is_zero(); });
  std::sort(basis.begin(), basis.end(),
            [](const ModPoly& a, const ModPoly& b) { return mod_compare(a.lead(), b.lead()) < 0; });
  std::vector<ModPoly> minimal;
  for (const ModPoly& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const ModPoly& h) {
      return h.lead().pos == g.lead().pos && h.lead().mono.divides(g.lead().mono);
    });
    if (!redundant) minimal.push_back(g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ModPoly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      ModPoly r = mod_primitive(mod_normal_form(minimal[i], others));
      bool same = r.terms.size() == minimal[i].terms.size();
      for (size_t k = 0; k < r.terms.size() && same; ++k)
        same = r.terms[k].pos == minimal[i].terms[k].pos &&
               r.terms[k].mono == minimal[i].terms[k].mono &&
               r.terms[k].coeff == minimal[i].terms[k].coeff;
      if (!same) {
        minimal[i] = r;
        changed = true;
      }
    }
    std::erase_if(minimal, [](const ModPoly& p) { return p.is_zero(); });
  }
  return minimal;
}

std::vector<ModPoly> mod_buchberger(std::vector<ModPoly> gens) {
  std::vector<ModPoly> basis;
  for (ModPoly& g : gens)
    if (!g.is_zero()) basis.push_back(mod_primitive(g));

  struct Pair {
    int i, j;
    Monomial lcm;
    int pos;
  };
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> treated;
  auto add_pairs_for = [&](int j) {
    const ModTerm& lj = basis[static_cast<size_t>(j)].lead();
    for (int i = 0; i < j; ++i) {
      const ModTerm& li = basis[static_cast<size_t>(i)].lead();
      if (li.pos == lj.pos) pending.push_back({i, j, li.mono.lcm_with(lj.mono), li.pos});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      if (a.pos != b.pos ? a.pos < b.pos : a.lcm.exponents() < b.lcm.exponents()) best = k;
    }
    Pair pr = std::move(pending[best]);
    pending[best] = std::move(pending.back());
    pending.pop_back();
    treated.insert({pr.i, pr.j});

    // Chain criterion (the coprime criterion is not valid for modules).
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      const ModTerm& lk = basis[static_cast<size_t>(k)].lead();
      if (lk.pos != pr.pos || !lk.mono.divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (treated.count({key_ik.first, key_ik.second}) &&
          treated.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    const ModPoly& f = basis[static_cast<size_t>(pr.i)];
    const ModPoly& g = basis[static_cast<size_t>(pr.j)];
    ModPoly a = mod_times_term(f, f.lead().coeff.inverse(), pr.lcm.divided_by(f.lead().mono));
    ModPoly b = mod_times_term(g, -(g.lead().coeff.inverse()), pr.lcm.divided_by(g.lead().mono));
    ModPoly s = mod_normal_form(mod_add(a, b), basis);
    if (!s.is_zero()) {
      basis.push_back(mod_primitive(s));
      add_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }
  return mod_autoreduce(std::move(basis));
}

ModPoly column_to_modpoly(const std::vector<Polynomial>& col, int pos_offset = 0) {
  std::vector<ModTerm> terms;
  for (size_t t = 0; t < col.size(); ++t)
    for (const Term& term : col[t].terms())
      terms.push_back({term.coeff, term.mono, static_cast<int>(t) + pos_offset});
  return mod_normalize(std::move(terms));
}

std::vector<Polynomial> modpoly_to_column(const ModPoly& v, const Ring& ring, int rank,
                                          int pos_offset = 0) {
  std::vector<std::vector<Term>> per_pos(static_cast<size_t>(rank));
  for (const ModTerm& t : v.terms) {
    int p = t.pos - pos_offset;
    per_pos[static_cast<size_t>(p)].push_back({t.coeff, t.mono});
  }
  std::vector<Polynomial> col;
  col.reserve(static_cast<size_t>(rank));
  for (int p = 0; p < rank; ++p) col.emplace_back(ring, std::move(per_pos[static_cast<size_t>(p)]));
  return col;
}

// Membership of v in the submodule spanned by the (precomputed) basis.
bool mod_member(const ModPoly& v, const std::vector<ModPoly>& groebner) {
  return mod_normal_form(v, groebner).is_zero();
}

}  // namespace

FreeModuleMap syzygies(const FreeModuleMap& m) {
  const int t = m.target_rank;
  const int s = m.source_rank;
  // Graph construction: GB of {(column_j, e_j)} in R^{t+s} with the target
  // block dominating; elements supported entirely in the source block are
  // exactly the syzygies.
  std::vector<ModPoly> gens;
  for (int j = 0; j < s; ++j) {
    ModPoly h = column_to_modpoly(m.column(j));
    h.terms.push_back({Rational(1), Monomial(m.ring.size()), t + j});
    h = mod_normalize(std::move(h.terms));
    gens.push_back(std::move(h));
  }
  std::vector<ModPoly> gb = mod_buchberger(std::move(gens));
  std::vector<std::vector<Polynomial>> columns;
  for (const ModPoly& g : gb) {
    bool source_only = std::all_of(g.terms.begin(), g.terms.end(),
                                   [t](const ModTerm& term) { return term.pos >= t; });
    if (source_only && !g.is_zero())
      columns.push_back(modpoly_to_column(g, m.ring, s, t));
  }
  return FreeModuleMap::from_columns(m.ring, s, columns);
}

namespace {

struct Resolution {
  std::vector<FreeModuleMap> maps;  // d_1, d_2, ...
  bool complete = false;            // the last kernel was zero
};

// Cancel nonzero-constant entries of `next` (the new syzygy map into the
// source of `prev`), shrinking both; Gaussian cancellation on the complex.
void prune_units(FreeModuleMap& next, FreeModuleMap& prev) {
  for (;;) {
    int uj = -1, uc = -1;
    for (int j = 0; j < next.target_rank && uj < 0; ++j)
      for (int c = 0; c < next.source_rank && uj < 0; ++c) {
        const Polynomial& e = next.at(j, c);
        if (!e.is_zero() && e.is_constant()) {
          uj = j;
          uc = c;
        }
      }
    if (uj < 0) return;
    Rational u = next.at(uj, uc).terms()[0].coeff;

    FreeModuleMap reduced = FreeModuleMap::zero(next.ring, next.target_rank - 1, next.source_rank - 1);
    for (int r = 0, rr = 0; r < next.target_rank; ++r) {
      if (r == uj) continue;
      for (int c2 = 0, cc = 0; c2 < next.source_rank; ++c2) {
        if (c2 == uc) continue;
        Polynomial adj = next.at(r, c2) - next.at(r, uc).scaled(u.inverse()) * next.at(uj, c2);
        reduced.entries[static_cast<size_t>(rr)][static_cast<size_t>(cc)] = adj;
        ++cc;
      }
      ++rr;
    }
    FreeModuleMap prev_reduced = FreeModuleMap::zero(prev.ring, prev.target_rank, prev.source_rank - 1);
    for (int r = 0; r < prev.target_rank; ++r)
      for (int c2 = 0, cc = 0; c2 < prev.source_rank; ++c2) {
        if (c2 == uj) continue;
        prev_reduced.entries[static_cast<size_t>(r)][static_cast<size_t>(cc)] = prev.at(r, c2);
        ++cc;
      }
    next = std::move(reduced);
    prev = std::move(prev_reduced);
  }
}

Resolution resolve(const Ideal& ideal, int max_maps) {
  const Ring& ring = ideal.ring();
  Resolution res;
  const auto& gens = ideal.reduced_basis().elements;
  if (gens.empty()) {
    res.complete = true;  // R itself; empty resolution
    return res;
  }
  std::vector<std::vector<Polynomial>> cols;
  for (const Polynomial& g : gens) cols.push_back({g.primitive_part()});
  res.maps.push_back(FreeModuleMap::from_columns(ring, 1, cols));
  while (static_cast<int>(res.maps.size()) < max_maps) {
    FreeModuleMap s = syzygies(res.maps.back());
    if (s.is_zero_map() || s.source_rank == 0) {
      res.complete = true;
      return res;
    }
    prune_units(s, res.maps.back());
    if (s.source_rank == 0 || s.is_zero_map()) {
      res.complete = true;
      return res;
    }
    res.maps.push_back(std::move(s));
  }
  // One more kernel check so "complete" is accurate at the cap.
  res.complete = syzygies(res.maps.back()).source_rank == 0;
  return res;
}

// Generators of ker(d^T) for the transposed map out of R^rank; nullopt-style
// empty map when the kernel is everything.
std::vector<ModPoly> kernel_generators(const FreeModuleMap& transposed_next, int rank,
                                       const Ring& ring) {
  if (transposed_next.source_rank == 0 || transposed_next.is_zero_map()) {
    // Kernel is all of R^rank.
    std::vector<ModPoly> gens;
    for (int p = 0; p < rank; ++p) {
      ModPoly e;
      e.terms.push_back({Rational(1), Monomial(ring.size()), p});
      gens.push_back(std::move(e));
    }
    return gens;
  }
  FreeModuleMap k = syzygies(transposed_next);
  std::vector<ModPoly> gens;
  for (int j = 0; j < k.source_rank; ++j) gens.push_back(column_to_modpoly(k.column(j)));
  return gens;
}

// Ext^i(R/I, R) as kernel generators modulo an image; true when zero.
bool ext_zero_from_resolution(const Resolution& res, const Ideal& ideal, int i) {
  const Ring& ring = ideal.ring();
  int length = static_cast<int>(res.maps.size());
  if (i == 0) return !ideal.is_zero();
  if (i > length) return true;  // beyond the resolution: F_i = 0

  // d_{i+1}^T : F_i^* -> F_{i+1}^*.
  int rank_i = res.maps[static_cast<size_t>(i - 1)].source_rank;
  FreeModuleMap next_t =
      (i < length) ? res.maps[static_cast<size_t>(i)].transposed()
                   : FreeModuleMap::zero(ring, 0, rank_i);
  std::vector<ModPoly> kernel = kernel_generators(next_t, rank_i, ring);

  // im(d_i^T): rows of d_i as columns in R^{rank_i}.
  FreeModuleMap prev_t = res.maps[static_cast<size_t>(i - 1)].transposed();
  std::vector<ModPoly> image;
  for (int j = 0; j < prev_t.source_rank; ++j) {
    ModPoly v = column_to_modpoly(prev_t.column(j));
    if (!v.is_zero()) image.push_back(std::move(v));
  }
  std::vector<ModPoly> image_gb = mod_buchberger(std::move(image));
  for (const ModPoly& k : kernel)
    if (!mod_member(k, image_gb)) return false;
  return true;
}

bool ideal_is_homogeneous(const Ideal& i) {
  const auto& basis = i.reduced_basis().elements;
  return std::all_of(basis.begin(), basis.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

}  // namespace

std::vector<FreeModuleMap> free_resolution(const Ideal& i, int max_length) {
  if (max_length < 1 || max_length > i.ring().size() + 1)
    throw std::invalid_argument("resolution length must be between 1 and #variables + 1");
  return resolve(i, max_length).maps;
}

bool ext_is_zero(const Ideal& i, int index) {
  if (index < 0) throw std::invalid_argument("negative Ext index");
  if (i.is_unit()) return true;              // R/I = 0
  if (index > i.ring().size()) return true;  // beyond the global dimension
  Resolution res = resolve(i, i.ring().size() + 1);
  return ext_zero_from_resolution(res, i, index);
}

int projective_dimension(const Ideal& i) {
  if (i.is_unit()) throw std::invalid_argument("projective dimension of the unit ideal");
  if (i.is_zero()) return 0;
  Resolution res = resolve(i, i.ring().size() + 1);
  int top = std::min(static_cast<int>(res.maps.size()), i.ring().size());
  for (int k = top; k >= 1; --k)
    if (!ext_zero_from_resolution(res, i, k)) return k;
  return 0;
}

CheckOutcome is_cm(const Ideal& i, const HomalgOptions& options) {
  if (i.is_unit()) throw std::invalid_argument("Cohen-Macaulay test on the unit ideal");
  int pd = projective_dimension(i);
  int codim = codimension(i);
  bool equal = (pd == codim);
  std::string detail = "pd = " + std::to_string(pd) + ", codim = " + std::to_string(codim);
  if (ideal_is_homogeneous(i))
    return equal ? CheckOutcome::yes(detail) : CheckOutcome::no(detail);
  if (options.accept_inhomogeneous_cm) {
    CheckOutcome out = equal ? CheckOutcome::yes(detail) : CheckOutcome::no(detail);
    out.reasons.push_back("pd-codim criterion accepted on inhomogeneous input");
    return out;
  }
  CheckOutcome out = CheckOutcome::unknown("pd-codim criterion applied to inhomogeneous input");
  out.reasons.push_back(detail + "; criterion leans " + (equal ? "true" : "false"));
  return out;
}

Ideal unmixed_part(const Ideal& i) {
  if (i.is_unit()) throw std::invalid_argument("unmixed part of the unit ideal");
  if (i.is_zero()) return i;
  const Ring& ring = i.ring();
  int c = codimension(i);
  Resolution res = resolve(i, ring.size() + 1);
  int length = static_cast<int>(res.maps.size());
  if (c > length) throw std::logic_error("resolution shorter than the codimension");

  int rank_c = res.maps[static_cast<size_t>(c - 1)].source_rank;
  FreeModuleMap next_t = (c < length) ? res.maps[static_cast<size_t>(c)].transposed()
                                      : FreeModuleMap::zero(ring, 0, rank_c);
  std::vector<ModPoly> kernel = kernel_generators(next_t, rank_c, ring);

  FreeModuleMap prev_t = res.maps[static_cast<size_t>(c - 1)].transposed();
  std::vector<std::vector<Polynomial>> image_cols;
  for (int j = 0; j < prev_t.source_rank; ++j) image_cols.push_back(prev_t.column(j));

  // ann Ext^c = intersection over kernel generators k of (image : k).
  bool first = true;
  Ideal ann(ring);
  std::vector<ModPoly> image_gb;
  {
    std::vector<ModPoly> image;
    for (const auto& col : image_cols) {
      ModPoly v = column_to_modpoly(col);
      if (!v.is_zero()) image.push_back(std::move(v));
    }
    image_gb = mod_buchberger(std::move(image));
  }
  for (const ModPoly& k : kernel) {
    if (mod_member(k, image_gb)) continue;  // contributes (1)
    // (image : k): syzygies of [k | image]; first coordinates.
    std::vector<std::vector<Polynomial>> cols;
    cols.push_back(modpoly_to_column(k, ring, rank_c));
    for (const auto& col : image_cols) cols.push_back(col);
    FreeModuleMap combined = FreeModuleMap::from_columns(ring, rank_c, cols);
    FreeModuleMap syz = syzygies(combined);
    std::vector<Polynomial> colon_gens;
    for (int j = 0; j < syz.source_rank; ++j) colon_gens.push_back(syz.at(0, j));
    Ideal colon(ring, std::move(colon_gens));
    ann = first ? colon : intersection(ann, colon);
    first = false;
  }
  if (first) return Ideal(ring, {Polynomial::constant(ring, 1)});  // Ext^c = 0
  return ann;
}

CheckOutcome is_unmixed(const Ideal& i) {
  if (i.is_unit()) return CheckOutcome::yes("unit ideal, unmixed by convention");
  if (i.is_zero()) return CheckOutcome::yes("zero ideal");
  if (is_monomial_ideal(i)) {
    return is_unmixed_monomial(i)
               ? CheckOutcome::yes("monomial: minimal primes equidimensional, no embedded primes")
               : CheckOutcome::no("monomial: associated primes of different heights");
  }
  size_t basis_size = i.reduced_basis().elements.size();
  size_t presented = i.generators().size();
  size_t generator_count = std::min(basis_size, presented);
  if (generator_count == 1) return CheckOutcome::yes("principal ideal");
  if (static_cast<int>(generator_count) == codimension(i))
    return CheckOutcome::yes("complete intersection (codim = generator count)");
  return ideal_equal(i, unmixed_part(i))
             ? CheckOutcome::yes("equals its equidimensional hull")
             : CheckOutcome::no("differs from its equidimensional hull");
}

CheckOutcome is_radical_tiered(const Ideal& i) {
  if (i.is_zero() || i.is_unit()) return CheckOutcome::yes();
  const Ring& ring = i.ring();
  if (is_monomial_ideal(i)) {
    if (is_squarefree_monomial_ideal(i)) return CheckOutcome::yes("squarefree monomial ideal");
    // A squarefree part of a minimal generator witnesses non-radicality.
    for (const Monomial& m : minimal_monomial_generators(i)) {
      if (m.is_squarefree()) continue;
      Polynomial f = Polynomial::from_monomial(ring, m.squarefree_part());
      return CheckOutcome::no("witness " + f.to_string() + " in sqrt(I) but not in I");
    }
  }
  std::vector<LexOrder> orders;
  orders.push_back(LexOrder::default_order(ring.size()));
  for (int v = 0; v < ring.size(); ++v) {
    LexOrder o = LexOrder::with_variable_first(ring.size(), v);
    if (!(o == orders[0])) orders.push_back(o);
  }
  std::vector<std::string> tried;
  for (const LexOrder& order : orders) {
    const GroebnerBasis& basis = i.reduced_basis(order);
    bool squarefree = std::all_of(
        basis.elements.begin(), basis.elements.end(),
        [&](const Polynomial& g) { return g.leading_term(order).mono.is_squarefree(); });
    if (squarefree) {
      std::string names;
      for (int v : order.priority()) names += (names.empty() ? "" : ">") + ring.name(v);
      return CheckOutcome::yes("squarefree initial ideal under " + names);
    }
    std::string names;
    for (int v : order.priority()) names += (names.empty() ? "" : ">") + ring.name(v);
    tried.push_back(names);
  }
  // Witness hunt: squarefree reductions of basis elements.
  for (const Polynomial& g : i.reduced_basis().elements) {
    Monomial content = g.terms()[0].mono;
    for (const Term& t : g.terms()) content = content.gcd_with(t.mono);
    std::vector<Polynomial> candidates;
    if (!content.is_one()) {
      Polynomial stripped = exact_divide(g, Polynomial::from_monomial(ring, content));
      candidates.push_back(stripped);
      if (!(content.squarefree_part() == content))
        candidates.push_back(stripped * Polynomial::from_monomial(ring, content.squarefree_part()));
    }
    for (const Polynomial& f : candidates) {
      if (!i.contains(f) && radical_membership(f, i))
        return CheckOutcome::no("witness " + f.to_string() + " in sqrt(I) but not in I");
    }
  }
  CheckOutcome out = CheckOutcome::unknown("no squarefree initial ideal found and no witness");
  for (const std::string& name : tried) out.reasons.push_back("tried order " + name);
  return out;
}

}  // namespace gvd
