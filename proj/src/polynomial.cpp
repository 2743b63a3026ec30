#include "gvd/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gvd {

namespace {

// Plain lexicographic comparison of exponent vectors = default lex order.
bool default_greater(const Monomial& a, const Monomial& b) {
  return a.exponents() > b.exponents();
}

void check_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw std::invalid_argument("ring mismatch");
}

}  // namespace

Monomial Monomial::variable(int nvars, int i, std::int32_t power) {
  Monomial m(nvars);
  m.e_[static_cast<size_t>(i)] = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x == 0; });
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(r.e_[i]) + m.e_[i];
    if (s > std::numeric_limits<std::int32_t>::max())
      throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

Monomial Monomial::divided_by(const Monomial& m) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= m.e_[i];
    if (r.e_[i] < 0) throw std::invalid_argument("monomial division is not exact");
  }
  return r;
}

Monomial Monomial::lcm_with(const Monomial& m) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(r.e_[i], m.e_[i]);
  return r;
}

Monomial Monomial::gcd_with(const Monomial& m) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(r.e_[i], m.e_[i]);
  return r;
}

Monomial Monomial::with_exponent(int i, std::int32_t v) const {
  Monomial r(*this);
  r.e_[static_cast<size_t>(i)] = v;
  return r;
}

Monomial Monomial::squarefree_part() const {
  Monomial r(*this);
  for (auto& x : r.e_)
    if (x > 1) x = 1;
  return r;
}

LexOrder::LexOrder(std::vector<int> priority) : priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (int i : priority_) {
    if (i < 0 || i >= static_cast<int>(priority_.size()) || seen[static_cast<size_t>(i)])
      throw std::invalid_argument("order priority is not a permutation");
    seen[static_cast<size_t>(i)] = true;
  }
}

LexOrder LexOrder::default_order(int nvars) {
  std::vector<int> p(static_cast<size_t>(nvars));
  std::iota(p.begin(), p.end(), 0);
  return LexOrder(std::move(p));
}

LexOrder LexOrder::with_variable_first(int nvars, int y) {
  std::vector<int> p;
  p.reserve(static_cast<size_t>(nvars));
  p.push_back(y);
  for (int i = 0; i < nvars; ++i)
    if (i != y) p.push_back(i);
  return LexOrder(std::move(p));
}

LexOrder LexOrder::with_block_first(int nvars, std::span<const int> first) {
  std::vector<int> p(first.begin(), first.end());
  std::vector<bool> used(static_cast<size_t>(nvars), false);
  for (int i : first) used[static_cast<size_t>(i)] = true;
  for (int i = 0; i < nvars; ++i)
    if (!used[static_cast<size_t>(i)]) p.push_back(i);
  return LexOrder(std::move(p));
}

bool LexOrder::is_default() const {
  for (size_t i = 0; i < priority_.size(); ++i)
    if (priority_[i] != static_cast<int>(i)) return false;
  return true;
}

int LexOrder::compare(const Monomial& a, const Monomial& b) const {
  for (int v : priority_) {
    std::int32_t d = a[v] - b[v];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.mono.size() != ring_.size())
      throw std::invalid_argument("monomial length does not match ring");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return default_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const Ring& ring, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(ring.size())});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int i, std::int32_t power) {
  Polynomial p(ring);
  if (power == 0) return constant(ring, 1);
  p.terms_.push_back({Rational(1), Monomial::variable(ring.size(), i, power)});
  return p;
}

Polynomial Polynomial::from_monomial(const Ring& ring, Monomial m, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term(const LexOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  if (order.is_default()) return terms_.front();
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::int32_t Polynomial::degree_in(int var) const {
  std::int32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Polynomial::contains_variable(int var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.mono.contains_variable(var); });
}

std::vector<int> Polynomial::support() const {
  std::vector<bool> present(static_cast<size_t>(ring_.size()), false);
  for (const Term& t : terms_)
    for (int i = 0; i < ring_.size(); ++i)
      if (t.mono.contains_variable(i)) present[static_cast<size_t>(i)] = true;
  std::vector<int> out;
  for (int i = 0; i < ring_.size(); ++i)
    if (present[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  std::int64_t d = terms_[0].mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  // Merge of two canonically sorted term lists.
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono == o.terms_[j].mono) {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].mono});
      ++i, ++j;
    } else if (default_greater(terms_[i].mono, o.terms_[j].mono)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.coeff.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& s : terms_) r.terms_.push_back({s.coeff * t.coeff, s.mono.times(t.mono)});
  // Multiplying by a fixed monomial preserves the default-lex term order.
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::map<std::vector<std::int32_t>, Rational, std::greater<>> acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Monomial m = a.mono.times(b.mono);
      auto [it, inserted] = acc.try_emplace(m.exponents(), a.coeff * b.coeff);
      if (!inserted) it->second += a.coeff * b.coeff;
    }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({std::move(c), Monomial(mono)});
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const Term& t : terms_) {
    den = lcm(den, t.coeff.denominator());
  }
  for (const Term& t : terms_) {
    num = gcd(num, t.coeff.numerator() * (den / t.coeff.denominator()));
  }
  Rational scale(den, num);  // num != 0 since the polynomial is nonzero
  if (terms_[0].coeff.sign() < 0) scale = -scale;
  return scaled(scale);
}

Polynomial Polynomial::monic(const LexOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(leading_term(order).coeff.inverse());
}

std::int32_t Polynomial::top_degree_in(int y) const {
  std::int32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[y]);
  return d;
}

Polynomial Polynomial::initial_form(int y) const {
  if (y < 0 || y >= ring_.size()) throw std::invalid_argument("unknown variable index");
  std::int32_t d = top_degree_in(y);
  Polynomial r(ring_);
  for (const Term& t : terms_)
    if (t.mono[y] == d) r.terms_.push_back(t);
  return r;
}

InitialSplit split_initial_form(const Polynomial& f, int y) {
  InitialSplit s;
  s.d = f.top_degree_in(y);
  std::vector<Term> q, r;
  for (const Term& t : f.terms()) {
    if (t.mono[y] == s.d)
      q.push_back({t.coeff, t.mono.with_exponent(y, 0)});
    else
      r.push_back(t);
  }
  s.q = Polynomial(f.ring(), std::move(q));
  s.r = Polynomial(f.ring(), std::move(r));
  return s;
}

Polynomial Polynomial::mapped_to(const Ring& target) const {
  std::vector<int> image(static_cast<size_t>(ring_.size()), -1);
  for (int i = 0; i < ring_.size(); ++i) {
    auto idx = target.index_of(ring_.name(i));
    if (idx) image[static_cast<size_t>(i)] = *idx;
  }
  Polynomial r(target);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target.size());
    for (int i = 0; i < ring_.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (image[static_cast<size_t>(i)] < 0)
        throw std::invalid_argument("variable '" + ring_.name(i) +
                                    "' occurs but is absent from the target ring");
      m = m.with_exponent(image[static_cast<size_t>(i)], t.mono[i]);
    }
    r.terms_.push_back({t.coeff, std::move(m)});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::substituted(const Ring& target,
                                   const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_.size())
    throw std::invalid_argument("substitution needs one image per variable");
  Polynomial acc = Polynomial::zero(target);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < ring_.size(); ++i)
      if (t.mono[i] != 0) prod = prod * images[static_cast<size_t>(i)].pow(t.mono[i]);
    acc = acc + prod;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < ring_.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring_.name(i);
      if (t.mono[i] > 1) vars += "^" + std::to_string(t.mono[i]);
    }
    if (vars.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += vars;
    } else {
      out += c.to_string() + "*" + vars;
    }
  }
  return out;
}

}  // namespace gvd
