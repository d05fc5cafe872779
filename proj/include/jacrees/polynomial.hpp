#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jacrees/errors.hpp"
#include "jacrees/field.hpp"
#include "jacrees/monomial.hpp"

namespace jacrees {

template <class F>
struct PolyRing {
  F field;
  std::vector<std::string> vars;
  MonomialOrder default_order = MonomialOrder::grevlex();

  int arity() const { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  if (vars.empty()) throw UsageError("ring needs at least one variable");
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw UsageError("ring arity exceeds " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw UsageError("empty variable name");
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw UsageError("duplicate variable '" + vars[i] + "'");
  }
  auto r = std::make_shared<PolyRing<F>>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  r->default_order = std::move(order);
  return r;
}

/// Same variables and field — the mathematical ring, ignoring term order.
template <class F>
bool same_variables(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a.get() == b.get()) return true;
  return a && b && a->vars == b->vars && a->field.spec() == b->field.spec();
}

/// Strict ring identity: variables, field AND default order. Arithmetic mixes
/// term lists, so operands must agree on the sort.
template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return same_variables(a, b) && a->default_order == b->default_order;
}

/// A view of the same variables under another default order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder o) {
  if (ring->default_order == o) return ring;
  return make_ring(ring->field, ring->vars, std::move(o));
}

template <class F>
struct Term {
  typename F::Elem coef;
  Monomial mon;
};

namespace detail {

/// Sort terms strictly descending under `o`, merging equal monomials and
/// dropping zero coefficients.
template <class F>
void canonicalize(const F& field, std::vector<Term<F>>& t, const MonomialOrder& o) {
  std::sort(t.begin(), t.end(), [&o](const Term<F>& x, const Term<F>& y) {
    return mono_cmp(o, x.mon, y.mon) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    typename F::Elem c = t[i].coef;
    std::size_t j = i + 1;
    while (j < t.size() && t[j].mon == t[i].mon) {
      c = field.add(c, t[j].coef);
      ++j;
    }
    if (!field.is_zero(c)) {
      t[out].coef = std::move(c);
      t[out].mon = t[i].mon;
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

/// Merge-add of two term lists, both strictly descending under `o`.
template <class F>
std::vector<Term<F>> add_sorted(const F& field, const std::vector<Term<F>>& a,
                                const std::vector<Term<F>>& b, const MonomialOrder& o) {
  std::vector<Term<F>> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_cmp(o, a[i].mon, b[j].mon);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
    } else {
      typename F::Elem s = field.add(a[i].coef, b[j].coef);
      if (!field.is_zero(s)) r.push_back(Term<F>{std::move(s), a[i].mon});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

/// a - coef*mon*b, all lists descending under `o`. The workhorse of reduction.
template <class F>
std::vector<Term<F>> sub_scaled_sorted(const F& field, const std::vector<Term<F>>& a,
                                       const typename F::Elem& coef, const Monomial& mon,
                                       const std::vector<Term<F>>& b, const MonomialOrder& o) {
  std::vector<Term<F>> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = mono_mul(mon, b[j].mon);
    int c = mono_cmp(o, a[i].mon, bm);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(Term<F>{field.neg(field.mul(coef, b[j].coef)), bm});
      ++j;
    } else {
      typename F::Elem s = field.sub(a[i].coef, field.mul(coef, b[j].coef));
      if (!field.is_zero(s)) r.push_back(Term<F>{std::move(s), bm});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j)
    r.push_back(Term<F>{field.neg(field.mul(coef, b[j].coef)), mono_mul(mon, b[j].mon)});
  return r;
}

template <class F>
std::vector<Term<F>> mul_sorted(const F& field, const std::vector<Term<F>>& a,
                                const std::vector<Term<F>>& b, const MonomialOrder& o) {
  std::vector<Term<F>> r;
  if (a.empty() || b.empty()) return r;
  r.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b)
      r.push_back(Term<F>{field.mul(ta.coef, tb.coef), mono_mul(ta.mon, tb.mon)});
  canonicalize(field, r, o);
  return r;
}

template <class F>
void scale_in_place(const F& field, std::vector<Term<F>>& t, const typename F::Elem& c) {
  for (auto& term : t) term.coef = field.mul(term.coef, c);
}

template <class F>
std::vector<Term<F>> resorted(const F& field, std::vector<Term<F>> t, const MonomialOrder& o) {
  canonicalize(field, t, o);
  return t;
}

}  // namespace detail

/// Exact sparse multivariate polynomial. Terms are strictly decreasing in the
/// ring's default order; no zero coefficients, no duplicate monomials.
template <class F>
struct Polynomial {
  RingPtr<F> ring;
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }

  const Term<F>& leading_term() const {
    if (terms.empty()) throw ArithError("leading term of zero polynomial");
    return terms.front();
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.mon.deg);
    return d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring, b.ring)) return false;
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].mon == b.terms[i].mon) ||
          !a.ring->field.equal(a.terms[i].coef, b.terms[i].coef))
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
};

template <class F>
Polynomial<F> make_poly(const RingPtr<F>& ring, std::vector<Term<F>> terms) {
  detail::canonicalize(ring->field, terms, ring->default_order);
  return Polynomial<F>{ring, std::move(terms)};
}

template <class F>
Polynomial<F> poly_zero(const RingPtr<F>& ring) {
  return Polynomial<F>{ring, {}};
}

template <class F>
Polynomial<F> poly_const(const RingPtr<F>& ring, typename F::Elem c) {
  Polynomial<F> p{ring, {}};
  if (!ring->field.is_zero(c)) p.terms.push_back(Term<F>{std::move(c), Monomial::one()});
  return p;
}

template <class F>
Polynomial<F> poly_one(const RingPtr<F>& ring) {
  return poly_const(ring, ring->field.one());
}

template <class F>
Polynomial<F> poly_var(const RingPtr<F>& ring, int i, std::uint16_t k = 1) {
  if (i < 0 || i >= ring->arity()) throw UsageError("variable index out of range");
  if (k == 0) return poly_one(ring);
  return Polynomial<F>{ring, {Term<F>{ring->field.one(), Monomial::var(i, k)}}};
}

namespace detail {
template <class F>
void require_same_ring(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (!same_ring(a.ring, b.ring)) throw UsageError("operands live in different rings");
}
}  // namespace detail

template <class F>
Polynomial<F> add(const Polynomial<F>& a, const Polynomial<F>& b) {
  detail::require_same_ring(a, b);
  return Polynomial<F>{a.ring,
                       detail::add_sorted(a.ring->field, a.terms, b.terms, a.ring->default_order)};
}

template <class F>
Polynomial<F> neg(const Polynomial<F>& a) {
  Polynomial<F> r = a;
  for (auto& t : r.terms) t.coef = a.ring->field.neg(t.coef);
  return r;
}

template <class F>
Polynomial<F> sub(const Polynomial<F>& a, const Polynomial<F>& b) {
  detail::require_same_ring(a, b);
  return Polynomial<F>{a.ring, detail::sub_scaled_sorted(a.ring->field, a.terms,
                                                         a.ring->field.one(), Monomial::one(),
                                                         b.terms, a.ring->default_order)};
}

template <class F>
Polynomial<F> mul(const Polynomial<F>& a, const Polynomial<F>& b) {
  detail::require_same_ring(a, b);
  return Polynomial<F>{a.ring,
                       detail::mul_sorted(a.ring->field, a.terms, b.terms, a.ring->default_order)};
}

template <class F>
Polynomial<F> mul_term(const Polynomial<F>& a, const typename F::Elem& c, const Monomial& m) {
  Polynomial<F> r{a.ring, {}};
  if (a.ring->field.is_zero(c)) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms)
    r.terms.push_back(Term<F>{a.ring->field.mul(t.coef, c), mono_mul(t.mon, m)});
  return r;  // multiplying by a fixed term preserves the sort
}

template <class F>
Polynomial<F> scale(const Polynomial<F>& a, const typename F::Elem& c) {
  return mul_term(a, c, Monomial::one());
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& a, unsigned k) {
  Polynomial<F> r = poly_one(a.ring);
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

template <class F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) { return add(a, b); }
template <class F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) { return sub(a, b); }
template <class F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) { return mul(a, b); }
template <class F>
Polynomial<F> operator-(const Polynomial<F>& a) { return neg(a); }

namespace detail {
inline int coef_cmp(const RationalField&, const mpq_class& a, const mpq_class& b) {
  return cmp(a, b);
}
inline int coef_cmp(const PrimeField&, std::uint32_t a, std::uint32_t b) {
  return a < b ? -1 : (a > b ? 1 : 0);
}
}  // namespace detail

/// Deterministic total order on polynomials of one ring (term lists compared
/// lexicographically). Only used for canonical sorting and dedup.
template <class F>
int poly_cmp(const Polynomial<F>& a, const Polynomial<F>& b) {
  const MonomialOrder& o = a.ring->default_order;
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = mono_cmp(o, a.terms[i].mon, b.terms[i].mon)) return c;
    if (int c = detail::coef_cmp(a.ring->field, a.terms[i].coef, b.terms[i].coef)) return c;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

/// Formal partial derivative with respect to variable i. Exponents enter the
/// coefficient through the field, so characteristic-p collapse is honest.
template <class F>
Polynomial<F> derivative(const Polynomial<F>& p, int i) {
  if (i < 0 || i >= p.ring->arity()) throw UsageError("variable index out of range");
  const F& field = p.ring->field;
  std::vector<Term<F>> out;
  out.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    std::uint16_t e = t.mon.e[i];
    if (e == 0) continue;
    typename F::Elem c = field.mul(t.coef, field.from_long(e));
    if (field.is_zero(c)) continue;
    Monomial m = t.mon;
    m.e[i] = static_cast<std::uint16_t>(e - 1);
    m.deg -= 1;
    out.push_back(Term<F>{std::move(c), m});
  }
  // removing one exponent from a fixed variable is order-preserving for the
  // orders used here only degree-wise, so re-sort to stay canonical
  detail::canonicalize(field, out, p.ring->default_order);
  return Polynomial<F>{p.ring, std::move(out)};
}

/// The constant term, i.e. the value at the origin.
template <class F>
typename F::Elem evaluate_at_origin(const Polynomial<F>& p) {
  for (const auto& t : p.terms)
    if (t.mon.is_one()) return t.coef;
  return p.ring->field.zero();
}

// ---------------------------------------------------------------------------
// Moving polynomials between rings.
// ---------------------------------------------------------------------------

/// Transport p into `target`, sending source variable i to target variable
/// var_map[i]. A negative entry requires exponent 0 (projection).
template <class F>
Polynomial<F> transport(const Polynomial<F>& p, const RingPtr<F>& target,
                        const std::vector<int>& var_map) {
  std::vector<Term<F>> out;
  out.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Monomial m;
    for (int i = 0; i < p.ring->arity(); ++i) {
      std::uint16_t e = t.mon.e[i];
      if (e == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0) throw UsageError("transport drops a variable with nonzero exponent");
      m.e[j] = static_cast<std::uint16_t>(m.e[j] + e);
      m.deg += e;
    }
    out.push_back(Term<F>{t.coef, m});
  }
  detail::canonicalize(target->field, out, target->default_order);
  return Polynomial<F>{target, std::move(out)};
}

/// Map from source ring into target ring by matching variable names.
template <class F>
std::vector<int> name_map(const RingPtr<F>& source, const RingPtr<F>& target) {
  std::vector<int> m(static_cast<std::size_t>(source->arity()));
  for (int i = 0; i < source->arity(); ++i)
    m[static_cast<std::size_t>(i)] = target->var_index(source->vars[static_cast<std::size_t>(i)]);
  return m;
}

/// Same variables, different default order: re-sort the term list.
template <class F>
Polynomial<F> reorder(const Polynomial<F>& p, const RingPtr<F>& target) {
  if (!same_variables(p.ring, target)) throw UsageError("reorder across different rings");
  if (p.ring->default_order == target->default_order) return Polynomial<F>{target, p.terms};
  return Polynomial<F>{target, detail::resorted(target->field, p.terms, target->default_order)};
}

/// Substitute target-ring polynomials for every variable of p's ring.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, const RingPtr<F>& target,
                         const std::vector<Polynomial<F>>& images) {
  if (static_cast<int>(images.size()) != p.ring->arity())
    throw UsageError("substitution needs one image per variable");
  // memoize images[i]^k — substitution targets here reuse small powers heavily
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  auto image_pow = [&](std::size_t i, std::uint16_t k) -> const Polynomial<F>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(poly_one(target));
    while (cache.size() <= k) cache.push_back(mul(cache.back(), images[i]));
    return cache[k];
  };
  Polynomial<F> acc = poly_zero(target);
  for (const auto& t : p.terms) {
    Polynomial<F> term = poly_const(target, t.coef);
    for (int i = 0; i < p.ring->arity(); ++i)
      if (t.mon.e[i] != 0) term = mul(term, image_pow(static_cast<std::size_t>(i), t.mon.e[i]));
    acc = add(acc, term);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Rendering. parse_polynomial (parser.hpp) accepts everything render emits.
// ---------------------------------------------------------------------------

template <class F>
std::string render_monomial(const RingPtr<F>& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring->arity(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring->vars[static_cast<std::size_t>(i)];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

namespace detail {

inline std::string coeff_text(const RationalField& f, const mpq_class& c, bool* negative) {
  mpq_class a = c;
  *negative = a < 0;
  if (*negative) a = -a;
  return f.to_string(a);
}

inline std::string coeff_text(const PrimeField& f, std::uint32_t c, bool* negative) {
  *negative = false;
  (void)f;
  return std::to_string(c);
}

}  // namespace detail

template <class F>
std::string render(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.terms.size(); ++k) {
    bool negative = false;
    std::string c = detail::coeff_text(p.ring->field, p.terms[k].coef, &negative);
    std::string m = render_monomial(p.ring, p.terms[k].mon);
    if (k == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (m.empty())
      s += c;
    else if (c == "1")
      s += m;
    else
      s += c + "*" + m;
  }
  return s;
}

}  // namespace jacrees
