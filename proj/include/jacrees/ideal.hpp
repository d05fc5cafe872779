#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacrees/groebner.hpp"
#include "jacrees/polynomial.hpp"

namespace jacrees {

/// Finitely generated ideal with a per-order cache of reduced Groebner bases.
/// Generators are immutable after construction; the cache is write-once per
/// order, so copies (which share it) are safe to use concurrently.
template <class F>
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
      if (!same_ring(g.ring, ring_)) throw UsageError("ideal generator from a different ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const GroebnerBasis<F>& groebner() const { return groebner(ring_->default_order); }

  const GroebnerBasis<F>& groebner(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = order.key();
    auto it = cache_->by_order.find(key);
    if (it == cache_->by_order.end()) {
      auto gb = std::make_shared<GroebnerBasis<F>>(
          gens_.empty() ? GroebnerBasis<F>{with_order(ring_, order), {}}
                        : buchberger(gens_, order));
      it = cache_->by_order.emplace(key, std::move(gb)).first;
    }
    return *it->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis<F>>> by_order;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> zero_ideal(const RingPtr<F>& ring) {
  return Ideal<F>(ring, {});
}

template <class F>
Ideal<F> unit_ideal(const RingPtr<F>& ring) {
  return Ideal<F>(ring, {poly_one(ring)});
}

template <class F>
Ideal<F> principal_ideal(Polynomial<F> g) {
  auto ring = g.ring;
  return Ideal<F>(ring, {std::move(g)});
}

namespace detail {
template <class F>
void require_same_ring(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw UsageError("ideals live in different rings");
}

template <class F>
void dedup_gens(std::vector<Polynomial<F>>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial<F>& a, const Polynomial<F>& b) { return poly_cmp(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Polynomial<F>& a, const Polynomial<F>& b) {
                           return poly_cmp(a, b) == 0;
                         }),
             gens.end());
}

template <class F>
std::string fresh_name(const RingPtr<F>& ring, const std::string& base) {
  std::string name = base;
  int k = 0;
  while (ring->var_index(name) >= 0) name = base + std::to_string(++k);
  return name;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Sum, product, power.
// ---------------------------------------------------------------------------

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_ring(a, b);
  std::vector<Polynomial<F>> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  detail::dedup_gens(gens);
  return Ideal<F>(a.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_ring(a, b);
  std::vector<Polynomial<F>> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& p : a.gens())
    for (const auto& q : b.gens()) gens.push_back(mul(p, q));
  detail::dedup_gens(gens);
  return Ideal<F>(a.ring(), std::move(gens));
}

/// I^k, with I^0 = (1) so that expressions like J*I^(d-2) degrade correctly
/// at d = 2.
template <class F>
Ideal<F> ideal_power(const Ideal<F>& a, int k) {
  if (k < 0) throw UsageError("negative ideal power");
  if (k == 0) return unit_ideal(a.ring());
  if (a.is_zero_ideal()) return zero_ideal(a.ring());
  // products over index-nondecreasing tuples: each k-multiset exactly once
  std::vector<std::pair<Polynomial<F>, std::size_t>> acc;
  for (std::size_t i = 0; i < a.gens().size(); ++i) acc.emplace_back(a.gens()[i], i);
  for (int step = 1; step < k; ++step) {
    std::vector<std::pair<Polynomial<F>, std::size_t>> next;
    for (const auto& [p, last] : acc)
      for (std::size_t j = last; j < a.gens().size(); ++j)
        next.emplace_back(mul(p, a.gens()[j]), j);
    acc = std::move(next);
  }
  std::vector<Polynomial<F>> gens;
  gens.reserve(acc.size());
  for (auto& [p, last] : acc) gens.push_back(std::move(p));
  detail::dedup_gens(gens);
  return Ideal<F>(a.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Elimination, intersection, colon.
// ---------------------------------------------------------------------------

/// I ∩ k[remaining vars], as an ideal of the smaller ring (grevlex default).
/// The block order puts the eliminated variables first, so basis elements
/// whose leading monomial avoids them avoid them entirely.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<int>& front_vars) {
  const RingPtr<F>& ring = ideal.ring();
  if (front_vars.empty()) return ideal;
  std::vector<bool> is_front(static_cast<std::size_t>(ring->arity()), false);
  for (int i : front_vars) {
    if (i < 0 || i >= ring->arity()) throw UsageError("eliminate: bad variable index");
    if (is_front[static_cast<std::size_t>(i)]) throw UsageError("eliminate: repeated variable");
    is_front[static_cast<std::size_t>(i)] = true;
  }
  std::vector<std::string> perm_vars, rest_vars;
  for (int i : front_vars) perm_vars.push_back(ring->vars[static_cast<std::size_t>(i)]);
  for (int i = 0; i < ring->arity(); ++i)
    if (!is_front[static_cast<std::size_t>(i)]) {
      perm_vars.push_back(ring->vars[static_cast<std::size_t>(i)]);
      rest_vars.push_back(ring->vars[static_cast<std::size_t>(i)]);
    }
  if (rest_vars.empty()) throw UsageError("eliminate: no variables left");
  RingPtr<F> rest = make_ring(ring->field, rest_vars);
  if (ideal.is_zero_ideal()) return zero_ideal(rest);

  RingPtr<F> perm = make_ring(ring->field, perm_vars,
                              MonomialOrder::block_elimination(static_cast<int>(front_vars.size())));
  std::vector<Polynomial<F>> moved;
  auto up = name_map(ring, perm);
  for (const auto& g : ideal.gens()) moved.push_back(transport(g, perm, up));
  GroebnerBasis<F> gb = buchberger(moved, perm->default_order);

  std::vector<Polynomial<F>> kept;
  auto down = name_map(gb.ring, rest);  // front vars map to -1
  for (const auto& e : gb.elements) {
    bool free_of_front = true;
    for (std::size_t k = 0; k < front_vars.size() && free_of_front; ++k)
      for (const auto& t : e.terms)
        if (t.mon.e[k] != 0) {
          free_of_front = false;
          break;
        }
    if (free_of_front) kept.push_back(transport(e, rest, down));
  }
  return Ideal<F>(rest, std::move(kept));
}

/// I ∩ J via elimination of an auxiliary variable t from t*I + (1-t)*J.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_ring(a, b);
  const RingPtr<F>& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return zero_ideal(ring);
  std::string tname = detail::fresh_name(ring, "$t");
  std::vector<std::string> ext_vars{tname};
  ext_vars.insert(ext_vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr<F> ext = make_ring(ring->field, ext_vars, MonomialOrder::block_elimination(1));

  auto up = name_map(ring, ext);
  Polynomial<F> t = poly_var(ext, 0);
  Polynomial<F> one_minus_t = sub(poly_one(ext), t);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.gens()) gens.push_back(mul(t, transport(g, ext, up)));
  for (const auto& g : b.gens()) gens.push_back(mul(one_minus_t, transport(g, ext, up)));

  GroebnerBasis<F> gb = buchberger(gens, ext->default_order);
  std::vector<Polynomial<F>> kept;
  auto down = name_map(gb.ring, ring);
  for (const auto& e : gb.elements) {
    bool has_t = false;
    for (const auto& term : e.terms)
      if (term.mon.e[0] != 0) {
        has_t = true;
        break;
      }
    if (!has_t) kept.push_back(transport(e, ring, down));
  }
  return Ideal<F>(ring, std::move(kept));
}

/// Exact quotient p / g via leading-term division. Whenever p lies in (g)
/// every intermediate remainder does too, so each leading term is divisible;
/// anything else indicates an engine bug upstream.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& p, const Polynomial<F>& g) {
  detail::require_same_ring(p, g);
  if (g.is_zero()) throw ArithError("division by zero polynomial");
  const F& field = p.ring->field;
  const MonomialOrder& order = p.ring->default_order;
  std::vector<Term<F>> work = p.terms;
  std::vector<Term<F>> quotient;
  while (!work.empty()) {
    if (!mono_divides(g.terms.front().mon, work.front().mon))
      throw TheoremViolation("inexact polynomial division");
    typename F::Elem c = field.div(work.front().coef, g.terms.front().coef);
    Monomial m = mono_div(work.front().mon, g.terms.front().mon);
    quotient.push_back(Term<F>{c, m});
    work = detail::sub_scaled_sorted(field, work, c, m, g.terms, order);
  }
  return Polynomial<F>{p.ring, std::move(quotient)};  // built in strictly decreasing order
}

/// I : g = (1/g) * (I ∩ (g)).
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& ideal, const Polynomial<F>& g) {
  if (g.is_zero()) throw ArithError("colon by zero element");
  if (!same_ring(ideal.ring(), g.ring)) throw UsageError("colon operand from a different ring");
  if (ideal.is_zero_ideal()) return zero_ideal(ideal.ring());
  Ideal<F> inter = ideal_intersect(ideal, principal_ideal(g));
  std::vector<Polynomial<F>> gens;
  gens.reserve(inter.gens().size());
  for (const auto& h : inter.gens()) gens.push_back(divide_exact(h, g));
  return Ideal<F>(ideal.ring(), std::move(gens));
}

/// I : J = ∩_j (I : g_j). The colon by the zero ideal is the unit ideal.
template <class F>
Ideal<F> ideal_colon_ideal(const Ideal<F>& ideal, const Ideal<F>& by) {
  detail::require_same_ring(ideal, by);
  if (by.is_zero_ideal()) return unit_ideal(ideal.ring());
  std::optional<Ideal<F>> acc;
  for (const auto& g : by.gens()) {
    Ideal<F> c = ideal_colon(ideal, g);
    acc = acc ? ideal_intersect(*acc, c) : std::move(c);
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Global membership and containment (NF-based).
// ---------------------------------------------------------------------------

template <class F>
bool is_member_global(const Polynomial<F>& g, const Ideal<F>& ideal) {
  if (g.is_zero()) return true;
  if (ideal.is_zero_ideal()) return false;
  return reduces_to_zero(g, ideal.groebner());
}

template <class F>
bool is_subset_global(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : a.gens())
    if (!is_member_global(g, b)) return false;
  return true;
}

/// Ideal identity via the uniqueness of reduced bases for a fixed order.
template <class F>
bool equals_global(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_ring(a, b);
  const auto& ga = a.groebner().elements;
  const auto& gb = b.groebner().elements;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Local (germ at the origin) membership via the unit-colon reduction:
// g ∈ I·R_m  iff  (I : g) ⊄ m  iff  the reduced basis of (I : g) contains an
// element with nonzero constant term. That element is the certifying unit.
// ---------------------------------------------------------------------------

template <class F>
struct LocalWitness {
  Polynomial<F> unit;    // unit(0) = 1
  Polynomial<F> target;  // unit * target ∈ ideal, NF-verified at construction
};

template <class F>
struct LocalMembership {
  bool member = false;
  std::optional<LocalWitness<F>> witness;  // present iff member
};

/// An element of the ideal with nonzero constant term (scaled so the constant
/// term is 1), if one exists; i.e. a certificate that the ideal is not
/// contained in the maximal ideal of the origin.
template <class F>
std::optional<Polynomial<F>> local_unit_element(const Ideal<F>& ideal) {
  if (ideal.is_zero_ideal()) return std::nullopt;
  // an ideal avoids m iff some reduced-basis element does: all generators
  // inside m would trap the whole ideal inside m
  for (const auto& e : ideal.groebner().elements) {
    typename F::Elem c = evaluate_at_origin(e);
    if (!ideal.ring()->field.is_zero(c))
      return scale(e, ideal.ring()->field.inv(c));
  }
  return std::nullopt;
}

template <class F>
LocalMembership<F> is_member_local(const Polynomial<F>& g, const Ideal<F>& ideal) {
  LocalMembership<F> r;
  if (g.is_zero()) {
    r.member = true;
    r.witness = LocalWitness<F>{poly_one(ideal.ring()), g};
    return r;
  }
  if (ideal.is_zero_ideal()) return r;
  if (reduces_to_zero(g, ideal.groebner())) {
    r.member = true;
    r.witness = LocalWitness<F>{poly_one(ideal.ring()), g};
    return r;
  }
  auto unit = local_unit_element(ideal_colon(ideal, g));
  if (!unit) return r;
  if (!reduces_to_zero(mul(*unit, g), ideal.groebner()))
    throw TheoremViolation("local membership witness failed its global re-check");
  r.member = true;
  r.witness = LocalWitness<F>{std::move(*unit), g};
  return r;
}

template <class F>
bool is_subset_local(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : a.gens())
    if (!is_member_local(g, b).member) return false;
  return true;
}

template <class F>
bool equals_local(const Ideal<F>& a, const Ideal<F>& b) {
  return is_subset_local(a, b) && is_subset_local(b, a);
}

}  // namespace jacrees
