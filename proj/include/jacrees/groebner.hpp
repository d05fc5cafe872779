#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "jacrees/polynomial.hpp"

namespace jacrees {

// ---------------------------------------------------------------------------
// Cooperative wall-clock deadline, honored by the basis-completion loop.
// ---------------------------------------------------------------------------

namespace detail {
inline std::optional<std::chrono::steady_clock::time_point>& deadline_slot() {
  thread_local std::optional<std::chrono::steady_clock::time_point> slot;
  return slot;
}
}  // namespace detail

class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::milliseconds budget) : previous_(detail::deadline_slot()) {
    detail::deadline_slot() = std::chrono::steady_clock::now() + budget;
  }
  ~DeadlineScope() { detail::deadline_slot() = previous_; }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

inline void check_deadline() {
  const auto& slot = detail::deadline_slot();
  if (slot && std::chrono::steady_clock::now() > *slot)
    throw DeadlineExceeded("computation exceeded its time budget");
}

// ---------------------------------------------------------------------------
// Reduced Groebner basis. `ring->default_order` is the basis order; elements
// are monic, pairwise top-irreducible, fully tail-reduced, sorted by leading
// monomial ascending. Reduced bases are unique per (ideal, order), so this is
// the engine's certificate of ideal identity.
// ---------------------------------------------------------------------------

template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> elements;

  const MonomialOrder& order() const { return ring->default_order; }
  bool is_zero_ideal() const { return elements.empty(); }

  bool contains_unit() const {
    return elements.size() == 1 && elements[0].terms.size() == 1 &&
           elements[0].terms[0].mon.is_one();
  }
};

template <class F>
struct DivisionCertificate {
  std::vector<Polynomial<F>> cofactors;  // one per input generator
  Polynomial<F> remainder;               // p = sum cofactor_j * gen_j + remainder
};

// ---------------------------------------------------------------------------
// Engine internals.
// ---------------------------------------------------------------------------

namespace gbdetail {

using jacrees::detail::sub_scaled_sorted;

/// Scale a term list to its preferred basis form. Over GF(p): monic. Over Q:
/// primitive integer coefficients with positive leading coefficient, which
/// keeps Buchberger's intermediate arithmetic on integral values.
inline void normalize_basis_terms(const PrimeField& field, std::vector<Term<PrimeField>>& t,
                                  PrimeField::Elem* applied) {
  if (t.empty()) return;
  PrimeField::Elem c = field.inv(t.front().coef);
  for (auto& term : t) term.coef = field.mul(term.coef, c);
  if (applied) *applied = c;
}

inline void normalize_basis_terms(const RationalField& field, std::vector<Term<RationalField>>& t,
                                  mpq_class* applied) {
  if (t.empty()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& term : t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coef.get_den().get_mpz_t());
  }
  mpq_class c(den_lcm, num_gcd);  // num_gcd > 0 since terms are nonzero
  c.canonicalize();
  if (t.front().coef < 0) c = -c;
  for (auto& term : t) term.coef *= c;
  if (applied) *applied = c;
  (void)field;
}

template <class F>
struct SPair {
  Monomial lcm;
  int i, j;  // i < j
};

template <class F>
struct SPairCmp {
  const MonomialOrder* order;
  bool operator()(const SPair<F>& a, const SPair<F>& b) const {
    int c = mono_cmp(*order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// Buchberger completion with the Gebauer-Moller pair filters. Pair
/// selection: smallest lcm in the active order, ties by generator index, so
/// runs are deterministic. Optional cofactor tracking keeps, for every basis
/// element, its exact representation in terms of the original generators.
template <class F>
class Engine {
 public:
  Engine(RingPtr<F> ring, bool track, std::size_t n_gens)
      : ring_(std::move(ring)),
        order_(&ring_->default_order),
        track_(track),
        n_gens_(n_gens),
        pairs_(SPairCmp<F>{order_}) {}

  /// Seed with generator `gen_index`; fully reduced against earlier seeds.
  void add_generator(const Polynomial<F>& g, std::size_t gen_index) {
    std::vector<std::vector<Term<F>>> row;
    if (track_) {
      row.resize(n_gens_);
      row[gen_index] = {Term<F>{ring_->field.one(), Monomial::one()}};
    }
    std::vector<Term<F>> terms = g.terms;
    reduce_full(terms, track_ ? &row : nullptr, /*allow_scaling=*/true);
    if (!terms.empty()) append_entry(std::move(terms), std::move(row));
  }

  void run() {
    while (!pairs_.empty()) {
      check_deadline();
      SPair<F> pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      auto [terms, row] = s_polynomial(pr);
      reduce_full(terms, track_ ? &row : nullptr, /*allow_scaling=*/true);
      if (!terms.empty()) append_entry(std::move(terms), std::move(row));
    }
    finish();
  }

  /// After run(): reduced basis elements, ascending leading monomial.
  std::vector<Polynomial<F>> take_elements() {
    std::vector<Polynomial<F>> out;
    for (auto& e : entries_)
      if (!e.redundant) out.push_back(Polynomial<F>{ring_, std::move(e.poly)});
    return out;
  }

  /// After run(): cofactor rows aligned with take_elements() order.
  std::vector<std::vector<Polynomial<F>>> take_rows() {
    std::vector<std::vector<Polynomial<F>>> out;
    for (auto& e : entries_) {
      if (e.redundant) continue;
      std::vector<Polynomial<F>> row;
      row.reserve(n_gens_);
      for (auto& r : e.row) row.push_back(Polynomial<F>{ring_, std::move(r)});
      out.push_back(std::move(row));
    }
    return out;
  }

  /// Reduce `terms` against the current entries. When tracking, `row` gets
  /// the matching cofactor updates. `allow_scaling` permits content stripping
  /// (legal only where the result matters up to a nonzero scalar).
  void reduce_full(std::vector<Term<F>>& terms, std::vector<std::vector<Term<F>>>* row,
                   bool allow_scaling) {
    const F& field = ring_->field;
    std::vector<Term<F>> out;
    std::size_t head = 0;
    unsigned steps = 0;
    while (head < terms.size()) {
      if ((++steps & 1023u) == 0) check_deadline();
      int g = find_reducer(terms[head].mon);
      if (g < 0) {
        out.push_back(terms[head]);
        ++head;
        continue;
      }
      const Entry& e = entries_[static_cast<std::size_t>(g)];
      typename F::Elem c = field.div(terms[head].coef, e.poly.front().coef);
      Monomial m = mono_div(terms[head].mon, e.poly.front().mon);
      terms = sub_scaled_tail(field, terms, head, c, m, e.poly, *order_);
      head = 0;
      if (row)
        for (std::size_t k = 0; k < n_gens_; ++k)
          (*row)[k] = sub_scaled_sorted(field, (*row)[k], c, m, e.row[k], *order_);
      if (allow_scaling && (steps & 31u) == 0) strip(terms, row, &out);
    }
    terms = std::move(out);
    if (allow_scaling) strip(terms, row, nullptr);
  }

 private:
  struct Entry {
    std::vector<Term<F>> poly;                // desc in *order_
    std::vector<std::vector<Term<F>>> row;    // poly == sum row[k] * gen_k
    bool redundant = false;
  };

  RingPtr<F> ring_;
  const MonomialOrder* order_;
  bool track_;
  std::size_t n_gens_;
  std::vector<Entry> entries_;
  std::set<SPair<F>, SPairCmp<F>> pairs_;

  const Monomial& lm(int i) const { return entries_[static_cast<std::size_t>(i)].poly.front().mon; }

  int find_reducer(const Monomial& m) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (!entries_[i].redundant && mono_divides(entries_[i].poly.front().mon, m))
        return static_cast<int>(i);
    return -1;
  }

  /// terms[head..] - c*m*g with the leading cancellation already known.
  static std::vector<Term<F>> sub_scaled_tail(const F& field, const std::vector<Term<F>>& terms,
                                              std::size_t head, const typename F::Elem& c,
                                              const Monomial& m, const std::vector<Term<F>>& g,
                                              const MonomialOrder& order) {
    std::vector<Term<F>> suffix(terms.begin() + static_cast<std::ptrdiff_t>(head), terms.end());
    return sub_scaled_sorted(field, suffix, c, m, g, order);
  }

  void strip(std::vector<Term<F>>& terms, std::vector<std::vector<Term<F>>>* row,
             std::vector<Term<F>>* out) {
    if constexpr (std::is_same_v<F, RationalField>) {
      if (terms.empty() && (out == nullptr || out->empty())) return;
      // scale (out ++ terms) jointly: the pair forms one logical polynomial
      std::vector<Term<F>> joined;
      if (out) joined = *out;
      joined.insert(joined.end(), terms.begin(), terms.end());
      mpq_class applied;
      normalize_basis_terms(ring_->field, joined, &applied);
      if (out) {
        std::copy(joined.begin(), joined.begin() + static_cast<std::ptrdiff_t>(out->size()),
                  out->begin());
        terms.assign(joined.begin() + static_cast<std::ptrdiff_t>(out->size()), joined.end());
      } else {
        terms = std::move(joined);
      }
      if (row)
        for (auto& r : *row)
          for (auto& t : r) t.coef *= applied;
    } else {
      (void)terms;
      (void)row;
      (void)out;
    }
  }

  std::pair<std::vector<Term<F>>, std::vector<std::vector<Term<F>>>> s_polynomial(
      const SPair<F>& pr) {
    const F& field = ring_->field;
    const Entry& a = entries_[static_cast<std::size_t>(pr.i)];
    const Entry& b = entries_[static_cast<std::size_t>(pr.j)];
    Monomial ma = mono_div(pr.lcm, a.poly.front().mon);
    Monomial mb = mono_div(pr.lcm, b.poly.front().mon);
    // lc_b * ma * a  -  lc_a * mb * b: exact cancellation, integral over Q
    const typename F::Elem& ca = a.poly.front().coef;
    const typename F::Elem& cb = b.poly.front().coef;
    std::vector<Term<F>> left;
    left.reserve(a.poly.size());
    for (const auto& t : a.poly)
      left.push_back(Term<F>{field.mul(t.coef, cb), mono_mul(t.mon, ma)});
    std::vector<Term<F>> result =
        sub_scaled_sorted(field, left, ca, mb, b.poly, *order_);
    std::vector<std::vector<Term<F>>> row;
    if (track_) {
      row.resize(n_gens_);
      for (std::size_t k = 0; k < n_gens_; ++k) {
        std::vector<Term<F>> l;
        l.reserve(a.row[k].size());
        for (const auto& t : a.row[k])
          l.push_back(Term<F>{field.mul(t.coef, cb), mono_mul(t.mon, ma)});
        row[k] = sub_scaled_sorted(field, l, ca, mb, b.row[k], *order_);
      }
    }
    return {std::move(result), std::move(row)};
  }

  void append_entry(std::vector<Term<F>> terms, std::vector<std::vector<Term<F>>> row) {
    typename F::Elem applied;
    normalize_basis_terms(ring_->field, terms, &applied);
    if (track_)
      for (auto& r : row) jacrees::detail::scale_in_place(ring_->field, r, applied);
    entries_.push_back(Entry{std::move(terms), std::move(row), false});
    gm_update(static_cast<int>(entries_.size()) - 1);
  }

  /// Gebauer-Moller update for new element t: prune old pairs by the chain
  /// criterion, build candidate pairs (i,t) pruned by the divisor criterion,
  /// equal-lcm dedup, and the coprime-lcm criterion, then retire old basis
  /// elements whose leading monomial the new one divides. The criteria are an
  /// optimization only; the S-polynomial invariant test stays the trust root.
  void gm_update(int t) {
    const Monomial& lt = lm(t);
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (mono_divides(lt, it->lcm) && !(mono_lcm(lm(it->i), lt) == it->lcm) &&
          !(mono_lcm(lm(it->j), lt) == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    std::vector<SPair<F>> cand;
    for (int i = 0; i < t; ++i)
      if (!entries_[static_cast<std::size_t>(i)].redundant)
        cand.push_back(SPair<F>{mono_lcm(lm(i), lt), i, t});
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a] || drop[b]) continue;
        if (!(cand[b].lcm == cand[a].lcm) && mono_divides(cand[b].lcm, cand[a].lcm))
          drop[a] = true;
      }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (!drop[b] && cand[b].lcm == cand[a].lcm) drop[b] = true;
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (!drop[a] && mono_coprime(lm(cand[a].i), lt)) drop[a] = true;
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pairs_.insert(cand[a]);
    for (int i = 0; i < t; ++i) {
      auto& e = entries_[static_cast<std::size_t>(i)];
      if (!e.redundant && mono_divides(lt, lm(i))) e.redundant = true;
    }
  }

  /// Minimality is already guaranteed: later entries are fully reduced, and
  /// gm_update retires older entries under a new leading monomial. Tail-reduce
  /// each survivor against the others (the leading monomials are fixed, so a
  /// single pass reaches the unique reduced basis), make monic, sort.
  void finish() {
    const F& field = ring_->field;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (!entries_[i].redundant) kept.push_back(i);
    std::sort(kept.begin(), kept.end(), [this](std::size_t a, std::size_t b) {
      return mono_cmp(*order_, entries_[a].poly.front().mon, entries_[b].poly.front().mon) < 0;
    });
    for (std::size_t idx : kept) {
      Entry& e = entries_[idx];
      e.redundant = true;  // exclude from its own reduction
      std::vector<Term<F>> head(e.poly.begin(), e.poly.begin() + 1);
      std::vector<Term<F>> tail(e.poly.begin() + 1, e.poly.end());
      // reducing only the tail keeps the tracked row invariant exact
      reduce_full(tail, track_ ? &e.row : nullptr, /*allow_scaling=*/false);
      e.poly = std::move(head);
      e.poly.insert(e.poly.end(), tail.begin(), tail.end());
      e.redundant = false;
      typename F::Elem c = field.inv(e.poly.front().coef);
      jacrees::detail::scale_in_place(field, e.poly, c);
      if (track_)
        for (auto& r : e.row) jacrees::detail::scale_in_place(field, r, c);
    }
    // drop redundant entries and store survivors in ascending-lm order
    std::vector<Entry> final_entries;
    final_entries.reserve(kept.size());
    for (std::size_t idx : kept) final_entries.push_back(std::move(entries_[idx]));
    entries_ = std::move(final_entries);
  }
};

}  // namespace gbdetail

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

/// Reduced Groebner basis of (gens) under `order`. Deterministic: the reduced
/// basis is unique for a fixed order. gens must be nonempty and share a ring.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw UsageError("buchberger: empty generator list");
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (!same_ring(gens[i].ring, gens[0].ring))
      throw UsageError("buchberger: generators from different rings");
  RingPtr<F> work = with_order(gens[0].ring, order);
  gbdetail::Engine<F> engine(work, /*track=*/false, gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    engine.add_generator(reorder(gens[i], work), i);
  engine.run();
  return GroebnerBasis<F>{work, engine.take_elements()};
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens) {
  if (gens.empty()) throw UsageError("buchberger: empty generator list");
  return buchberger(gens, gens[0].ring->default_order);
}

/// Remainder of p on division by gb: no term of the result is divisible by
/// any leading monomial of gb. NF(p) = 0 iff p lies in the ideal. Reduced
/// bases make this the unique normal form, hence linear over the field.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  if (!same_variables(p.ring, gb.ring))
    throw UsageError("normal_form: polynomial and basis rings differ");
  if (gb.elements.empty()) return p;
  const F& field = gb.ring->field;
  const MonomialOrder& order = gb.order();
  std::vector<Term<F>> work = reorder(p, gb.ring).terms;
  std::vector<Term<F>> out;
  std::size_t head = 0;
  unsigned steps = 0;
  while (head < work.size()) {
    if ((++steps & 1023u) == 0) check_deadline();
    const Monomial& m = work[head].mon;
    const Polynomial<F>* red = nullptr;
    for (const auto& g : gb.elements)
      if (mono_divides(g.terms.front().mon, m)) {
        red = &g;
        break;
      }
    if (!red) {
      out.push_back(work[head]);
      ++head;
      continue;
    }
    typename F::Elem c = field.div(work[head].coef, red->terms.front().coef);
    Monomial q = mono_div(m, red->terms.front().mon);
    std::vector<Term<F>> suffix(work.begin() + static_cast<std::ptrdiff_t>(head), work.end());
    work = jacrees::detail::sub_scaled_sorted(field, suffix, c, q, red->terms, order);
    head = 0;
  }
  Polynomial<F> r{gb.ring, std::move(out)};
  return reorder(r, p.ring);
}

template <class F>
bool reduces_to_zero(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  return normal_form(p, gb).is_zero();
}

/// Division with cofactors tracked through basis completion back to the
/// original generators: p = sum cofactors[j]*gens[j] + remainder, exactly.
/// Twice the memory of a plain run; opt-in for that reason.
template <class F>
DivisionCertificate<F> normal_form_with_certificate(const Polynomial<F>& p,
                                                    const std::vector<Polynomial<F>>& gens,
                                                    const MonomialOrder& order) {
  if (gens.empty()) throw UsageError("certificate division needs generators");
  RingPtr<F> work = with_order(gens[0].ring, order);
  const F& field = work->field;
  gbdetail::Engine<F> engine(work, /*track=*/true, gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    engine.add_generator(reorder(gens[i], work), i);
  engine.run();
  std::vector<Polynomial<F>> basis = engine.take_elements();
  std::vector<std::vector<Polynomial<F>>> rows = engine.take_rows();

  std::vector<Term<F>> workp = reorder(p, work).terms;
  std::vector<Term<F>> out;
  std::vector<Polynomial<F>> q(basis.size(), poly_zero(work));
  std::size_t head = 0;
  while (head < workp.size()) {
    check_deadline();
    const Monomial& m = workp[head].mon;
    int red = -1;
    for (std::size_t g = 0; g < basis.size(); ++g)
      if (mono_divides(basis[g].terms.front().mon, m)) {
        red = static_cast<int>(g);
        break;
      }
    if (red < 0) {
      out.push_back(workp[head]);
      ++head;
      continue;
    }
    const Polynomial<F>& g = basis[static_cast<std::size_t>(red)];
    typename F::Elem c = field.div(workp[head].coef, g.terms.front().coef);
    Monomial qm = mono_div(m, g.terms.front().mon);
    q[static_cast<std::size_t>(red)] =
        add(q[static_cast<std::size_t>(red)], mul_term(poly_one(work), c, qm));
    std::vector<Term<F>> suffix(workp.begin() + static_cast<std::ptrdiff_t>(head), workp.end());
    workp = jacrees::detail::sub_scaled_sorted(field, suffix, c, qm, g.terms,
                                               work->default_order);
    head = 0;
  }

  DivisionCertificate<F> cert;
  cert.remainder = reorder(Polynomial<F>{work, std::move(out)}, p.ring);
  cert.cofactors.assign(gens.size(), poly_zero(p.ring));
  for (std::size_t g = 0; g < basis.size(); ++g)
    for (std::size_t k = 0; k < gens.size(); ++k)
      cert.cofactors[k] = add(cert.cofactors[k], reorder(mul(q[g], rows[g][k]), p.ring));

  // the identity must hold exactly; anything else is an engine bug
  Polynomial<F> check = cert.remainder;
  for (std::size_t k = 0; k < gens.size(); ++k)
    check = add(check, mul(cert.cofactors[k], gens[k]));
  if (!(check == p)) throw TheoremViolation("division certificate failed to re-expand");
  return cert;
}

/// Buchberger criterion, with no pair skipped: every S-polynomial of the
/// basis reduces to zero. The trust root behind the pair-elimination filters.
template <class F>
bool is_groebner_basis(const GroebnerBasis<F>& gb) {
  const F& field = gb.ring->field;
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      const auto& a = gb.elements[i];
      const auto& b = gb.elements[j];
      Monomial l = mono_lcm(a.terms.front().mon, b.terms.front().mon);
      Polynomial<F> s =
          sub(mul_term(a, field.div(field.one(), a.terms.front().coef),
                       mono_div(l, a.terms.front().mon)),
              mul_term(b, field.div(field.one(), b.terms.front().coef),
                       mono_div(l, b.terms.front().mon)));
      if (!reduces_to_zero(s, gb)) return false;
    }
  return true;
}

}  // namespace jacrees
