#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacrees/ideal.hpp"

namespace jacrees {

/// Presentation of the Rees algebra of (g_1, ..., g_m): the kernel Q of
/// w_i -> g_i * t, computed by eliminating t and then re-reduced in the
/// presentation ring k[w_1..w_m, x_1..x_n] under a presentation-degree-first
/// order (weight 1 on each w_i, 0 on the base variables).
///
/// The input generators w_i - g_i*t are homogeneous for deg w = deg t = 1,
/// deg x = 0, and Buchberger preserves that grading, so every basis element
/// of Q is homogeneous in w-degree. The x-block having weight zero does not
/// threaten termination: the order is still a genuine monomial well-order
/// (grevlex breaks all weight ties).
template <class F>
struct ReesPresentation {
  RingPtr<F> base;                       // k[x]
  RingPtr<F> pres;                       // k[w, x], graded order
  std::vector<Polynomial<F>> images;     // g_i, in the base ring
  std::vector<std::string> pres_names;   // w names, e.g. u1..un, s
  GroebnerBasis<F> q;                    // reduced basis of Q
  int pres_arity = 0;                    // m = number of w variables

  int w_degree(const Monomial& mon) const {
    int d = 0;
    for (int i = 0; i < pres_arity; ++i) d += mon.e[i];
    return d;
  }

  int w_degree(const Polynomial<F>& p) const {
    return p.is_zero() ? 0 : w_degree(p.terms.front().mon);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& e : q.elements) d = std::max(d, w_degree(e));
    return d;
  }

  std::map<int, int> degree_histogram() const {
    std::map<int, int> h;
    for (const auto& e : q.elements) ++h[w_degree(e)];
    return h;
  }

  /// w_i -> g_i (the t power is determined by homogeneity, so the kernel test
  /// needs no t): zero iff the element is a genuine relation.
  Polynomial<F> substitute_images(const Polynomial<F>& p) const;
};

template <class F>
Polynomial<F> ReesPresentation<F>::substitute_images(const Polynomial<F>& p) const {
  std::vector<Polynomial<F>> image_polys;
  image_polys.reserve(static_cast<std::size_t>(pres->arity()));
  for (int i = 0; i < pres_arity; ++i) image_polys.push_back(images[static_cast<std::size_t>(i)]);
  for (int i = pres_arity; i < pres->arity(); ++i)
    image_polys.push_back(poly_var(base, i - pres_arity));
  return substitute(p, base, image_polys);
}

namespace reesdetail {

template <class F>
std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
  return names;
}

}  // namespace reesdetail

/// Defining ideal of the Rees algebra of (gens), presented on variables
/// `names` (default u1..um). Every output element is substitution-checked
/// and homogeneity-checked; failures are engine bugs.
template <class F>
ReesPresentation<F> rees_ideal(const std::vector<Polynomial<F>>& gens,
                               std::vector<std::string> names = {}) {
  if (gens.empty()) throw UsageError("rees_ideal: empty generator list");
  RingPtr<F> base = gens[0].ring;
  for (const auto& g : gens) {
    if (!same_ring(g.ring, base)) throw UsageError("rees_ideal: mixed rings");
    if (g.is_zero()) throw UsageError("rees_ideal: zero generator");
  }
  std::size_t m = gens.size();
  if (names.empty()) names = reesdetail::default_names<F>(m);
  if (names.size() != m) throw UsageError("rees_ideal: one name per generator required");

  // elimination ring [t, w..., x...], block order on {t}
  std::string tname = "$t";
  std::vector<std::string> elim_vars{tname};
  elim_vars.insert(elim_vars.end(), names.begin(), names.end());
  elim_vars.insert(elim_vars.end(), base->vars.begin(), base->vars.end());
  RingPtr<F> elim = make_ring(base->field, elim_vars, MonomialOrder::block_elimination(1));

  std::vector<int> base_to_elim = name_map(base, elim);
  Polynomial<F> t = poly_var(elim, 0);
  std::vector<Polynomial<F>> kernel_gens;
  for (std::size_t i = 0; i < m; ++i)
    kernel_gens.push_back(
        sub(poly_var(elim, static_cast<int>(i) + 1), mul(transport(gens[i], elim, base_to_elim), t)));
  GroebnerBasis<F> egb = buchberger(kernel_gens, elim->default_order);

  // presentation ring [w..., x...], w-degree first
  std::vector<std::string> pres_vars(names);
  pres_vars.insert(pres_vars.end(), base->vars.begin(), base->vars.end());
  std::vector<int> weights(pres_vars.size(), 0);
  for (std::size_t i = 0; i < m; ++i) weights[i] = 1;
  RingPtr<F> pres =
      make_ring(base->field, pres_vars, MonomialOrder::graded_then_grevlex(std::move(weights)));

  std::vector<int> elim_to_pres = name_map(elim, pres);
  elim_to_pres[0] = -1;  // t must be gone
  std::vector<Polynomial<F>> q_gens;
  for (const auto& e : egb.elements) {
    bool has_t = false;
    for (const auto& term : e.terms)
      if (term.mon.e[0] != 0) {
        has_t = true;
        break;
      }
    if (!has_t) q_gens.push_back(transport(e, pres, elim_to_pres));
  }

  ReesPresentation<F> out;
  out.base = base;
  out.pres = pres;
  out.images = gens;
  out.pres_names = names;
  out.pres_arity = static_cast<int>(m);
  out.q = q_gens.empty() ? GroebnerBasis<F>{pres, {}} : buchberger(q_gens, pres->default_order);

  for (const auto& e : out.q.elements) {
    int d = out.w_degree(e.terms.front().mon);
    for (const auto& term : e.terms)
      if (out.w_degree(term.mon) != d)
        throw TheoremViolation("Rees basis element not homogeneous in presentation degree");
    if (!out.substitute_images(e).is_zero())
      throw TheoremViolation("Rees basis element does not vanish under substitution");
  }
  return out;
}

/// Which degree-d basis elements of Q still matter modulo Q<d-1> over the
/// local ring at the origin.
struct DegreeEvidence {
  int degree = 0;
  int total = 0;                  // basis elements of this degree
  std::vector<int> surviving;     // indices into q.elements
};

template <class F>
struct RelationTypeResult {
  int relation_type = 1;
  std::vector<DegreeEvidence> evidence;  // ascending degree, degrees >= 2
};

/// Local relation type: the largest d >= 2 such that some degree-d element of
/// Q's basis is not in Q<d-1> after localizing the coefficients at the
/// origin, and 1 when no element survives (in particular when Q = 0).
///
/// Q<d-1> is generated by basis elements of degree <= d-1 (homogeneous
/// reduction cannot raise degree), and (Q/Q<d-1>)_d is generated over the
/// base ring by images of the degree-d basis elements, so the test below is
/// exhaustive. Local membership of g in Q<d-1> contracts (Q<d-1> : g) to the
/// base ring and looks for a unit there: only base-ring denominators are
/// invertible in the localized presentation ring.
template <class F>
RelationTypeResult<F> relation_type_local(const ReesPresentation<F>& pres) {
  RelationTypeResult<F> out;
  if (pres.q.elements.empty()) return out;

  int maxdeg = pres.max_degree();
  std::vector<int> front;
  for (int i = 0; i < pres.pres_arity; ++i) front.push_back(i);

  for (int d = 2; d <= maxdeg; ++d) {
    DegreeEvidence ev;
    ev.degree = d;
    std::vector<Polynomial<F>> lower;
    for (const auto& e : pres.q.elements)
      if (pres.w_degree(e) <= d - 1) lower.push_back(e);
    Ideal<F> lower_ideal(pres.pres, lower);
    for (std::size_t idx = 0; idx < pres.q.elements.size(); ++idx) {
      const auto& e = pres.q.elements[idx];
      if (pres.w_degree(e) != d) continue;
      ++ev.total;
      bool absorbed = false;
      if (!lower_ideal.is_zero_ideal()) {
        Ideal<F> colon = ideal_colon(lower_ideal, e);
        Ideal<F> contracted = eliminate(colon, front);
        absorbed = local_unit_element(contracted).has_value();
      }
      if (!absorbed) ev.surviving.push_back(static_cast<int>(idx));
    }
    if (ev.total > 0) out.evidence.push_back(ev);
    if (!ev.surviving.empty()) out.relation_type = d;
  }
  return out;
}

/// The monic-in-s top equation of the Rees ideal of a Jacobian-style
/// presentation (last generator = f, last presentation variable = s), at
/// degree L >= the integral-dependence exponent of f.
///
/// Built from a certificate u * f^L = sum f_j * h_j with h_j running over the
/// degree-(L-1) products of generators, lifted factor-by-factor to the
/// presentation variables. The s^L coefficient equals the certifying unit u
/// (normalized to u(0) = 1); when f^L lies in J*I^(L-1) globally, u = 1 and
/// the equation is literally monic.
template <class F>
struct TopEquation {
  Polynomial<F> equation;  // in pres ring, homogeneous of degree L
  Polynomial<F> unit;      // in base ring, unit(0) = 1
  int degree = 0;
};

template <class F>
TopEquation<F> extract_top_equation(const ReesPresentation<F>& pres, int L) {
  if (L < 1) throw UsageError("top equation degree must be >= 1");
  const std::size_t m = static_cast<std::size_t>(pres.pres_arity);
  if (m < 2) throw UsageError("top equation needs at least two generators");
  const F& field = pres.base->field;

  // generators of J*I^(L-1): j-index over the first m-1 images, beta a
  // multiset of size L-1 over all m images; lift = w_j * prod w^beta
  struct Gen {
    Polynomial<F> value;  // base ring
    Monomial lift;        // pres ring monomial, degree L in the w block
  };
  std::vector<Gen> gens;
  std::vector<std::pair<Polynomial<F>, std::vector<int>>> tuples;
  tuples.emplace_back(poly_one(pres.base), std::vector<int>{});
  for (int step = 0; step < L - 1; ++step) {
    std::vector<std::pair<Polynomial<F>, std::vector<int>>> next;
    for (const auto& [p, idxs] : tuples) {
      std::size_t start = idxs.empty() ? 0 : static_cast<std::size_t>(idxs.back());
      for (std::size_t g = start; g < m; ++g) {
        auto ext = idxs;
        ext.push_back(static_cast<int>(g));
        next.emplace_back(mul(p, pres.images[g]), std::move(ext));
      }
    }
    tuples = std::move(next);
  }
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (const auto& [p, idxs] : tuples) {
      Monomial lift = Monomial::var(static_cast<int>(j));
      for (int g : idxs) lift = mono_mul(lift, Monomial::var(g));
      gens.push_back(Gen{mul(pres.images[j], p), lift});
    }

  std::vector<Polynomial<F>> gen_polys;
  gen_polys.reserve(gens.size());
  for (const auto& g : gens) gen_polys.push_back(g.value);

  Polynomial<F> fL = pow(pres.images[m - 1], static_cast<unsigned>(L));
  Ideal<F> target(pres.base, gen_polys);
  Polynomial<F> unit = poly_one(pres.base);
  if (!is_member_global(fL, target)) {
    auto u = local_unit_element(ideal_colon(target, fL));
    if (!u)
      throw UsageError("top equation: f^L is not in J*I^(L-1) locally (L below id(f))");
    unit = std::move(*u);
  }

  DivisionCertificate<F> cert =
      normal_form_with_certificate(mul(unit, fL), gen_polys, pres.base->default_order);
  if (!cert.remainder.is_zero())
    throw TheoremViolation("top equation certificate has nonzero remainder");

  std::vector<int> base_to_pres = name_map(pres.base, pres.pres);
  Polynomial<F> s_pow = poly_var(pres.pres, static_cast<int>(m) - 1, static_cast<std::uint16_t>(L));
  Polynomial<F> eq = mul(transport(unit, pres.pres, base_to_pres), s_pow);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (cert.cofactors[k].is_zero()) continue;
    Polynomial<F> lifted = mul_term(transport(cert.cofactors[k], pres.pres, base_to_pres),
                                    field.one(), gens[k].lift);
    eq = sub(eq, lifted);
  }

  if (!pres.substitute_images(eq).is_zero())
    throw TheoremViolation("top equation does not vanish under substitution");
  if (!reduces_to_zero(eq, pres.q))
    throw TheoremViolation("top equation is not in the Rees ideal");
  for (const auto& term : eq.terms)
    if (pres.w_degree(term.mon) != L)
      throw TheoremViolation("top equation is not homogeneous of degree L");

  TopEquation<F> out;
  out.equation = std::move(eq);
  out.unit = std::move(unit);
  out.degree = L;
  return out;
}

/// Degree of p in the variable s (= presentation variable index m-1).
template <class F>
int s_degree(const ReesPresentation<F>& pres, const Polynomial<F>& p) {
  int d = 0;
  for (const auto& t : p.terms) d = std::max<int>(d, t.mon.e[pres.pres_arity - 1]);
  return d;
}

/// Coefficient of s^k, as a polynomial in the presentation ring.
template <class F>
Polynomial<F> s_coefficient(const ReesPresentation<F>& pres, const Polynomial<F>& p, int k) {
  std::vector<Term<F>> terms;
  int s_index = pres.pres_arity - 1;
  for (const auto& t : p.terms)
    if (t.mon.e[s_index] == k) {
      Term<F> copy = t;
      copy.mon.deg -= copy.mon.e[s_index];
      copy.mon.e[s_index] = 0;
      terms.push_back(copy);
    }
  return make_poly(pres.pres, std::move(terms));
}

}  // namespace jacrees
