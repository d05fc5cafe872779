#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jacrees/rees.hpp"

namespace jacrees {

/// Germ-at-the-origin semantics is the real thing; global is a debug switch
/// (plain ideal membership, no localization).
enum class Semantics : std::uint8_t { local, global };

inline std::string semantics_name(Semantics s) { return s == Semantics::local ? "local" : "global"; }

enum class Verdict : std::uint8_t { linear_jacobian_type, expected_jacobian_type, neither };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::linear_jacobian_type: return "linear_jacobian_type";
    case Verdict::expected_jacobian_type: return "expected_jacobian_type";
    case Verdict::neither: return "neither";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Divisor data: f, its partials, gradient ideal J, Jacobian ideal I, and the
// partial chain J_0 = (0) ⊂ J_1 = (f_1) ⊂ ... ⊂ J_n = J.
// ---------------------------------------------------------------------------

template <class F>
struct DivisorData {
  RingPtr<F> ring;
  Polynomial<F> f;
  std::vector<Polynomial<F>> partials;  // f_i = df/dx_i
  Ideal<F> gradient;                    // J
  Ideal<F> jacobian;                    // I = (J, f)
  std::vector<Ideal<F>> chain;          // chain[i] = J_i, i = 0..n
  bool smooth = false;                  // f not in m^2: unit Jacobian ideal locally

  int n() const { return ring->arity(); }

  /// f_i for i = 1..n+1 (f_{n+1} = f).
  const Polynomial<F>& chain_element(int i) const {
    return i <= n() ? partials[static_cast<std::size_t>(i - 1)] : f;
  }
};

template <class F>
DivisorData<F> build_divisor(const Polynomial<F>& f) {
  if (f.is_zero()) throw UsageError("zero polynomial does not define a divisor");
  const RingPtr<F>& ring = f.ring;
  if (!ring->field.is_zero(evaluate_at_origin(f)))
    throw UsageError("not a germ through the origin: f has nonzero constant term");
  std::uint32_t p = ring->field.characteristic();
  if (p != 0 && p <= f.total_degree())
    throw UsageError("characteristic " + std::to_string(p) +
                     " <= deg f: derivatives would degenerate");

  DivisorData<F> d;
  d.ring = ring;
  d.f = f;
  for (int i = 0; i < ring->arity(); ++i) d.partials.push_back(derivative(f, i));
  d.gradient = Ideal<F>(ring, d.partials);
  std::vector<Polynomial<F>> igens = d.partials;
  igens.push_back(f);
  d.jacobian = Ideal<F>(ring, igens);
  for (int i = 0; i <= ring->arity(); ++i)
    d.chain.push_back(Ideal<F>(
        ring, std::vector<Polynomial<F>>(d.partials.begin(), d.partials.begin() + i)));
  for (const auto& fi : d.partials)
    if (!ring->field.is_zero(evaluate_at_origin(fi))) d.smooth = true;
  return d;
}

// ---------------------------------------------------------------------------
// Analysis engine with memoized ideal powers/products. One instance per
// divisor; not shared across threads.
// ---------------------------------------------------------------------------

template <class F>
class DivisorAnalysis {
 public:
  explicit DivisorAnalysis(DivisorData<F> data, Semantics semantics = Semantics::local)
      : d_(std::move(data)), semantics_(semantics) {}

  const DivisorData<F>& data() const { return d_; }
  Semantics semantics() const { return semantics_; }

  const Ideal<F>& I_power(int k) {
    if (ipow_.empty()) {
      ipow_.push_back(unit_ideal(d_.ring));
      ipow_.push_back(d_.jacobian);
    }
    while (static_cast<int>(ipow_.size()) <= k)
      ipow_.push_back(ideal_power(d_.jacobian, static_cast<int>(ipow_.size())));
    return ipow_[static_cast<std::size_t>(k)];
  }

  /// J_i * I^k; chain index i = 0..n, k >= 0. J_i * I^0 = J_i.
  const Ideal<F>& chain_times_power(int i, int k) {
    auto key = std::make_pair(i, k);
    auto it = products_.find(key);
    if (it == products_.end()) {
      Ideal<F> value = k == 0 ? d_.chain[static_cast<std::size_t>(i)]
                              : ideal_product(d_.chain[static_cast<std::size_t>(i)], I_power(k));
      it = products_.emplace(key, std::move(value)).first;
    }
    return it->second;
  }

  const Polynomial<F>& f_power(int k) {
    while (static_cast<int>(fpow_.size()) <= k)
      fpow_.push_back(fpow_.empty() ? poly_one(d_.ring) : mul(fpow_.back(), d_.f));
    return fpow_[static_cast<std::size_t>(k)];
  }

  bool member(const Polynomial<F>& g, const Ideal<F>& ideal) {
    return semantics_ == Semantics::local ? is_member_local(g, ideal).member
                                          : is_member_global(g, ideal);
  }

  bool subset(const Ideal<F>& a, const Ideal<F>& b) {
    for (const auto& g : a.gens())
      if (!member(g, b)) return false;
    return true;
  }

  bool ideals_equal(const Ideal<F>& a, const Ideal<F>& b) {
    return subset(a, b) && subset(b, a);
  }

  /// Vanishing of T_{i,d} = ((J_{i-1} I^{d-1} : f_i) ∩ I^{d-1}) / J_{i-1} I^{d-2}
  /// over the local ring (each numerator generator must fall into the
  /// denominator ideal locally). For d = 1 the test is the regular-sequence
  /// condition (J_{i-1} : f_i) ⊆ J_{i-1}.
  bool t_vanishes(int i, int d) {
    if (i < 1 || i > d_.n() + 1) throw UsageError("t_vanishes: index out of range");
    if (d < 1) throw UsageError("t_vanishes: degree must be >= 1");
    const Polynomial<F>& fi = d_.chain_element(i);
    const Ideal<F>& lower_chain = d_.chain[static_cast<std::size_t>(i - 1)];
    if (d == 1) {
      Ideal<F> colon = fi.is_zero() ? unit_ideal(d_.ring) : ideal_colon(lower_chain, fi);
      return subset(colon, lower_chain);
    }
    const Ideal<F>& numerator_src = chain_times_power(i - 1, d - 1);
    Ideal<F> colon = fi.is_zero() ? unit_ideal(d_.ring) : ideal_colon(numerator_src, fi);
    Ideal<F> numerator = ideal_intersect(colon, I_power(d - 1));
    const Ideal<F>& denominator = chain_times_power(i - 1, d - 2);
    last_t_witness_.reset();
    for (const auto& g : numerator.gens())
      if (!member(g, denominator)) {
        last_t_witness_ = g;
        return false;
      }
    return true;
  }

  /// Surviving generator from the last failing t_vanishes call.
  const std::optional<Polynomial<F>>& last_t_witness() const { return last_t_witness_; }

  /// f_1, ..., f_n a regular sequence (locally): all d = 1 tests vanish.
  bool regular_sequence_check() {
    for (int i = 1; i <= d_.n(); ++i)
      if (!t_vanishes(i, 1)) return false;
    return true;
  }

  /// Euler homogeneity: f ∈ J over the local ring.
  bool euler_check(std::optional<LocalWitness<F>>* witness = nullptr) {
    if (semantics_ == Semantics::global) return is_member_global(d_.f, d_.gradient);
    LocalMembership<F> m = is_member_local(d_.f, d_.gradient);
    if (witness) *witness = m.witness;
    return m.member;
  }

  /// min{ r >= 1 : f^r ∈ J }.
  int r_of_f(int max_r) {
    for (int r = 1; r <= max_r; ++r)
      if (member(f_power(r), d_.gradient)) return r;
    throw BoundExceeded("r(f) > " + std::to_string(max_r));
  }

  /// min{ r >= 1 : f^r ∈ J I^{r-1} } (the integral-dependence exponent).
  int id_of_f(int max_r) {
    for (int r = 1; r <= max_r; ++r)
      if (member(f_power(r), chain_times_power(d_.n(), r - 1))) {
        // once a power falls in, the next one must too
        if (r < max_r && !member(f_power(r + 1), chain_times_power(d_.n(), r)))
          throw TheoremViolation("id(f) loop is not monotone");
        return r;
      }
    throw BoundExceeded("id(f) > " + std::to_string(max_r));
  }

  /// min{ r >= 0 : I^{r+1} = J I^r } (locally). Termination is guaranteed
  /// mathematically because J is a reduction of I for Jacobian data; max_r is
  /// the configurable guard for everything else.
  int reduction_number(int max_r) {
    for (int r = 0; r <= max_r; ++r)
      if (ideals_equal(I_power(r + 1), chain_times_power(d_.n(), r))) {
        if (r < max_r && !ideals_equal(I_power(r + 2), chain_times_power(d_.n(), r + 1)))
          throw TheoremViolation("reduction-number loop is not monotone");
        return r;
      }
    throw BoundExceeded("rn_J(I) > " + std::to_string(max_r));
  }

  /// Vanishing of (J I^{d-1} : f^d) / (J I^{d-2} : f^{d-1}), d >= 2. The
  /// reverse inclusion always holds, so the quotient vanishes iff the left
  /// colon sits inside the right one.
  bool effective_quotient_vanishes(int d) {
    if (d < 2) throw UsageError("effective quotient needs d >= 2");
    Ideal<F> lhs = ideal_colon(chain_times_power(d_.n(), d - 1), f_power(d));
    Ideal<F> rhs = ideal_colon(chain_times_power(d_.n(), d - 2), f_power(d - 1));
    return subset(lhs, rhs);
  }

  Ideal<F> gradient_colon_f() { return ideal_colon(d_.gradient, d_.f); }

 private:
  DivisorData<F> d_;
  Semantics semantics_;
  std::vector<Ideal<F>> ipow_;
  std::vector<Polynomial<F>> fpow_;
  std::map<std::pair<int, int>, Ideal<F>> products_;
  std::optional<Polynomial<F>> last_t_witness_;
};

// ---------------------------------------------------------------------------
// Spec-shaped free functions (one-shot; tests use these directly).
// ---------------------------------------------------------------------------

template <class F>
bool t_vanishes(const DivisorData<F>& d, int i, int deg) {
  return DivisorAnalysis<F>(d).t_vanishes(i, deg);
}
template <class F>
bool regular_sequence_check(const DivisorData<F>& d) {
  return DivisorAnalysis<F>(d).regular_sequence_check();
}
template <class F>
bool euler_check(const DivisorData<F>& d) {
  return DivisorAnalysis<F>(d).euler_check();
}
template <class F>
int r_of_f(const DivisorData<F>& d, int max_r) {
  return DivisorAnalysis<F>(d).r_of_f(max_r);
}
template <class F>
int id_of_f(const DivisorData<F>& d, int max_r) {
  return DivisorAnalysis<F>(d).id_of_f(max_r);
}
template <class F>
int reduction_number(const DivisorData<F>& d, int max_r) {
  return DivisorAnalysis<F>(d).reduction_number(max_r);
}
template <class F>
bool effective_quotient_vanishes(const DivisorData<F>& d, int deg) {
  return DivisorAnalysis<F>(d).effective_quotient_vanishes(deg);
}

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool applicable = false;
  bool passed = true;  // vacuously true when not applicable
  std::string detail;
};

struct TTableReport {
  int rows = 0;  // i ranges over 1..rows
  int dmax = 0;
  // zero[i-1][d-1]: 1 = vanishes, 0 = does not, -1 = not computed
  std::vector<std::vector<int>> zero;

  int at(int i, int d) const {
    if (i < 1 || i > rows || d < 1 || d > dmax) return -1;
    return zero[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(d - 1)];
  }
};

/// Field-independent summary; polynomial witnesses are carried as text.
struct AnalysisReport {
  bool smooth = false;
  int r = -1;
  int id = -1;
  int rn = -1;
  int rt_jacobian = -1;
  int rt_gradient = -1;
  bool euler_homogeneous = false;
  bool regular_sequence = false;
  Verdict verdict = Verdict::neither;
  std::string semantics = "local";
  int dmax = 0;
  int max_r = 0;
  TTableReport t_table;
  std::string t_disclaimer;
  std::map<int, int> q_degrees_jacobian;  // degree -> count in Q's basis
  std::map<int, int> q_degrees_gradient;
  std::vector<DegreeEvidence> evidence_jacobian;
  std::vector<DegreeEvidence> evidence_gradient;
  bool has_top_equation = false;
  int top_degree = 0;
  bool top_monic = false;
  std::string top_equation_text;
  std::string top_unit_text;
  std::string euler_unit_text;
  std::map<std::string, std::string> witnesses;
  std::vector<CheckResult> checks;
  std::vector<std::string> diagnostics;
  std::vector<std::pair<std::string, long>> timings_us;

  bool all_checks_pass() const {
    for (const auto& c : checks)
      if (c.applicable && !c.passed) return false;
    return true;
  }
};

struct AnalysisOptions {
  int dmax = 0;  // 0: use max(8, rt + 3)
  int max_r = 50;
  Semantics semantics = Semantics::local;
  bool with_t_table = true;
  int t_rows = 0;  // 0: all rows 1..n+1
  bool with_rees = true;
  bool with_top_equation = true;
  bool with_cross_validate = true;
};

template <class F>
struct AnalysisResult {
  DivisorData<F> data;
  std::optional<ReesPresentation<F>> pres_jacobian;
  std::optional<ReesPresentation<F>> pres_gradient;
  RelationTypeResult<F> rt_jacobian;
  RelationTypeResult<F> rt_gradient;
  std::optional<TopEquation<F>> top;
  AnalysisReport report;
};

namespace detail {

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, long>>& sink) : sink_(sink) {}

  template <class Fn>
  auto run(const std::string& stage, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record(stage, start);
    } else {
      auto value = fn();
      record(stage, start);
      return value;
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    sink_.emplace_back(stage, static_cast<long>(us));
  }
  std::vector<std::pair<std::string, long>>& sink_;
};

template <class F>
std::string short_poly_text(const Polynomial<F>& p, std::size_t max_terms = 8) {
  if (p.terms.size() <= max_terms) return render(p);
  Polynomial<F> head{p.ring,
                     std::vector<Term<F>>(p.terms.begin(),
                                          p.terms.begin() + static_cast<std::ptrdiff_t>(max_terms))};
  return render(head) + " + ... (" + std::to_string(p.terms.size()) + " terms)";
}

inline bool evidence_nonzero_at(const std::vector<DegreeEvidence>& ev, int d) {
  for (const auto& e : ev)
    if (e.degree == d) return !e.surviving.empty();
  return false;
}

}  // namespace detail

template <class F>
std::vector<CheckResult> cross_validate(DivisorAnalysis<F>& an, const AnalysisResult<F>& res);

/// The full pipeline: invariants, T-table, Rees presentations and relation
/// types, verdict, top equation, theorem cross-checks.
template <class F>
AnalysisResult<F> classify(DivisorData<F> data, const AnalysisOptions& opts = {}) {
  AnalysisResult<F> res;
  res.data = data;
  AnalysisReport& rep = res.report;
  rep.max_r = opts.max_r;
  rep.semantics = semantics_name(opts.semantics);
  detail::StageTimer timer(rep.timings_us);

  if (data.smooth) {
    rep.smooth = true;
    rep.r = rep.id = 1;
    rep.rn = 0;
    rep.rt_jacobian = rep.rt_gradient = 1;
    rep.euler_homogeneous = true;
    rep.regular_sequence = true;
    rep.verdict = Verdict::linear_jacobian_type;
    rep.diagnostics.push_back(
        "smooth germ (f not in m^2): Jacobian ideal is locally the unit ideal; "
        "analysis short-circuited to linear type");
    return res;
  }

  DivisorAnalysis<F> an(std::move(data), opts.semantics);
  const int n = an.data().n();

  std::optional<LocalWitness<F>> euler_witness;
  rep.euler_homogeneous = timer.run("euler", [&] { return an.euler_check(&euler_witness); });
  if (euler_witness) {
    rep.euler_unit_text = render(euler_witness->unit);
    rep.witnesses["euler_unit"] = rep.euler_unit_text;
  }
  rep.regular_sequence = timer.run("regular_sequence", [&] { return an.regular_sequence_check(); });

  try {
    rep.rn = timer.run("reduction_number", [&] { return an.reduction_number(opts.max_r); });
  } catch (const BoundExceeded& e) {
    rep.diagnostics.push_back(e.what());
  }
  try {
    rep.id = timer.run("integral_dependence", [&] { return an.id_of_f(opts.max_r); });
  } catch (const BoundExceeded& e) {
    rep.diagnostics.push_back(e.what());
  }
  try {
    rep.r = timer.run("power_membership", [&] { return an.r_of_f(opts.max_r); });
  } catch (const BoundExceeded& e) {
    rep.diagnostics.push_back(e.what());
  }

  if (opts.with_rees) {
    timer.run("rees_jacobian", [&] {
      std::vector<std::string> names;
      for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
      names.push_back("s");
      res.pres_jacobian = rees_ideal(an.data().jacobian.gens(), names);
      res.rt_jacobian = relation_type_local(*res.pres_jacobian);
    });
    rep.rt_jacobian = res.rt_jacobian.relation_type;
    rep.q_degrees_jacobian = res.pres_jacobian->degree_histogram();
    rep.evidence_jacobian = res.rt_jacobian.evidence;

    timer.run("rees_gradient", [&] {
      std::vector<std::string> names;
      for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
      res.pres_gradient = rees_ideal(an.data().gradient.gens(), names);
      res.rt_gradient = relation_type_local(*res.pres_gradient);
    });
    rep.rt_gradient = res.rt_gradient.relation_type;
    rep.q_degrees_gradient = res.pres_gradient->degree_histogram();
    rep.evidence_gradient = res.rt_gradient.evidence;
  }

  rep.dmax = opts.dmax > 0 ? opts.dmax : std::max(8, rep.rt_jacobian > 0 ? rep.rt_jacobian + 3 : 8);

  if (opts.with_t_table) {
    timer.run("t_table", [&] {
      int rows = opts.t_rows > 0 ? std::min(opts.t_rows, n + 1) : n + 1;
      rep.t_table.rows = rows;
      rep.t_table.dmax = rep.dmax;
      rep.t_table.zero.assign(static_cast<std::size_t>(rows),
                              std::vector<int>(static_cast<std::size_t>(rep.dmax), -1));
      for (int i = 1; i <= rows; ++i)
        for (int d = 1; d <= rep.dmax; ++d) {
          bool z = an.t_vanishes(i, d);
          rep.t_table.zero[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(d - 1)] =
              z ? 1 : 0;
          if (!z && an.last_t_witness())
            rep.witnesses["t_" + std::to_string(i) + "_" + std::to_string(d)] =
                detail::short_poly_text(*an.last_t_witness());
        }
    });
    rep.t_disclaimer = "T-vanishing verified for d <= " + std::to_string(rep.dmax) +
                       " only; the range carries no claim beyond it";
  }

  if (rep.rt_jacobian >= 1) {
    bool linear = rep.rt_jacobian == 1;
    bool expected = rep.rt_gradient == 1 && rep.rn >= 0 && rep.rt_jacobian == rep.rn + 1;
    rep.verdict = linear ? Verdict::linear_jacobian_type
                         : (expected ? Verdict::expected_jacobian_type : Verdict::neither);
  }

  if (opts.with_top_equation && res.pres_jacobian && rep.id >= 1) {
    try {
      timer.run("top_equation", [&] {
        res.top = extract_top_equation(*res.pres_jacobian, rep.id);
      });
      rep.has_top_equation = true;
      rep.top_degree = res.top->degree;
      rep.top_monic = res.top->unit == poly_one(an.data().ring);
      rep.top_equation_text = render(res.top->equation);
      rep.top_unit_text = render(res.top->unit);
    } catch (const UsageError& e) {
      rep.diagnostics.push_back(std::string("top equation: ") + e.what());
    }
  }

  if (opts.with_cross_validate) {
    timer.run("cross_validate", [&] { rep.checks = cross_validate(an, res); });
  }
  return res;
}

template <class F>
AnalysisResult<F> classify(const Polynomial<F>& f, const AnalysisOptions& opts = {}) {
  return classify(build_divisor(f), opts);
}

/// Theorem-backed consistency checks on a finished analysis. A failing
/// applicable check means an engine bug, not an interesting input.
template <class F>
std::vector<CheckResult> cross_validate(DivisorAnalysis<F>& an, const AnalysisResult<F>& res) {
  const AnalysisReport& rep = res.report;
  const int n = an.data().n();
  std::vector<CheckResult> checks;

  {
    CheckResult c{"rn_plus_one_le_relation_type", rep.rn >= 0 && rep.rt_jacobian >= 1, true, ""};
    if (c.applicable) {
      c.passed = rep.rn + 1 <= rep.rt_jacobian;
      c.detail = "rn+1 = " + std::to_string(rep.rn + 1) +
                 ", rt = " + std::to_string(rep.rt_jacobian);
    }
    checks.push_back(std::move(c));
  }
  {
    CheckResult c{"integral_dependence_is_rn_plus_one", rep.id >= 1 && rep.rn >= 0, true, ""};
    if (c.applicable) {
      c.passed = rep.id == rep.rn + 1;
      c.detail = "id = " + std::to_string(rep.id) + ", rn+1 = " + std::to_string(rep.rn + 1);
    }
    checks.push_back(std::move(c));
  }
  {
    CheckResult c{"power_membership_le_integral_dependence", rep.r >= 1 && rep.id >= 1, true, ""};
    if (c.applicable) {
      c.passed = rep.r <= rep.id;
      c.detail = "r = " + std::to_string(rep.r) + ", id = " + std::to_string(rep.id);
    }
    checks.push_back(std::move(c));
  }
  {
    // all T_{i,d} = 0 for i <= n on 2..dmax, with dmax beyond rt, forces the
    // expected relation type
    bool table_full = rep.t_table.rows >= n && rep.t_table.dmax >= 2;
    bool all_zero = table_full;
    if (table_full)
      for (int i = 1; i <= n && all_zero; ++i)
        for (int d = 2; d <= rep.t_table.dmax && all_zero; ++d)
          if (rep.t_table.at(i, d) != 1) all_zero = false;
    CheckResult c{"full_t_vanishing_forces_expected_type",
                  table_full && all_zero && rep.rt_jacobian >= 1 && rep.rn >= 0 &&
                      rep.t_table.dmax >= rep.rt_jacobian + 1,
                  true, ""};
    if (c.applicable) {
      c.passed = rep.rt_jacobian == rep.rn + 1;
      c.detail = "T_{i,d} = 0 for i <= " + std::to_string(n) + ", 2 <= d <= " +
                 std::to_string(rep.t_table.dmax) + "; rt = " + std::to_string(rep.rt_jacobian) +
                 ", rn+1 = " + std::to_string(rep.rn + 1);
    }
    checks.push_back(std::move(c));
  }
  {
    // degreewise agreement between the effective-relation quotient and the
    // surviving Rees equations, where the two-generator hypotheses hold
    CheckResult c{"effective_quotient_degree_agreement", false, true, ""};
    if (n == 2 && rep.t_table.rows >= 2 && res.pres_jacobian && rep.rt_jacobian >= 1 &&
        !an.data().partials[0].is_zero()) {
      Ideal<F> c12 = ideal_colon(an.data().chain[1], an.data().partials[1]);
      Ideal<F> c1f = ideal_colon(an.data().chain[1], an.data().f);
      if (an.subset(c12, c1f)) {
        c.applicable = true;
        std::string detail;
        for (int d = 2; d <= rep.t_table.dmax; ++d) {
          if (rep.t_table.at(2, d) != 1) continue;
          bool e_nonzero = detail::evidence_nonzero_at(res.rt_jacobian.evidence, d);
          bool quot_vanishes = an.effective_quotient_vanishes(d);
          if (e_nonzero == quot_vanishes) {
            c.passed = false;
            detail += "d=" + std::to_string(d) + ": survivors=" +
                      (e_nonzero ? "yes" : "no") + " but quotient " +
                      (quot_vanishes ? "vanishes" : "does not vanish") + "; ";
          } else {
            detail += "d=" + std::to_string(d) + ": ok; ";
          }
        }
        c.detail = detail;
      }
    }
    checks.push_back(std::move(c));
  }
  {
    CheckResult c{"linear_type_implies_expected_type", rep.rt_jacobian == 1, true, ""};
    if (c.applicable) {
      c.passed = rep.rn == 0 && rep.rt_gradient == 1;
      c.detail = "rt = 1 with rn = " + std::to_string(rep.rn) +
                 ", rt(J) = " + std::to_string(rep.rt_gradient);
    }
    checks.push_back(std::move(c));
  }
  {
    // monic-in-s shape of the top equation at degree id(f)
    CheckResult c{"top_equation_monic_in_s", res.top.has_value() && res.pres_jacobian.has_value(),
                  true, ""};
    if (c.applicable) {
      const auto& pres = *res.pres_jacobian;
      const auto& top = *res.top;
      int sdeg = s_degree(pres, top.equation);
      Polynomial<F> lead = s_coefficient(pres, top.equation, top.degree);
      std::vector<int> down = name_map(pres.pres, pres.base);
      for (int i = 0; i < pres.pres_arity; ++i) down[static_cast<std::size_t>(i)] = -1;
      bool lead_is_unit = false;
      try {
        lead_is_unit = transport(lead, pres.base, down) == top.unit;
      } catch (const UsageError&) {
        lead_is_unit = false;  // lead involved presentation variables
      }
      c.passed = sdeg == top.degree && lead_is_unit &&
                 !pres.base->field.is_zero(evaluate_at_origin(top.unit));
      c.detail = "s-degree " + std::to_string(sdeg) + " of " + std::to_string(top.degree) +
                 (rep.top_monic ? ", unit 1" : ", unit " + rep.top_unit_text);
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace jacrees
