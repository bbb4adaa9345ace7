// One line per acceptance criterion: PASS/FAIL, runtime against its limit,
// and a short detail. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "laxwb/cocycle/cocycle.hpp"
#include "laxwb/errors.hpp"
#include "laxwb/laxalg/membership.hpp"

using namespace laxwb;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Accumulates failures from several checks into one outcome.
struct Checks {
  Outcome out;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      out.passed = false;
      notes.push_back("FAILED " + what);
    }
  }
  void report(const PropertyReport& r, const std::string& what) {
    std::string text = what + " (" + std::to_string(r.checked) + " checked)";
    if (!r.ok()) text += ": " + r.violations.front();
    require(r.ok(), text);
    if (r.ok()) notes.push_back(text);
  }
  void note(const std::string& s) { notes.push_back(s); }

  Outcome done() {
    std::ostringstream s;
    for (std::size_t i = 0; i < notes.size(); ++i) s << (i ? "; " : "") << notes[i];
    out.detail = s.str();
    return out;
  }
};

CurvePoint pt(long x, long y) { return CurvePoint::finite(Scalar(x), Scalar(y)); }

AlgebraSpec genus0(const std::string& kind) {
  return {Curve::projective_line(), CurvePoint::finite(Scalar(0)), CurvePoint::infinity(), AlgebraType::parse(kind, 2), {}};
}

// The default configuration: y^2 = x^3 + 17, P+ = infinity, P- = (-2, 3).
AlgebraSpec genus1(const std::string& kind) {
  static const Curve curve = Curve::elliptic(Scalar(0), Scalar(17));
  const Scalar i = Scalar::i();
  if (kind == "so")
    return {curve, CurvePoint::infinity(), pt(-2, 3), AlgebraType::parse("so", 3),
            {{pt(-1, 4), {Scalar(1), i, Scalar(0)}}, {pt(4, 9), {Scalar(1), Scalar(0), i}}, {pt(8, 23), {Scalar(0), Scalar(1), i}}}};
  return {curve, CurvePoint::infinity(), pt(-2, 3), AlgebraType::parse(kind, kind == "sp" ? 1 : 2),
          {{pt(-1, 4), {Scalar(1), Scalar(2)}}, {pt(4, 9), {Scalar(1), Scalar(-1)}}}};
}

constexpr int kLo = -4, kHi = 4;

// 1. Genus 0, omega = 0: gamma1(X_n^r, X_m^s) = m tr(x_r x_s) delta_{n+m,0}.
Outcome classical_reduction() {
  Checks c;
  for (const std::string kind : {"gl", "sl"}) {
    const AlgebraSpec spec = genus0(kind);
    const LaxAlgebra lax(spec);
    const ConnectionForm omega = build_connection_form(spec);
    c.require(omega.F.is_zero(), kind + "(2): omega vanishes");
    const CocycleEvaluator gamma(lax, CocycleKind::gamma1, omega);
    int checked = 0, mismatches = 0;
    for (int n = -8; n <= 8; ++n)
      for (int m = -8; m <= 8; ++m)
        for (int r = 0; r < lax.dimension(); ++r)
          for (int s = 0; s < lax.dimension(); ++s) {
            const ScalarMatrix& x = lax.element(n, r).leading;
            const ScalarMatrix& y = lax.element(m, s).leading;
            const Scalar expected = n + m == 0 ? Scalar(m) * (x * y).trace() : Scalar(0);
            ++checked;
            if (gamma.on_basis({n, r}, {m, s}) != expected) ++mismatches;
          }
    c.require(mismatches == 0, kind + "(2): " + std::to_string(mismatches) + " mismatches");
    c.note(kind + "(2) " + std::to_string(checked) + " pairs");
  }
  return c.done();
}

// 2. Genus-1 gl(2) construction on the default window.
Outcome genus1_construction() {
  Checks c;
  const LaxAlgebra lax(genus1("gl"));
  c.report(check_graded_basis(lax, kLo, kHi), "dim 4 and membership per degree");
  c.report(check_closure(lax, kLo, kHi), "closure");
  const StructureConstants sc = lax.structure_constants(kLo, kHi);
  c.require(sc.band_low >= 0 && sc.band_high <= 1, "band m+k <= h <= m+k+1: observed h - m - k in [" +
                                                       std::to_string(sc.band_low) + ", " +
                                                       std::to_string(sc.band_high) + "]");
  c.report(check_jacobi(lax, sample_triples(lax.dimension(), kLo, kHi, 20, 1)), "Jacobi");
  return c.done();
}

void cocycle_suite(Checks& c, const LaxAlgebra& lax, const ConnectionForm& omega, CocycleKind kind) {
  const std::string name = lax.spec().algebra.name() + " " + cocycle_name(kind);
  const CocycleEvaluator gamma(lax, kind, omega);
  const CocycleTable table = cocycle_table(gamma, kLo, kHi);
  const auto triples = sample_triples(lax.dimension(), kLo, kHi, 20, 3);
  c.report(check_antisymmetry(table), name + " antisymmetry");
  c.report(check_cocycle_condition(gamma, triples), name + " cocycle condition");
  int positive = 0;
  for (const auto& [key, v] : table.entries)
    if (key.first.first + key.second.first > 0) ++positive;
  c.require(positive == 0, name + ": " + std::to_string(positive) + " nonzero entries at positive level");
  const RecursionReport rec = recursion_identities(table, lax.dimension());
  c.report(rec.level_zero, name + " gamma(X_n, X_-n) = n gamma(X_1, X_-1), n in [1,4]");
  if (table.empty_band) {
    c.note(name + " vanishes on the window");
    return;
  }
  try {
    const BilinearFormOnG psi = extract_psi(table, lax.spec().algebra);
    c.require(psi.symmetric && psi.invariant, name + " psi symmetric and invariant");
    if (lax.spec().algebra.kind() == AlgebraKind::sl) {
      c.require(psi.trace_multiple.has_value(), name + " psi is a multiple of tr");
      if (psi.trace_multiple) c.note(name + " psi = " + psi.trace_multiple->str() + " tr");
    }
  } catch (const PositiveLevelNonzero& e) {
    c.require(false, name + " psi: " + e.what());
  }
}

// 3. Cocycle suite on genus-1 gl(2) and sl(2).
Outcome cocycle_properties() {
  Checks c;
  for (const std::string kind : {"gl", "sl"}) {
    const AlgebraSpec spec = genus1(kind);
    const LaxAlgebra lax(spec);
    const ConnectionForm omega = build_connection_form(spec);
    cocycle_suite(c, lax, omega, CocycleKind::gamma1);
    cocycle_suite(c, lax, omega, CocycleKind::gamma2);
  }
  return c.done();
}

// 4. L-invariance, module grading and the derivation identity on gl(2).
Outcome module_structure() {
  Checks c;
  const AlgebraSpec spec = genus1("gl");
  const LaxAlgebra lax(spec);
  const ConnectionForm omega = build_connection_form(spec);
  const ModuleAction action(lax, omega);
  const std::vector<int> ks{-1, 0, 1};
  const auto pairs = level_pairs(lax.dimension(), kLo, kHi, -2, 2);
  for (CocycleKind kind : {CocycleKind::gamma1, CocycleKind::gamma2}) {
    const CocycleEvaluator gamma(lax, kind, omega);
    c.report(check_l_invariance(form_of(gamma), action, ks, pairs), cocycle_name(kind) + " L-invariance");
  }
  std::vector<GradedIndex> elements;
  for (int m = kLo; m <= kHi; ++m)
    for (int r = 0; r < lax.dimension(); ++r) elements.push_back({m, r});
  c.report(check_module_grading(action, ks, elements), "module grading");
  c.report(check_derivation(action, ks, sample_triples(lax.dimension(), kLo, kHi, 20, 4)), "derivation");
  return c.done();
}

// 5. Residues of the gamma1 integrand on all pairs with degrees in [-2, 2].
Outcome residues() {
  Checks c;
  const AlgebraSpec spec = genus1("gl");
  const LaxAlgebra lax(spec);
  const ConnectionForm omega = build_connection_form(spec);
  const CocycleEvaluator gamma(lax, CocycleKind::gamma1, omega);
  int pairs = 0, weak_bad = 0, total_bad = 0, plus_bad = 0;
  for (int m = -2; m <= 2; ++m)
    for (int k = -2; k <= 2; ++k)
      for (int r = 0; r < lax.dimension(); ++r)
        for (int s = 0; s < lax.dimension(); ++s) {
          const ResidueReport rep = gamma1_residues(lax.element(m, r).value, lax.element(k, s).value, omega, spec);
          ++pairs;
          for (const Scalar& w : rep.at_weak)
            if (!w.is_zero()) ++weak_bad;
          if (!rep.total().is_zero()) ++total_bad;
          if (rep.at_plus != gamma.on_basis({m, r}, {k, s})) ++plus_bad;
        }
  c.require(weak_bad == 0, std::to_string(weak_bad) + " nonzero weak residues");
  c.require(total_bad == 0, std::to_string(total_bad) + " nonzero residue sums");
  c.require(plus_bad == 0, std::to_string(plus_bad) + " P+ residues disagreeing with gamma1");
  c.note(std::to_string(pairs) + " pairs");
  return c.done();
}

bool skew(const ScalarMatrix& x) { return (x.transpose() + x).is_zero(); }

// 6a. so(3): closure, skew expansions at P+ and the weak points, dim 3.
Outcome so3() {
  Checks c;
  const AlgebraSpec spec = genus1("so");
  const LaxAlgebra lax(spec);
  c.report(check_graded_basis(lax, kLo, kHi), "dim 3 and membership per degree");
  c.report(check_closure(lax, kLo, kHi), "closure");
  int coefficients = 0, bad = 0;
  for (int m = kLo; m <= kHi; ++m)
    for (const auto& e : lax.graded_basis(m)) {
      if (!(e.value.transpose() + e.value).is_zero()) ++bad;
      const SeriesMatrix at_plus = e.value.is_zero() ? SeriesMatrix{} : expand_at(e.value, spec.p_plus, m + 6);
      for (int j = at_plus.valuation(); j < at_plus.precision(); ++j, ++coefficients)
        if (!skew(at_plus.coefficient(j))) ++bad;
      for (const auto& w : verify_membership(e.value, spec).points)
        for (const auto& [order, coeff] : w.coefficients) {
          ++coefficients;
          if (!skew(coeff)) ++bad;
        }
    }
  c.require(bad == 0, std::to_string(bad) + " expansion coefficients not skew");
  c.note(std::to_string(coefficients) + " expansion coefficients skew");
  return c.done();
}

// 6b. sp(2): membership oracle (order-2 weak poles) and closure.
Outcome sp2() {
  Checks c;
  const LaxAlgebra lax(genus1("sp"));
  c.report(check_graded_basis(lax, kLo, kHi), "dim 3 and membership per degree");
  int nu = 0;
  for (int m = kLo; m <= kHi; ++m)
    for (const auto& e : lax.graded_basis(m))
      for (const auto& w : verify_membership(e.value, lax.spec()).points)
        if (w.active && w.nu) ++nu;
  c.note(std::to_string(nu) + " nu witnesses recovered");
  c.report(check_closure(lax, kLo, kHi), "closure");
  return c.done();
}

// 7. gamma1 and gamma2 independent on gl(2); gamma2 vanishes on sl(2).
Outcome independence() {
  Checks c;
  const AlgebraSpec gl = genus1("gl");
  const LaxAlgebra lax(gl);
  const ConnectionForm omega = build_connection_form(gl);
  const CocycleTable g1 = cocycle_table(CocycleEvaluator(lax, CocycleKind::gamma1, omega), kLo, kHi);
  const CocycleTable g2 = cocycle_table(CocycleEvaluator(lax, CocycleKind::gamma2, omega), kLo, kHi);
  const auto witness = independence_witness(g1, g2);
  c.require(witness.has_value(), "independence witness on gl(2)");
  if (witness) {
    const auto& [a, b] = witness->pair;
    c.note("witness (X_" + std::to_string(a.first) + "^" + std::to_string(a.second) + ", X_" + std::to_string(b.first) +
           "^" + std::to_string(b.second) + "): gamma1 = " + witness->first.str() + ", gamma2 = " + witness->second.str());
  }
  const AlgebraSpec sl = genus1("sl");
  const LaxAlgebra lsl(sl);
  const ConnectionForm osl = build_connection_form(sl);
  const CocycleTable s1 = cocycle_table(CocycleEvaluator(lsl, CocycleKind::gamma1, osl), kLo, kHi);
  const CocycleTable s2 = cocycle_table(CocycleEvaluator(lsl, CocycleKind::gamma2, osl), kLo, kHi);
  c.require(s2.entries.empty(), "gamma2 on sl(2) identically zero (" + std::to_string(s2.entries.size()) + " nonzero)");
  c.require(!s1.entries.empty(), "gamma1 on sl(2) nonzero");
  c.note("sl(2): gamma2 has no nonzero entry, gamma1 has " + std::to_string(s1.entries.size()));
  return c.done();
}

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "classical reduction", 5, classical_reduction},
      {"2", "genus-1 gl(2) construction", 120, genus1_construction},
      {"3", "cocycle suite gl(2), sl(2)", 180, cocycle_properties},
      {"4", "L-invariance and module structure", 120, module_structure},
      {"5", "weak residues and residue sum", 60, residues},
      {"6a", "so(3) appendix algebra", 120, so3},
      {"6b", "sp(2) appendix algebra", 120, sp2},
      {"7", "two-dimensionality witness", 60, independence},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < cr.limit_seconds;
    const bool ok = out.passed && in_time;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.title << " (" << std::fixed << std::setprecision(1)
              << seconds << " s, limit " << cr.limit_seconds << " s" << (in_time ? "" : ", TIME EXCEEDED") << "): "
              << out.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
