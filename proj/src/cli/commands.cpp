#include "laxwb/cli/commands.hpp"

#include "laxwb/cli/serialize.hpp"
#include "laxwb/errors.hpp"

namespace laxwb {

using nlohmann::json;

namespace {

constexpr int kTriples = 20;
constexpr int kResiduePairs = 12;
const std::vector<int> kFields{-1, 0, 1};

// Everything derived from a config that more than one command needs.
struct Context {
  WorkbenchConfig config;
  AlgebraSpec spec;
  LaxAlgebra lax;
  ConnectionForm omega;

  explicit Context(const WorkbenchConfig& c)
      : config(c), spec(to_spec(c)), lax(spec), omega(build_connection_form(spec, c.p_minus_pole_budget)) {}
};

json header(const std::string& command, const Context& ctx) {
  const Curve& curve = ctx.spec.curve;
  return {{"command", command},
          {"config", config_to_json(ctx.config)},
          {"provenance", {{"config_hash", config_hash(ctx.config)}, {"version", workbench_version()}}},
          {"metadata",
           {{"curve", curve.str()},
            {"algebra", ctx.spec.algebra.name()},
            {"dimension", ctx.lax.dimension()},
            {"uniformizer_at_p_plus", curve.uniformizer_name(ctx.spec.p_plus)},
            {"uniformizer_at_p_minus", curve.uniformizer_name(ctx.spec.p_minus)}}}};
}

json degree_json(const LaxAlgebra& lax, int m) {
  const DegreeInfo info = lax.degree_info(m);
  json elements = json::array();
  for (const auto& e : lax.graded_basis(m)) {
    elements.push_back({{"index", e.index},
                        {"leading", to_json(e.leading)},
                        {"value", to_json(e.value)},
                        {"p_minus_pole", e.p_minus_pole}});
  }
  return {{"degree", m},
          {"relaxed", !info.generic()},
          {"space_dimension", info.space_dimension},
          {"dimension", info.coset_dimension},
          {"elements", elements}};
}

json basis_json(const Context& ctx, int lo, int hi) {
  json out = json::array();
  for (int m = lo; m <= hi; ++m) out.push_back(degree_json(ctx.lax, m));
  return out;
}

json connection_json(const Context& ctx, const ConnectionReport& rep) {
  const int genus = ctx.spec.curve.genus();
  json points = json::array();
  for (const auto& p : rep.points) {
    json item{{"gamma", to_json(p.gamma, genus)}, {"active", p.active}, {"residue", to_json(p.residue)}};
    if (p.active) {
      item["beta"] = to_json(p.beta);
      item["kappa"] = to_json(p.kappa);
    }
    points.push_back(std::move(item));
  }
  json fields = json::array();
  for (int k : kFields) {
    const GradedVectorField e = vector_field_basis(ctx.spec, k);
    fields.push_back({{"degree", k}, {"h", e.value.h.str()}, {"relaxed", e.relax != 0}});
  }
  return {{"values_in", ctx.omega.algebra.name()},
          {"p_minus_pole_budget", ctx.omega.p_minus_pole},
          {"F", to_json(ctx.omega.F)},
          {"weak_points", points},
          {"vector_fields", fields},
          {"check", {{"passed", rep.ok()}, {"violations", rep.violations}}}};
}

// Every table entry at a positive level must vanish.
PropertyReport check_positive_levels(const CocycleTable& t) {
  PropertyReport rep;
  rep.checked = static_cast<int>(t.entries.size());
  for (const auto& [key, v] : t.entries)
    if (key.first.first + key.second.first > 0)
      rep.violations.push_back("nonzero value " + v.str() + " at level " +
                               std::to_string(key.first.first + key.second.first));
  return rep;
}

// Residues of the gamma1 integrand on sampled pairs: zero at every weak
// point, total zero, and the value at P+ agrees with the evaluator.
PropertyReport check_residues(const Context& ctx, const CocycleEvaluator& gamma, const std::vector<Triple>& triples) {
  PropertyReport rep;
  for (const auto& [a, b, c] : triples) {
    (void)c;
    ++rep.checked;
    const ResidueReport r = gamma1_residues(ctx.lax.element(a.first, a.second).value,
                                            ctx.lax.element(b.first, b.second).value, ctx.omega, ctx.spec);
    const std::string where = "(X_" + std::to_string(a.first) + "^" + std::to_string(a.second) + ", X_" +
                              std::to_string(b.first) + "^" + std::to_string(b.second) + ")";
    for (std::size_t s = 0; s < r.at_weak.size(); ++s)
      if (!r.at_weak[s].is_zero())
        rep.violations.push_back("residue " + r.at_weak[s].str() + " at weak point " + std::to_string(s) + " on " + where);
    if (!r.total().is_zero()) rep.violations.push_back("residues sum to " + r.total().str() + " on " + where);
    if (r.at_plus != gamma.on_basis(a, b)) rep.violations.push_back("residue at P+ disagrees with gamma on " + where);
  }
  return rep;
}

struct Suite {
  json sections = json::object();
  bool passed = true;

  void add(const std::string& name, const PropertyReport& r) {
    sections[name] = to_json(r);
    passed = passed && r.ok();
  }
};

json cocycle_suite(const Context& ctx, CocycleKind kind, const CocycleTable& table, Suite& suite) {
  const std::string prefix = cocycle_name(kind) + ".";
  const int dim = ctx.lax.dimension();
  const int lo = ctx.config.window_min, hi = ctx.config.window_max;
  const unsigned seed = ctx.config.seed;
  const CocycleEvaluator gamma(ctx.lax, kind, ctx.omega);
  const GradedForm form = form_of(table, gamma);
  const auto triples = sample_triples(dim, lo, hi, kTriples, seed + 2);

  suite.add(prefix + "antisymmetry", check_antisymmetry(table));
  suite.add(prefix + "cocycle_condition", check_cocycle_condition(gamma, triples));
  suite.add(prefix + "cocycle_condition_structure_constants", check_cocycle_condition(ctx.lax, form, triples));
  suite.add(prefix + "positive_levels_vanish", check_positive_levels(table));
  const RecursionReport rec = recursion_identities(table, dim);
  suite.add(prefix + "recursion_above_band", rec.above_band);
  suite.add(prefix + "recursion_level_zero", rec.level_zero);
  suite.add(prefix + "recursion_symmetry", rec.symmetry);
  suite.add(prefix + "recursion_zero_degree", rec.zero_degree);
  const ModuleAction action(ctx.lax, ctx.omega);
  suite.add(prefix + "l_invariance", check_l_invariance(form, action, kFields, level_pairs(dim, lo, hi, -2, 2)));
  suite.add(prefix + "extension_jacobi", check_extension_jacobi(ctx.lax, form, triples));

  json out{{"band", table.empty_band ? json(nullptr) : json{{"low", table.band_low}, {"high", table.band_high}}},
           {"nonzero_entries", table.entries.size()}};
  if (lo <= -1 && hi >= 1) {
    PropertyReport r;
    r.checked = 2;
    try {
      const BilinearFormOnG psi = extract_psi(table, ctx.spec.algebra);
      if (!psi.symmetric) r.violations.push_back("psi is not symmetric");
      if (!psi.invariant) r.violations.push_back("psi is not invariant");
      out["psi"] = to_json(psi);
    } catch (const PositiveLevelNonzero& e) {
      r.violations.push_back(e.what());
    }
    suite.add(prefix + "psi", r);
  }
  return out;
}

}  // namespace

std::string workbench_version() { return "laxwb 1.0.0"; }

std::string render(const Report& report) { return report.document.dump(2) + "\n"; }

Report cmd_verify(const WorkbenchConfig& config) {
  const Context ctx(config);
  const int dim = ctx.lax.dimension();
  const int lo = config.window_min, hi = config.window_max;
  Suite suite;

  suite.add("graded_basis", check_graded_basis(ctx.lax, lo, hi));
  suite.add("closure", check_closure(ctx.lax, lo, hi));
  if (ctx.spec.algebra.kind() == AlgebraKind::gl) suite.add("splitting", check_splitting(ctx.lax, lo, hi));
  suite.add("jacobi", check_jacobi(ctx.lax, sample_triples(dim, lo, hi, kTriples, config.seed)));
  const StructureConstants sc = ctx.lax.structure_constants(lo, hi);

  const ConnectionReport conn = verify_connection_form(ctx.omega, ctx.spec);
  PropertyReport conn_rep;
  conn_rep.checked = static_cast<int>(conn.points.size()) + 1;
  conn_rep.violations = conn.violations;
  suite.add("connection", conn_rep);

  std::vector<GradedIndex> elements;
  for (int m = lo; m <= hi; ++m)
    for (int r = 0; r < dim; ++r) elements.push_back({m, r});
  const ModuleAction action(ctx.lax, ctx.omega);
  suite.add("module_grading", check_module_grading(action, kFields, elements));
  suite.add("derivation", check_derivation(action, kFields, sample_triples(dim, lo, hi, kTriples, config.seed + 1)));

  json results{{"structure_constant_band", {{"low", sc.band_low}, {"high", sc.band_high}}},
               {"connection_p_minus_pole_budget", ctx.omega.p_minus_pole}};
  json degrees = json::array();
  for (int m = lo; m <= hi; ++m) {
    const DegreeInfo info = ctx.lax.degree_info(m);
    degrees.push_back({{"degree", m}, {"dimension", info.coset_dimension}, {"relaxed", !info.generic()}});
  }
  results["degrees"] = degrees;

  const CocycleEvaluator g1(ctx.lax, CocycleKind::gamma1, ctx.omega);
  const CocycleEvaluator g2(ctx.lax, CocycleKind::gamma2, ctx.omega);
  const CocycleTable t1 = cocycle_table(g1, lo, hi);
  const CocycleTable t2 = cocycle_table(g2, lo, hi);
  results["gamma1"] = cocycle_suite(ctx, CocycleKind::gamma1, t1, suite);
  results["gamma2"] = cocycle_suite(ctx, CocycleKind::gamma2, t2, suite);
  suite.add("residues", check_residues(ctx, g1, sample_triples(dim, lo, hi, kResiduePairs, config.seed + 3)));

  const AlgebraKind kind = ctx.spec.algebra.kind();
  if (kind == AlgebraKind::gl || kind == AlgebraKind::s) {
    const auto w = independence_witness(t1, t2);
    PropertyReport r;
    r.checked = 1;
    if (!w) {
      r.violations.push_back("no pair separates the gamma1 and gamma2 tables");
    } else {
      results["independence_witness"] = {{"a", {w->pair.first.first, w->pair.first.second}},
                                         {"b", {w->pair.second.first, w->pair.second.second}},
                                         {"gamma1", w->first.str()},
                                         {"gamma2", w->second.str()}};
    }
    suite.add("gamma_tables_independent", r);
  } else {
    PropertyReport r;
    r.checked = 1;
    if (!t2.entries.empty()) r.violations.push_back("gamma2 has nonzero values on a traceless algebra");
    suite.add("gamma2_vanishes", r);
  }

  json doc = header("verify", ctx);
  results["properties"] = suite.sections;
  results["passed"] = suite.passed;
  doc["results"] = results;
  return {doc, suite.passed};
}

Report cmd_basis(const WorkbenchConfig& config, std::optional<int> degree) {
  const Context ctx(config);
  json doc = header("basis", ctx);
  doc["results"] = {{"degrees", degree ? basis_json(ctx, *degree, *degree) : basis_json(ctx, config.window_min, config.window_max)}};
  return {doc, true};
}

Report cmd_brackets(const WorkbenchConfig& config) {
  const Context ctx(config);
  json doc = header("brackets", ctx);
  doc["results"] = {{"structure_constants", to_json(ctx.lax.structure_constants(config.window_min, config.window_max))}};
  return {doc, true};
}

Report cmd_cocycle(const WorkbenchConfig& config, CocycleKind kind) {
  const Context ctx(config);
  const CocycleTable t = cocycle_table(CocycleEvaluator(ctx.lax, kind, ctx.omega), config.window_min, config.window_max);
  json doc = header("cocycle", ctx);
  doc["results"] = {{"table", to_json(t)}};
  return {doc, true};
}

Report cmd_connection(const WorkbenchConfig& config) {
  const Context ctx(config);
  const ConnectionReport rep = verify_connection_form(ctx.omega, ctx.spec);
  json doc = header("connection", ctx);
  doc["results"] = {{"connection", connection_json(ctx, rep)}};
  return {doc, rep.ok()};
}

Report cmd_export(const WorkbenchConfig& config) {
  const Context ctx(config);
  const int lo = config.window_min, hi = config.window_max;
  const ConnectionReport rep = verify_connection_form(ctx.omega, ctx.spec);
  const StructureConstants sc = ctx.lax.structure_constants(lo, hi);
  const CocycleTable t1 = cocycle_table(CocycleEvaluator(ctx.lax, CocycleKind::gamma1, ctx.omega), lo, hi);
  const CocycleTable t2 = cocycle_table(CocycleEvaluator(ctx.lax, CocycleKind::gamma2, ctx.omega), lo, hi);
  const CentralExtensionTable ext = central_extension(sc, t1);
  json central = json::array();
  for (const auto& [key, v] : ext.central)
    central.push_back({{"a", {key.first.first, key.first.second}}, {"b", {key.second.first, key.second.second}}, {"value", v.str()}});
  json doc = header("export", ctx);
  doc["results"] = {{"basis", basis_json(ctx, lo, hi)},
                    {"structure_constants", to_json(sc)},
                    {"connection", connection_json(ctx, rep)},
                    {"gamma1", to_json(t1)},
                    {"gamma2", to_json(t2)},
                    {"central_extension", {{"degree_of_t", 0}, {"cocycle", "gamma1"}, {"central_column", central}}}};
  return {doc, rep.ok()};
}

}  // namespace laxwb
