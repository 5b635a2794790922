#include "homlie/commands.hpp"
#include "homlie/dim2_classification.hpp"
#include "homlie/representations_phase_space.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace homlie {

namespace {

using json = nlohmann::ordered_json;

template <class S>
json vector_to_json(const Vector<S>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

const MetricForm& need_metric(const std::optional<MetricForm>& g, const std::string& what) {
  if (!g) throw InputError(what + " needs a metric");
  return *g;
}

const RationalMatrix& need_J(const BoundInstance& inst, const std::string& what) {
  if (!inst.J) throw InputError(what + " needs J");
  return *inst.J;
}

const RationalTensor& need_product(const BoundInstance& inst, const std::string& what) {
  if (!inst.product) throw InputError(what + " needs a product");
  return *inst.product;
}

std::optional<MetricForm> metric_of(const BoundInstance& inst) {
  if (!inst.metric) return std::nullopt;
  return MetricForm(*inst.metric);
}

SymplecticForm omega_of(const BoundInstance& inst, const std::string& what) {
  if (!inst.omega) throw InputError(what + " needs omega");
  return SymplecticForm(*inst.omega);
}

Report start_report(const BoundInstance& inst) {
  Report r;
  r.instance = inst.name;
  r.bindings = inst.bindings;
  return r;
}

std::vector<std::string> product_lines(const RationalTensor& t, const std::vector<std::string>& names) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const RationalVector v = t.on_basis(i, j);
      if (!is_zero_vector(v)) lines.push_back(names[i] + "·" + names[j] + " = " + format_combination(v, names));
    }
  if (lines.empty()) lines.push_back("all products are zero");
  return lines;
}

using CheckFn = std::function<Check(const BoundInstance&)>;

struct CheckSpec {
  std::string name;
  std::function<bool(const BoundInstance&)> applicable;
  CheckFn run;
};

bool always(const BoundInstance&) { return true; }
bool has_metric(const BoundInstance& i) { return i.metric.has_value(); }
bool has_omega(const BoundInstance& i) { return i.omega.has_value(); }
bool has_J(const BoundInstance& i) { return i.J.has_value(); }
bool has_product(const BoundInstance& i) { return i.product.has_value(); }

const std::vector<CheckSpec>& check_table() {
  static const std::vector<CheckSpec> table{
      {"antisymmetry", always, [](const BoundInstance& i) { return check_antisymmetric(i.bracket); }},
      {"morphism", always, [](const BoundInstance& i) { return check_morphism(i.bracket, i.phi); }},
      {"hom-jacobi", always, [](const BoundInstance& i) { return check_hom_jacobi(i.bracket, i.phi); }},
      {"jacobi", always, [](const BoundInstance& i) { return check_jacobi(i.bracket); }},
      {"pseudo-riemannian", has_metric,
       [](const BoundInstance& i) { return check_pseudo_riemannian(need_metric(metric_of(i), "pseudo-riemannian"), i.phi); }},
      {"phi-selfadjoint", has_metric,
       [](const BoundInstance& i) { return check_phi_selfadjoint(need_metric(metric_of(i), "phi-selfadjoint"), i.phi); }},
      {"symplectic", has_omega,
       [](const BoundInstance& i) { return check_symplectic(omega_of(i, "symplectic"), i.bracket, i.phi); }},
      {"almost-complex", has_J, [](const BoundInstance& i) { return check_almost_complex(need_J(i, "almost-complex"), i.phi); }},
      {"hermitian", [](const BoundInstance& i) { return has_J(i) && has_metric(i); },
       [](const BoundInstance& i) {
         return check_hermitian_compatibility(need_J(i, "hermitian"), need_metric(metric_of(i), "hermitian"), i.phi);
       }},
      {"nijenhuis", has_J,
       [](const BoundInstance& i) -> Check {
         const RationalTensor N = nijenhuis_tensor(i.bracket, i.phi, need_J(i, "nijenhuis"));
         for (std::size_t a = 0; a < N.dim(); ++a)
           for (std::size_t b = a + 1; b < N.dim(); ++b)
             if (!is_zero_vector(N.on_basis(a, b)))
               return make_violation<Rational>("nijenhuis", {a, b}, N.on_basis(a, b), RationalVector(N.dim()));
         return Check::pass();
       }},
      {"kahler", [](const BoundInstance& i) { return has_J(i) && has_metric(i); },
       [](const BoundInstance& i) {
         const RationalTensor lc = levi_civita_product(i.bracket, i.phi, need_metric(metric_of(i), "kahler"));
         return check_kahler(lc, i.phi, need_J(i, "kahler"));
       }},
      {"left-symmetric", has_product,
       [](const BoundInstance& i) { return check_hom_left_symmetric(need_product(i, "left-symmetric"), i.phi); }},
      {"lie-admissible", has_product,
       [](const BoundInstance& i) { return check_hom_lie_admissible(need_product(i, "lie-admissible"), i.phi); }},
      {"bianchi", has_product, [](const BoundInstance& i) { return check_hom_bianchi(need_product(i, "bianchi"), i.phi); }},
      {"torsion", has_product, [](const BoundInstance& i) { return check_torsion(need_product(i, "torsion"), i.bracket); }},
      {"metric-compatibility", [](const BoundInstance& i) { return has_product(i) && has_metric(i); },
       [](const BoundInstance& i) {
         return check_metric_compatibility(need_product(i, "metric-compatibility"),
                                           need_metric(metric_of(i), "metric-compatibility"), i.phi);
       }},
  };
  return table;
}

const CheckSpec& find_check(const std::string& name) {
  for (const auto& spec : check_table())
    if (spec.name == name) return spec;
  throw InputError("unknown check '" + name + "'");
}

}  // namespace

void Report::add(const std::string& check, const Check& result) {
  verdicts.emplace_back(check, result.passed());
  if (!result) {
    const Violation& v = result.violation();
    counterexamples.push_back({{"check", check},
                               {"kind", v.kind},
                               {"witness", v.witness},
                               {"lhs", vector_to_json(v.lhs)},
                               {"rhs", vector_to_json(v.rhs)}});
  }
}

void Report::add(const std::string& check, bool passed) { verdicts.emplace_back(check, passed); }

bool Report::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

nlohmann::ordered_json Report::to_json() const {
  json out;
  out["instance"] = instance;
  out["bindings"] = json::object();
  for (const auto& [name, value] : bindings) out["bindings"][name] = value.str();
  out["verdicts"] = json::object();
  for (const auto& [name, ok] : verdicts) out["verdicts"][name] = ok ? "pass" : "fail";
  out["counterexamples"] = counterexamples;
  out["derived"] = derived;
  return out;
}

std::string Report::to_text(bool color) const {
  const std::string green = color ? "\033[32m" : "";
  const std::string red = color ? "\033[31m" : "";
  const std::string reset = color ? "\033[0m" : "";
  std::string out = "instance: " + (instance.empty() ? std::string("(unnamed)") : instance);
  if (!bindings.empty()) {
    out += " (";
    bool first = true;
    for (const auto& [name, value] : bindings) {
      out += (first ? "" : ", ") + name + "=" + value.str();
      first = false;
    }
    out += ")";
  }
  out += "\n";
  for (const auto& [name, ok] : verdicts) {
    out += "  " + (ok ? green + "PASS" : red + "FAIL") + reset + "  " + name;
    if (!ok)
      for (const auto& c : counterexamples)
        if (c["check"] == name) {
          out += ": " + c["kind"].get<std::string>() + " at (";
          for (std::size_t k = 0; k < c["witness"].size(); ++k)
            out += (k ? "," : "") + std::to_string(c["witness"][k].get<std::size_t>());
          out += ")";
        }
    out += "\n";
  }
  for (const auto& line : notes) out += "  " + line + "\n";
  return out;
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : check_table()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

std::vector<std::string> default_checks(const BoundInstance& inst) {
  std::vector<std::string> out;
  for (const auto& spec : check_table())
    if (spec.name != "jacobi" && spec.applicable(inst)) out.push_back(spec.name);
  return out;
}

Report cmd_verify(const InstanceFile& file, const Bindings& bindings, const std::vector<std::string>& checks) {
  const BoundInstance inst = bind_params(file, bindings);
  std::vector<std::string> requested = checks.empty() ? default_checks(inst) : checks;
  for (const auto& name : requested) find_check(name);
  Report report = start_report(inst);
  for (const auto& spec : check_table())
    if (std::find(requested.begin(), requested.end(), spec.name) != requested.end()) report.add(spec.name, spec.run(inst));
  return report;
}

Report cmd_build(const InstanceFile& file, const Bindings& bindings, const std::string& target) {
  const BoundInstance inst = bind_params(file, bindings);
  const auto& names = inst.basis_names;
  Report report = start_report(inst);
  report.derived["target"] = target;

  if (target == "levi-civita") {
    const MetricForm g = need_metric(metric_of(inst), target);
    const RationalTensor p = levi_civita_product(inst.bracket, inst.phi, g);
    report.add("torsion", check_torsion(p, inst.bracket));
    report.add("metric-compatibility", check_metric_compatibility(p, g, inst.phi));
    report.derived["product"] = tensor_to_json(p);
    report.notes = product_lines(p, names);
  } else if (target == "left-symmetric") {
    const RationalTensor p = symplectic_left_symmetric(omega_of(inst, target), inst.bracket, inst.phi);
    report.add("left-symmetric", check_hom_left_symmetric(p, inst.phi));
    report.add("torsion", check_torsion(p, inst.bracket));
    report.derived["product"] = tensor_to_json(p);
    report.notes = product_lines(p, names);
  } else if (target == "phase-space") {
    RationalTensor base;
    std::string source;
    if (inst.product) {
      base = *inst.product;
      source = "product";
    } else if (inst.omega) {
      base = symplectic_left_symmetric(omega_of(inst, target), inst.bracket, inst.phi);
      source = "left-symmetric";
    } else if (inst.metric) {
      base = levi_civita_product(inst.bracket, inst.phi, *metric_of(inst));
      source = "levi-civita";
    } else {
      throw InputError("phase-space needs a product, omega or a metric");
    }
    const PhaseSpaceInstance ps = assemble_phase_space(base, inst.phi, metric_of(inst));
    for (const auto& [name, c] : verify_phase_space(ps)) report.add(name, c);
    try {
      report.add("nijenhuis", check_phase_space_complex(ps));
    } catch (const PreconditionFailed&) {
      report.add("nijenhuis", false);
    }
    std::vector<std::string> big_names = names;
    for (const auto& n : names) big_names.push_back(n + "*");
    report.derived["base_product"] = source;
    report.derived["product"] = tensor_to_json(ps.product);
    report.derived["twist"] = matrix_to_json(ps.twist);
    report.derived["omega"] = matrix_to_json(ps.omega.matrix());
    report.derived["J"] = matrix_to_json(ps.J_cal);
    report.notes.push_back("base product: " + source);
    for (auto& line : product_lines(ps.product, big_names)) report.notes.push_back(std::move(line));
  } else if (target == "complexify") {
    const RationalMatrix& J = need_J(inst, target);
    const ComplexSplit split = complexify_and_split(inst.bracket, inst.phi, J);
    const IntegrabilityReport r = check_integrability_equivalence(inst.bracket, inst.phi, J);
    report.add("subalgebra-10", r.subalg10);
    report.add("subalgebra-01", r.subalg01);
    report.add("nijenhuis", r.nijenhuis_zero);
    json b10 = json::array();
    json b01 = json::array();
    for (const auto& w : split.basis10) b10.push_back(vector_to_json(w));
    for (const auto& w : split.basis01) b01.push_back(vector_to_json(w));
    report.derived["basis10"] = b10;
    report.derived["basis01"] = b01;
    report.derived["equivalence_consistent"] = r.consistent();
    for (const auto& w : split.basis10) report.notes.push_back("g^{1,0}: " + to_string(w));
    for (const auto& w : split.basis01) report.notes.push_back("g^{0,1}: " + to_string(w));
  } else if (target == "induced-omega") {
    const SymplecticForm omega = induced_symplectic(need_metric(metric_of(inst), target), inst.phi, need_J(inst, target));
    report.add("symplectic", check_symplectic(omega, inst.bracket, inst.phi));
    report.derived["omega"] = matrix_to_json(omega.matrix());
    report.notes.push_back("omega = " + to_string(omega.matrix()));
  } else {
    throw InputError("unknown target '" + target + "'");
  }
  return report;
}

Report cmd_classify2(const std::string& twist, const std::optional<Rational>& B) {
  TwistFamily2D family;
  if (twist == "hat") family = TwistFamily2D::hat();
  else if (twist == "bar") family = TwistFamily2D::bar();
  else if (twist == "tilde") {
    if (!B) throw InputError("the tilde twist needs B");
    family = TwistFamily2D::tilde(*B);
  } else {
    throw InputError("unknown twist '" + twist + "' (hat, bar or tilde)");
  }
  if (B && family.tag != TwistKind::Tilde) throw InputError("B only applies to the tilde twist");

  Report report;
  report.instance = "classify2:" + family.name();
  if (B) report.bindings["B"] = *B;
  const SolutionFamily sol = solve_almost_complex_2d(family);
  report.derived["twist"] = family.name();
  report.derived["phi"] = matrix_to_json(family.matrix());
  report.derived["kind"] = to_string(sol.kind);
  report.derived["free_params"] = sol.free_params;
  report.derived["constraints"] = sol.constraints;
  report.derived["derivation"] = sol.derivation;
  report.notes.push_back("almost complex structures: " + to_string(sol.kind));
  for (const auto& step : sol.derivation) report.notes.push_back("  " + step);

  if (sol.sample_J) {
    const RationalMatrix& J = *sol.sample_J;
    report.add("almost-complex-sample", check_almost_complex(J, family.matrix()));
    report.derived["sample_J"] = matrix_to_json(J);
    const SolutionFamily herm = solve_hermitian_2d(family, J);
    report.add("hermitian-sample", check_hermitian_compatibility(J, *herm.sample_metric, family.matrix()));
    report.derived["hermitian"] = {{"constraints", herm.constraints}, {"sample_metric", matrix_to_json(herm.sample_metric->gram())}};
    const SolutionFamily kahler = solve_kahler_2d(family, J, *herm.sample_metric);
    report.add("kahler-sample", check_kahler(*kahler.sample_product, family.matrix(), J));
    report.derived["kahler"] = {{"kind", to_string(kahler.kind)}, {"product", tensor_to_json(*kahler.sample_product)}};
    report.notes.push_back("sample J = " + to_string(J) + ", metric = " + to_string(herm.sample_metric->gram()));
  }
  return report;
}

std::string format_combination(const RationalVector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool negative = v[k].sign() < 0;
    const Rational magnitude = negative ? -v[k] : v[k];
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (magnitude != Rational(1)) out += magnitude.str() + " ";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json matrix_to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

nlohmann::ordered_json tensor_to_json(const RationalTensor& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const RationalVector v = t.on_basis(i, j);
      if (!is_zero_vector(v)) out.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", vector_to_json(v)}});
    }
  return out;
}

}  // namespace homlie
