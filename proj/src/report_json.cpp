#include "vsbound/report_json.hpp"

#include "vsbound/error.hpp"

#include <ostream>

namespace vsbound {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json rational_json(const Rational& r) { return r.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string csv_optional(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

}  // namespace

Json to_json(const FieldSpec& field) {
  Json modulus = Json::array();
  for (auto c : field.modulus()) modulus.push_back(c);
  return Json{{"p", field.p()}, {"e", field.e()}, {"q", field.q()}, {"modulus", modulus}};
}

FieldSpec field_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.at("e").get<std::uint32_t>();
    if (!j.contains("modulus")) return make_field(p, e);
    FieldSpec field(p, j.at("modulus").get<std::vector<std::uint32_t>>());
    if (field.e() != e) throw InputError("field modulus degree does not match e");
    return field;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed field object: ") + ex.what());
  }
}

Json to_json(const LatticePoint& v) { return Json(std::vector<std::uint32_t>(v.begin(), v.end())); }

Json to_json(const LatticePolytope& P) {
  Json gens = Json::array();
  for (const auto& g : P.generators()) gens.push_back(to_json(g));
  return gens;
}

Json to_json(const MuResult& result, const LatticePolytope& P) {
  Json j{{"mu", rational_json(result.value)}};
  j["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
  j["generators"] = to_json(P);
  j["degenerate"] = result.value.is_infinite();
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["instance"] = {{"field", to_json(r.field)}, {"vars", r.varnames}, {"map", r.map_text}};
  j["n"] = r.n;
  j["q"] = r.q;
  j["domain_size"] = r.domain_size;
  j["degree"] = r.degree;
  j["vf_size"] = optional_json(r.vf_size);
  j["mu"] = rational_json(r.mu);
  j["mu_witness"] = r.mu_witness ? to_json(*r.mu_witness) : Json(nullptr);
  j["U"] = optional_json(r.U);
  j["polytope_deficit"] = rational_json(r.polytope_deficit);
  j["mww_deficit"] = rational_json(r.mww_deficit);
  j["bound_polytope"] = r.bound_polytope;
  j["bound_mww"] = r.bound_mww;
  j["bound_U"] = optional_json(r.bound_U);
  j["flags"] = {{"permutation", optional_json(r.permutation)},
                {"theorem_holds", optional_json(r.theorem_holds)},
                {"sharp", optional_json(r.sharp)},
                {"degenerate_mu", r.degenerate_mu},
                {"constant_on_domain", r.constant_on_domain},
                {"mww_dominated", r.mww_dominated},
                {"mww_strict", r.mww_strict},
                {"mu_degree_bound_holds", r.mu_degree_bound_holds},
                {"lemma3_holds", optional_json(r.lemma3_holds)},
                {"lemma6_holds", optional_json(r.lemma6_holds)}};
  j["omitted"] = r.omitted;
  j["all_checks_pass"] = r.all_checks_pass();
  return j;
}

Json to_json(const VarietyCheck& c) {
  return Json{{"points", c.points},        {"ord_q", rational_json(c.ord_q)}, {"mu_aux", rational_json(c.mu_aux)},
              {"m", c.m},                  {"holds", c.holds}};
}

Json to_json(const SharpInstance& s) {
  Json j;
  j["kind"] = s.kind == SharpFamily::polytope_sharp ? "polytope-sharp" : "cusick-muller";
  j["field"] = to_json(s.field);
  j["vars"] = s.varnames;
  j["map"] = to_string(s.map, s.field, s.varnames);
  if (s.kind == SharpFamily::polytope_sharp) {
    j["expected_vf"] = optional_json(s.expected_vf);
    j["expected_mu"] = s.expected_mu ? rational_json(*s.expected_mu) : Json(nullptr);
    j["expected_bound_polytope"] = optional_json(s.expected_bound_polytope);
  } else {
    j["brute_vf"] = optional_json(s.brute_vf);
    j["printed_formula"] = s.printed_formula ? rational_json(*s.printed_formula) : Json(nullptr);
    j["printed_formula_integral"] = s.printed_formula_integral;
    j["brute_within_formula"] = s.brute_within_formula;
  }
  return j;
}

Json to_json(const SweepSummary& s) {
  return Json{{"instances", s.instances},
              {"violations", s.violations},
              {"sharp", s.sharp},
              {"degenerate", s.degenerate},
              {"dominance_strict", s.dominance_strict},
              {"permutations", s.permutations},
              {"u_computed", s.u_computed}};
}

Json to_json(const SweepResult& result, const SweepConfig& config) {
  Json j;
  j["config"] = {{"q", config.qs},
                 {"n", config.n},
                 {"deg_max", config.deg_max},
                 {"samples", config.samples},
                 {"seed", config.seed},
                 {"family", config.family == SweepFamily::random ? "random" : "polytope-sharp"},
                 {"a", config.a_values}};
  Json reports = Json::array();
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    Json r = to_json(result.reports[i]);
    r["index"] = i;
    reports.push_back(std::move(r));
  }
  j["reports"] = std::move(reports);
  j["summary"] = to_json(result.summary);
  return j;
}

Instance instance_from_json(const Json& report) {
  try {
    const Json& inst = report.contains("instance") ? report.at("instance") : report;
    FieldSpec field = field_from_json(inst.at("field"));
    auto vars = inst.at("vars").get<std::vector<std::string>>();
    PolyVector map = parse_poly_vector(inst.at("map").get<std::string>(), field, vars);
    return Instance{std::move(field), std::move(vars), std::move(map)};
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed instance: ") + ex.what());
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "index,p,e,q,n,map,degree,vf_size,mu,U,bound_polytope,bound_mww,bound_U,"
        "permutation,theorem_holds,sharp,degenerate_mu,mww_dominated,mww_strict,lemma3_holds,lemma6_holds\n";
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    os << i << ',' << r.field.p() << ',' << r.field.e() << ',' << r.q << ',' << r.n << ','
       << csv_field(r.map_text) << ',' << r.degree << ',' << csv_optional(r.vf_size) << ',' << r.mu.to_string()
       << ',' << csv_optional(r.U) << ',' << r.bound_polytope << ',' << r.bound_mww << ','
       << csv_optional(r.bound_U) << ',' << csv_optional(r.permutation) << ',' << csv_optional(r.theorem_holds)
       << ',' << csv_optional(r.sharp) << ',' << (r.degenerate_mu ? "true" : "false") << ','
       << (r.mww_dominated ? "true" : "false") << ',' << (r.mww_strict ? "true" : "false") << ','
       << csv_optional(r.lemma3_holds) << ',' << csv_optional(r.lemma6_holds) << '\n';
  }
  const auto& s = result.summary;
  os << "summary,instances=" << s.instances << ",violations=" << s.violations << ",sharp=" << s.sharp
     << ",degenerate=" << s.degenerate << ",dominance_strict=" << s.dominance_strict
     << ",permutations=" << s.permutations << ",u_computed=" << s.u_computed << '\n';
}

}  // namespace vsbound
