#include "vsbound/cli.hpp"

#include "vsbound/error.hpp"
#include "vsbound/padic.hpp"
#include "vsbound/polytope.hpp"
#include "vsbound/report_json.hpp"
#include "vsbound/svg.hpp"
#include "vsbound/valueset.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace vsbound::cli {

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("expected a nonnegative integer for " + what + ", got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw InputError(what + " out of range: " + s);
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

FieldSpec parse_field(const std::optional<std::string>& text, std::uint64_t budget) {
  if (!text) throw InputError("--field p=<int>,e=<int> is required");
  std::optional<std::uint64_t> p, e;
  std::stringstream ss(*text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("malformed --field entry '" + part + "'");
    const std::string key = trim(part.substr(0, eq));
    const std::uint64_t value = parse_uint(trim(part.substr(eq + 1)), key);
    if (key == "p") p = value;
    else if (key == "e") e = value;
    else throw InputError("unknown --field key '" + key + "'");
  }
  if (!p) throw InputError("--field needs p");
  if (!e) e = 1;
  if (*p > 0xffffffffu || *e > kMaxDegree) throw InputError("field parameters out of range");
  return make_field(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*e), budget);
}

class Output {
 public:
  Output(const RunConfig& config, std::ostream& out) : path_(config.out), out_(out) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (!path_) {
      out_ << buffer_.str();
      return;
    }
    std::ofstream file(*path_, std::ios::binary);
    if (!file) throw InputError("cannot open output file " + *path_);
    file << buffer_.str();
  }

 private:
  std::optional<std::string> path_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

std::string map_text(const RunConfig& c) {
  if (!c.map.empty()) return c.map;
  std::string joined;
  for (const auto& s : c.inputs) joined += (joined.empty() ? "" : "; ") + s;
  if (joined.empty()) throw InputError("no map given; use --map or a positional argument");
  return joined;
}

std::vector<std::string> varnames_for(const RunConfig& c, const std::string& text, std::size_t min_n) {
  if (c.vars_text.empty()) return infer_varnames(text, min_n);
  std::vector<std::string> vars;
  std::stringstream ss(c.vars_text);
  std::string part;
  while (std::getline(ss, part, ',')) vars.push_back(trim(part));
  return vars;
}

std::size_t count_components(const std::string& text) { return std::count(text.begin(), text.end(), ';') + 1; }

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions v;
  v.domain_budget = c.budget_domain;
  v.u_budget = c.budget_u;
  return v;
}

int cmd_mu(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const FieldSpec field = parse_field(c.field, c.budget_domain);
  const std::string text = map_text(c);
  const auto vars = varnames_for(c, text, 0);
  const PolyVector f = parse_poly_vector(text, field, vars);
  const LatticePolytope P = newton_polytope(f);
  const MuResult result = mu(P);
  if (result.value.is_infinite())
    err << "warning: degenerate polytope, some variable does not occur; mu is infinite\n";
  Output o(c, out);
  if (c.format == "csv") write_generators_csv(o.stream(), P);
  else o.stream() << to_json(result, P).dump() << '\n';
  o.flush();
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&) {
  std::optional<Instance> inst;
  if (c.instance_path) {
    std::ifstream in(*c.instance_path);
    if (!in) throw InputError("cannot read instance file " + *c.instance_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& ex) {
      throw InputError(std::string("instance file is not valid JSON: ") + ex.what());
    }
    inst.emplace(instance_from_json(j));
  } else {
    FieldSpec field = parse_field(c.field, c.budget_domain);
    const std::string text = map_text(c);
    auto vars = varnames_for(c, text, count_components(text));
    PolyVector map = parse_poly_vector(text, field, vars);
    inst.emplace(Instance{std::move(field), std::move(vars), std::move(map)});
  }
  const BoundsReport report = verify_bounds(inst->map, inst->field, verify_options(c), inst->varnames);
  Output o(c, out);
  o.stream() << to_json(report).dump(2) << '\n';
  o.flush();
  return report.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

Json witt_json(const WittElement& w) { return Json(std::vector<std::uint64_t>(w.coeffs.begin(), w.coeffs.end())); }

int cmd_u(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FieldSpec field = parse_field(c.field, c.budget_domain);
  const std::string text = map_text(c);
  const auto vars = varnames_for(c, text, count_components(text));
  const PolyVector f = parse_poly_vector(text, field, vars);
  if (f.m() != f.n) throw InputError("U needs a map with as many components as variables");
  Output o(c, out);
  UOptions options;
  options.max_domain = c.budget_u;
  if (c.trace)
    options.trace = [&](const UTraceRecord& r) {
      o.stream() << Json{{"k", r.k}, {"precision", r.precision}, {"sum", witt_json(r.sum)}, {"nonzero", r.nonzero}}
                        .dump()
                 << '\n';
    };
  const TowerSpec tower = make_tower(field, static_cast<std::uint32_t>(f.n), c.budget_domain);
  const UResult u = compute_U(f, tower, options);
  o.stream() << Json{{"U", u.U},
                     {"witness_k", u.witness_k},
                     {"precision", u.precision},
                     {"S", witt_json(u.S_value)},
                     {"bound_U", tower.order() - u.U}}
                    .dump()
             << '\n';
  o.flush();
  return kExitOk;
}

int cmd_valueset(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FieldSpec field = parse_field(c.field, c.budget_domain);
  const std::string text = map_text(c);
  const auto vars = varnames_for(c, text, 0);
  const PolyVector f = parse_poly_vector(text, field, vars);
  const std::uint64_t vf = value_set_size(f, field, c.budget_domain);
  const std::uint64_t domain = checked_power(field.q(), f.n, c.budget_domain);
  Json j{{"vf_size", vf}, {"domain_size", domain}};
  if (f.m() == f.n) j["permutation"] = vf == domain;
  Output o(c, out);
  o.stream() << j.dump() << '\n';
  o.flush();
  return kExitOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  SweepConfig config;
  config.qs = parse_range(c.q_range);
  if (config.qs.empty()) throw InputError("q range is empty");
  config.n = c.n;
  config.deg_max = c.deg_max;
  config.samples = c.samples;
  config.seed = c.seed;
  config.verify = verify_options(c);
  if (c.family == "random") {
    config.family = SweepFamily::random;
  } else if (c.family == "polytope-sharp") {
    config.family = SweepFamily::polytope_sharp;
    for (auto a : parse_range(c.a_range)) {
      if (a == 0 || a > 0xffffffffu) throw InputError("exponent a out of range");
      config.a_values.push_back(static_cast<std::uint32_t>(a));
    }
  } else {
    throw InputError("unknown family '" + c.family + "'");
  }
  if (config.n == 0) throw InputError("--n must be positive");
  const SweepResult result = run_sweep(config);
  Output o(c, out);
  if (c.format == "csv") write_sweep_csv(o.stream(), result);
  else o.stream() << to_json(result, config).dump(2) << '\n';
  o.flush();
  return result.summary.violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_svg(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FieldSpec field = parse_field(c.field, c.budget_domain);
  std::vector<std::string> polys = c.inputs;
  if (!c.map.empty()) polys.insert(polys.begin(), c.map);
  if (polys.empty()) throw InputError("no polynomial given");
  std::vector<SvgPanel> panels;
  for (const auto& text : polys) {
    const auto vars = varnames_for(c, text, 0);
    if (vars.size() != 2) throw InputError("polytope-svg supports exactly two variables, got " + std::to_string(vars.size()));
    const PolyVector f = parse_poly_vector(text, field, vars);
    const LatticePolytope P = newton_polytope(f);
    const MuResult m = mu(P);
    const Rational dilation = c.dilation ? Rational::parse(*c.dilation) : m.value;
    if (dilation.is_infinite()) throw InputError("'" + text + "' has infinite mu; nothing to draw");
    panels.push_back(SvgPanel{text, P, dilation, m.witness});
  }
  const std::string svg = render_polytope_svg(panels);
  Output o(c, out);
  o.stream() << svg;
  o.flush();
  return kExitOk;
}

int cmd_variety(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FieldSpec field = parse_field(c.field, c.budget_domain);
  const std::string text = map_text(c);
  const auto vars = varnames_for(c, text, 0);
  const PolyVector fs = parse_poly_vector(text, field, vars);
  const VarietyCheck check = variety_ord_check(fs, field, c.budget_domain);
  Output o(c, out);
  o.stream() << to_json(check).dump() << '\n';
  o.flush();
  return check.holds ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--field", c.field, "field as p=<int>,e=<int>");
  sub->add_option("--vars", c.vars_text, "comma-separated variable names");
  sub->add_option("--map", c.map, "map components separated by ';'");
  sub->add_option("--budget-domain", c.budget_domain, "largest enumerated domain")->check(CLI::PositiveNumber);
  sub->add_option("--budget-u", c.budget_u, "largest q^n for U scans")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--out", c.out, "output path (default stdout)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("inputs", c.inputs, "polynomials");
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "mu") return cmd_mu(c, out, err);
  if (c.command == "verify") return cmd_verify(c, out, err);
  if (c.command == "u-invariant") return cmd_u(c, out, err);
  if (c.command == "valueset") return cmd_valueset(c, out, err);
  if (c.command == "sweep") return cmd_sweep(c, out, err);
  if (c.command == "polytope-svg") return cmd_svg(c, out, err);
  if (c.command == "variety-check") return cmd_variety(c, out, err);
  throw InputError("unknown command " + c.command);
}

}  // namespace

std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_uint(trim(text.substr(0, dots)), "range start");
    const auto hi = parse_uint(trim(text.substr(dots + 2)), "range end");
    if (hi < lo) throw InputError("empty range " + text);
    if (hi - lo > 1'000'000) throw InputError("range too long: " + text);
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_uint(trim(part), "range entry"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> infer_varnames(const std::string& text, std::size_t min_n) {
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string id = text.substr(i, j - i);
      if (id != "t" && std::find(seen.begin(), seen.end(), id) == seen.end()) seen.push_back(std::move(id));
      i = j;
    } else {
      ++i;
    }
  }
  if (seen.size() == 1 && seen[0] == "x" && min_n <= 1) return {"x"};
  std::size_t max_index = 0;
  bool indexed = !seen.empty();
  for (const auto& id : seen) {
    if (id.size() < 2 || id[0] != 'x' || id[1] == '0' ||
        !std::all_of(id.begin() + 1, id.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        id.size() > 6) {
      indexed = false;
      break;
    }
    max_index = std::max<std::size_t>(max_index, std::stoul(id.substr(1)));
  }
  if (seen.empty()) return default_varnames(std::max<std::size_t>(min_n, 1));
  if (indexed) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= std::max(max_index, min_n); ++i) vars.push_back("x" + std::to_string(i));
    return vars;
  }
  return seen;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Value-set bounds for polynomial maps over finite fields"};
  app.require_subcommand(1);

  auto* mu_cmd = app.add_subcommand("mu", "mu of the Newton polytope, with witness");
  auto* verify_cmd = app.add_subcommand("verify", "all bounds and checks for a map F_q^n -> F_q^n");
  auto* u_cmd = app.add_subcommand("u-invariant", "U via Teichmueller power sums");
  auto* vs_cmd = app.add_subcommand("valueset", "value set size by enumeration");
  auto* sweep_cmd = app.add_subcommand("sweep", "random or sharp-family sweep");
  auto* svg_cmd = app.add_subcommand("polytope-svg", "SVG drawing of 2D Newton polytopes");
  auto* var_cmd = app.add_subcommand("variety-check", "point count valuation against mu of the auxiliary polynomial");
  for (auto* sub : {mu_cmd, verify_cmd, u_cmd, vs_cmd, sweep_cmd, svg_cmd, var_cmd}) add_common(sub, c);

  verify_cmd->add_option("--instance", c.instance_path, "report JSON whose instance is re-verified");
  u_cmd->add_flag("--trace", c.trace, "print one JSON line per k");
  svg_cmd->add_option("--dilation", c.dilation, "dilation to draw (default mu), e.g. 2/4");
  sweep_cmd->add_option("--q", c.q_range, "field sizes, e.g. 2..5");
  sweep_cmd->add_option("--n", c.n, "number of variables");
  sweep_cmd->add_option("--deg-max", c.deg_max, "total degree cap");
  sweep_cmd->add_option("--samples", c.samples, "instances per q");
  sweep_cmd->add_option("--family", c.family, "random or polytope-sharp")
      ->check(CLI::IsMember({"random", "polytope-sharp"}));
  sweep_cmd->add_option("--a", c.a_range, "exponents for polytope-sharp, e.g. 1..3");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitInputError;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(c, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace vsbound::cli
