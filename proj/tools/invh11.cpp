// invh11 command line: validate, h11, ak-scan, sweep, catalog, report.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "invh11/report.hpp"

using namespace invh11;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

struct Flags {
  std::string input = "-";
  std::string backend;
  double tolerance = 1e-9;
  std::string b_minus;
  bool as_json = false;
  long seed = 0;
  unsigned threads = 0;
  // set by CLI11 after parsing
  bool backend_given = false, tolerance_given = false, b_minus_given = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ProblemError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DecisionOptions options_for(const ProblemSpec& spec, const Flags& f) {
  OptionsSpec flags;
  if (f.backend_given) flags.backend = f.backend;
  if (f.tolerance_given) flags.tolerance = f.tolerance;
  if (f.b_minus_given) flags.b_minus = f.b_minus;
  return decision_options(spec.options, flags);
}

json envelope(const std::string& command, const Flags& f) {
  return {{"tool", "invh11"}, {"version", kVersion}, {"command", command}, {"seed", f.seed}, {"randomized_search", false}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

MetricParams require_metric(const ProblemSpec& spec) {
  if (!spec.metric) throw ProblemError("/metric", "this command needs a metric");
  return spec.metric->params();
}

int cmd_validate(const Flags& f) {
  ProblemSpec spec = parse_problem(read_input(f.input));
  ValidationReport v = validate_problem(spec);
  if (f.as_json) {
    json out = envelope("validate", f);
    out["input"] = problem_to_json(spec);
    out["validation"] = validation_to_json(v);
    emit(out);
  } else {
    std::cout << format_validation(v);
  }
  return v.ok() ? kOk : kInputError;
}

int cmd_h11(const Flags& f) {
  ProblemSpec spec = parse_problem(read_input(f.input));
  ResolvedStructure s = resolve_structure(spec.structure);
  MetricParams m = require_metric(spec);
  DecisionOptions opt = options_for(spec, f);
  json out = envelope("h11", f);
  out["input"] = problem_to_json(spec);
  try {
    DecisionReport d = decide_h11(s.lie, s.coframe, m, opt, s.entry_ptr());
    out["decision"] = decision_to_json(d);
    if (f.as_json)
      emit(out);
    else
      std::cout << s.label << "  " << "metric " << to_string(m.r2()) << ", " << to_string(m.s2()) << ", "
                << to_string(m.u()) << "\n"
                << format_decision(d);
    return kOk;
  } catch (const BackendDisagreement& e) {
    out["decision"] = decision_to_json(e.report());
    out["error"] = e.what();
    if (f.as_json)
      emit(out);
    else
      std::cout << format_decision(e.report()) << "error: " << e.what() << "\n";
    return kDisagreement;
  }
}

int cmd_ak_scan(const Flags& f) {
  ProblemSpec spec = parse_problem(read_input(f.input));
  ResolvedStructure s = resolve_structure(spec.structure);
  AlmostKahlerVerdict ak = almost_kahler_feasible(s.lie, s.coframe);
  SymplecticVerdict sy = symplectic_feasible(s.lie);
  if (f.as_json) {
    json out = envelope("ak-scan", f);
    out["input"] = problem_to_json(spec);
    out["almost_kahler"] = almost_kahler_to_json(ak);
    out["symplectic"] = symplectic_to_json(sy);
    emit(out);
  } else {
    std::cout << s.label << "\n" << format_almost_kahler(ak) << format_symplectic(sy);
  }
  return kOk;
}

int cmd_sweep(const Flags& f) {
  ProblemSpec spec = parse_problem(read_input(f.input));
  if (!spec.sweep) throw ProblemError("/sweep", "this command needs a sweep grid");
  ResolvedStructure s = resolve_structure(spec.structure);
  DecisionOptions opt = options_for(spec, f);
  SweepResult r;
  try {
    r = run_sweep(s, *spec.sweep, opt, f.threads);
  } catch (const BackendDisagreement& e) {
    const DecisionReport& d = e.report();
    std::cerr << "error: " << e.what() << "\n" << format_decision(d);
    return kDisagreement;
  }
  if (f.as_json) {
    json out = envelope("sweep", f);
    out["input"] = problem_to_json(spec);
    out["backend"] = backend_name(opt.backend);
    out["tolerance"] = opt.tolerance;
    json re = json::array(), im = json::array(), cells = json::array();
    for (const auto& x : r.u_re) re.push_back(to_string(x));
    for (const auto& x : r.u_im) im.push_back(to_string(x));
    for (const auto& row : r.cells) {
      json jr = json::array();
      for (const auto& c : row) jr.push_back(c.valid ? json(c.delta) : json("x"));
      cells.push_back(jr);
    }
    out["u_re"] = re;
    out["u_im"] = im;
    out["delta"] = cells;
    out["csv"] = sweep_csv(r);
    emit(out);
  } else {
    // stdout stays pure CSV
    std::cerr << "# backend " << backend_name(opt.backend) << ", tolerance " << opt.tolerance << "\n";
    std::cout << sweep_csv(r);
  }
  return kOk;
}

int cmd_catalog(const Flags& f, const std::string& action, const std::string& name,
                const std::vector<std::string>& param_args) {
  if (action == "list") {
    if (f.as_json) {
      json out = envelope("catalog", f);
      out["entries"] = catalog_listing_to_json();
      emit(out);
    } else {
      std::cout << format_catalog_listing();
    }
    return kOk;
  }
  const CatalogInfo* info = nullptr;
  for (const auto& i : catalog_names())
    if (i.name == name) info = &i;
  if (!info) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  CatalogParams params;
  for (const auto& p : param_args) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ProblemError("--param", "expected name=value, got '" + p + "'");
    // JSON values allow complex parameters such as ["-1/4", "1/4"]
    json value = json::parse(p.substr(eq + 1), nullptr, false);
    if (value.is_discarded()) value = p.substr(eq + 1);
    json doc = {{"catalog", {{"name", name}, {"params", {{p.substr(0, eq), value}}}}}};
    params.merge(parse_problem_json(doc).structure.params);
  }
  // Without its parameters an entry can only describe its domain.
  if (params.size() < info->parameters.size()) {
    if (f.as_json) {
      json out = envelope("catalog", f);
      out["entry"] = {{"name", info->name}, {"parameters", info->parameters}, {"domain", info->parameter_domain}};
      emit(out);
    } else {
      std::cout << info->name << " requires:";
      for (const auto& p : info->parameters) std::cout << " " << p;
      std::cout << "\n  domain: " << info->parameter_domain << "\n";
    }
    return kOk;
  }
  CatalogEntry e = catalog(name, params);
  StructureSpec spec;
  spec.catalog = name;
  spec.params = params;
  ResolvedStructure s = resolve_structure(spec);
  CohomologyReport c = ce_cohomology(s.lie);
  if (f.as_json) {
    json out = envelope("catalog", f);
    out["entry"] = catalog_entry_to_json(e);
    out["tables"] = operator_tables_to_json(s);
    out["cohomology"] = cohomology_to_json(c);
    emit(out);
  } else {
    std::cout << format_catalog_entry(e) << format_operator_tables(s) << format_cohomology(c);
  }
  return kOk;
}

int cmd_report(const Flags& f) {
  ProblemSpec spec = parse_problem(read_input(f.input));
  ValidationReport v = validate_problem(spec);
  json out = envelope("report", f);
  out["input"] = problem_to_json(spec);
  out["validation"] = validation_to_json(v);
  std::ostringstream human;
  human << "invh11 " << kVersion << "  seed " << f.seed << "\n" << format_validation(v);
  if (!v.ok()) {
    if (f.as_json)
      emit(out);
    else
      std::cout << human.str();
    return kInputError;
  }
  ResolvedStructure s = resolve_structure(spec.structure);
  DecisionOptions opt = options_for(spec, f);
  out["backend"] = backend_name(opt.backend);
  out["tolerance"] = opt.tolerance;
  out["tables"] = operator_tables_to_json(s);
  human << "\n" << s.label << "\n" << format_operator_tables(s);
  int code = kOk;
  if (spec.metric) {
    try {
      DecisionReport d = decide_h11(s.lie, s.coframe, spec.metric->params(), opt, s.entry_ptr());
      out["decision"] = decision_to_json(d);
      human << "\n" << format_decision(d);
    } catch (const BackendDisagreement& e) {
      out["decision"] = decision_to_json(e.report());
      out["error"] = e.what();
      human << "\n" << format_decision(e.report()) << "error: " << e.what() << "\n";
      code = kDisagreement;
    }
  }
  CohomologyReport c = ce_cohomology(s.lie);
  AlmostKahlerVerdict ak = almost_kahler_feasible(s.lie, s.coframe);
  SymplecticVerdict sy = symplectic_feasible(s.lie);
  out["cohomology"] = cohomology_to_json(c);
  out["almost_kahler"] = almost_kahler_to_json(ak);
  out["symplectic"] = symplectic_to_json(sy);
  human << "\n" << format_cohomology(c) << format_almost_kahler(ak) << format_symplectic(sy);
  if (f.as_json)
    emit(out);
  else
    std::cout << human.str();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dolbeault harmonic (1,1)-forms on left-invariant almost Hermitian 4-manifolds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  auto* backend = app.add_option("--backend", f.backend, "exact, float or both (default both)")
                      ->check(CLI::IsMember({"exact", "float", "both"}));
  auto* tolerance = app.add_option("--tolerance", f.tolerance, "float backend tolerance (default 1e-9)");
  auto* b_minus = app.add_option("--b-minus", f.b_minus, "b^- source: integer, ce or paper");
  app.add_flag("--json", f.as_json, "machine-readable output");
  app.add_option("--seed", f.seed, "RNG seed, recorded in reports (default 0)");

  auto input_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("spec", f.input, "problem document (default: stdin)");
    return sub;
  };
  auto* validate = input_cmd("validate", "check d^2 = 0, coframe and metric");
  auto* h11 = input_cmd("h11", "decide h^{1,1} for the document's metric");
  auto* ak = input_cmd("ak-scan", "almost Kaehler and symplectic feasibility");
  auto* sweep = input_cmd("sweep", "CSV of delta over the document's u grid");
  sweep->add_option("--threads", f.threads, "worker threads (default: all cores)");
  auto* report = input_cmd("report", "everything for one document");

  std::string action = "list", entry_name;
  std::vector<std::string> param_args;
  auto* cat = app.add_subcommand("catalog", "list entries or show one");
  cat->add_option("action", action, "list or show")->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", entry_name, "entry name for show");
  cat->add_option("--param", param_args, "entry parameter as name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  f.backend_given = backend->count() > 0;
  f.tolerance_given = tolerance->count() > 0;
  f.b_minus_given = b_minus->count() > 0;

  try {
    if (f.backend_given) (void)parse_backend(f.backend);
    if (f.b_minus_given) (void)BMinusPolicy::parse(f.b_minus);
    if (validate->parsed()) return cmd_validate(f);
    if (h11->parsed()) return cmd_h11(f);
    if (ak->parsed()) return cmd_ak_scan(f);
    if (sweep->parsed()) return cmd_sweep(f);
    if (report->parsed()) return cmd_report(f);
    if (cat->parsed()) {
      if (action == "show" && entry_name.empty()) throw std::invalid_argument("catalog show needs an entry name");
      return cmd_catalog(f, action, entry_name, param_args);
    }
  } catch (const BackendDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
