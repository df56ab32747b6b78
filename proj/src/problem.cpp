#include "invh11/problem.hpp"

#include <algorithm>
#include <set>

namespace invh11 {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ProblemError(path.empty() ? "/" : path, message);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) fail(path + "/" + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing field");
  return *it;
}

Rational read_rational(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a \"p/q\" string");
}

GaussRational read_complex(const json& v, const std::string& path) {
  if (v.is_array()) {
    if (v.size() != 2) fail(path, "complex values are [re, im] pairs");
    return {read_rational(v[0], path + "/0"), read_rational(v[1], path + "/1")};
  }
  if (v.is_object()) {
    only_keys(v, path, {"re", "im"});
    Rational re = v.contains("re") ? read_rational(v["re"], path + "/re") : Rational(0);
    Rational im = v.contains("im") ? read_rational(v["im"], path + "/im") : Rational(0);
    return {re, im};
  }
  return {read_rational(v, path)};
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

json rational_json(const Rational& q) { return to_string(q); }

json complex_json(const GaussRational& z) {
  if (sgn(z.im) == 0) return rational_json(z.re);
  return json::array({to_string(z.re), to_string(z.im)});
}

StructureSpec read_catalog(const json& c, const std::string& path) {
  only_keys(c, path, {"name", "params"});
  StructureSpec s;
  const json& name = require(c, path, "name");
  if (!name.is_string()) fail(path + "/name", "expected a string");
  s.catalog = name.get<std::string>();
  bool known = false;
  for (const auto& info : catalog_names()) known = known || info.name == s.catalog;
  if (!known) fail(path + "/name", "unknown catalog entry '" + s.catalog + "'");
  if (c.contains("params")) {
    const json& p = c["params"];
    if (!p.is_object()) fail(path + "/params", "expected an object");
    for (const auto& [key, value] : p.items()) s.params[key] = read_complex(value, path + "/params/" + key);
  }
  return s;
}

StructureSpec read_custom(const json& c, const std::string& path) {
  only_keys(c, path, {"name", "structure", "coframe"});
  StructureSpec s;
  if (c.contains("name")) {
    if (!c["name"].is_string()) fail(path + "/name", "expected a string");
    s.name = c["name"].get<std::string>();
  }
  const json& st = require(c, path, "structure");
  if (!st.is_array()) fail(path + "/structure", "expected a list of {i, j, k, c}");
  for (std::size_t n = 0; n < st.size(); ++n) {
    std::string p = path + "/structure/" + std::to_string(n);
    only_keys(st[n], p, {"i", "j", "k", "c"});
    StructureConstant k;
    k.i = read_int(require(st[n], p, "i"), p + "/i");
    k.j = read_int(require(st[n], p, "j"), p + "/j");
    k.k = read_int(require(st[n], p, "k"), p + "/k");
    k.c = read_rational(require(st[n], p, "c"), p + "/c");
    if (k.i < 1 || k.i > 4) fail(p + "/i", "index must be between 1 and 4");
    if (k.j < 1 || k.j > 4) fail(p + "/j", "index must be between 1 and 4");
    if (k.k < 1 || k.k > 4) fail(p + "/k", "index must be between 1 and 4");
    if (k.j >= k.k) fail(p, "need j < k");
    s.constants.push_back(k);
  }
  const json& cf = require(c, path, "coframe");
  std::string cp = path + "/coframe";
  if (!cf.is_array() || cf.size() != 2) fail(cp, "expected two rows (phi^1, phi^2) of four complex entries");
  for (std::size_t r = 0; r < 2; ++r) {
    if (!cf[r].is_array() || cf[r].size() != 4) fail(cp + "/" + std::to_string(r), "expected four complex entries");
    for (std::size_t k = 0; k < 4; ++k) s.coframe[r][k] = read_complex(cf[r][k], cp + "/" + std::to_string(r) + "/" + std::to_string(k));
  }
  return s;
}

MetricSpec read_metric(const json& m, const std::string& path) {
  only_keys(m, path, {"r", "s", "r2", "s2", "u_re", "u_im"});
  MetricSpec spec;
  bool plain = m.contains("r") || m.contains("s");
  bool squared = m.contains("r2") || m.contains("s2");
  if (plain && squared) fail(path, "give either r, s or r2, s2");
  spec.squares = squared;
  const char* rk = squared ? "r2" : "r";
  const char* sk = squared ? "s2" : "s";
  spec.r = read_rational(require(m, path, rk), path + "/" + rk);
  spec.s = read_rational(require(m, path, sk), path + "/" + sk);
  if (m.contains("u_re")) spec.u.re = read_rational(m["u_re"], path + "/u_re");
  if (m.contains("u_im")) spec.u.im = read_rational(m["u_im"], path + "/u_im");
  return spec;
}

void read_range(const json& v, const std::string& path, Rational& lo, Rational& hi) {
  if (v.is_array()) {
    if (v.size() != 2) fail(path, "expected [lo, hi]");
    lo = read_rational(v[0], path + "/0");
    hi = read_rational(v[1], path + "/1");
  } else {
    lo = hi = read_rational(v, path);
  }
  if (hi < lo) fail(path, "empty range (hi < lo)");
}

SweepSpec read_sweep(const json& s, const std::string& path) {
  only_keys(s, path, {"r", "s", "u_re", "u_im", "steps"});
  SweepSpec spec;
  if (s.contains("r")) spec.r = read_rational(s["r"], path + "/r");
  if (s.contains("s")) spec.s = read_rational(s["s"], path + "/s");
  if (sgn(spec.r) <= 0) fail(path + "/r", "r must be positive");
  if (sgn(spec.s) <= 0) fail(path + "/s", "s must be positive");
  read_range(require(s, path, "u_re"), path + "/u_re", spec.u_re_lo, spec.u_re_hi);
  read_range(require(s, path, "u_im"), path + "/u_im", spec.u_im_lo, spec.u_im_hi);
  const json& steps = require(s, path, "steps");
  if (steps.is_array()) {
    if (steps.size() != 2) fail(path + "/steps", "expected [steps_re, steps_im]");
    spec.steps_re = read_int(steps[0], path + "/steps/0");
    spec.steps_im = read_int(steps[1], path + "/steps/1");
  } else {
    // a single count applies to the axes given as ranges
    int n = read_int(steps, path + "/steps");
    spec.steps_re = s["u_re"].is_array() ? n : 1;
    spec.steps_im = s["u_im"].is_array() ? n : 1;
  }
  if (spec.steps_re < 1 || spec.steps_im < 1) fail(path + "/steps", "empty grid");
  if (spec.steps_re > 10000 || spec.steps_im > 10000) fail(path + "/steps", "at most 10000 steps per axis");
  if ((spec.steps_re == 1) != (spec.u_re_lo == spec.u_re_hi))
    fail(path + "/steps", "u_re needs one step for a single value and at least two for a range");
  if ((spec.steps_im == 1) != (spec.u_im_lo == spec.u_im_hi))
    fail(path + "/steps", "u_im needs one step for a single value and at least two for a range");
  return spec;
}

OptionsSpec read_options(const json& o, const std::string& path) {
  only_keys(o, path, {"b_minus", "backend", "tolerance"});
  OptionsSpec spec;
  if (o.contains("b_minus")) {
    const json& b = o["b_minus"];
    std::string text = b.is_string() ? b.get<std::string>() : b.is_number_integer() ? b.dump() : std::string("?");
    try {
      (void)BMinusPolicy::parse(text);
    } catch (const std::invalid_argument& e) {
      fail(path + "/b_minus", e.what());
    }
    spec.b_minus = text;
  }
  if (o.contains("backend")) {
    if (!o["backend"].is_string()) fail(path + "/backend", "expected exact, float or both");
    try {
      (void)parse_backend(o["backend"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path + "/backend", e.what());
    }
    spec.backend = o["backend"].get<std::string>();
  }
  if (o.contains("tolerance")) {
    double t = read_rational(o["tolerance"], path + "/tolerance").get_d();
    if (!(t > 0)) fail(path + "/tolerance", "tolerance must be positive");
    spec.tolerance = t;
  }
  return spec;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

MetricParams MetricSpec::params() const {
  Rational r2 = squares ? r : r * r;
  Rational s2 = squares ? s : s * s;
  if (!squares && (sgn(r) <= 0 || sgn(s) <= 0)) throw ProblemError("/metric", "r and s must be positive");
  if (!metric_is_valid(r2, s2, u)) {
    throw ProblemError("/metric", "invalid metric: need r, s > 0 and r^2 s^2 > |u|^2 (r^2 s^2 = " + to_string(r2 * s2) +
                                      ", |u|^2 = " + to_string(u.norm()) + ")");
  }
  return MetricParams::from_squares(r2, s2, u);
}

DecisionOptions decision_options(const OptionsSpec& document, const OptionsSpec& overrides) {
  DecisionOptions o;
  auto pick = [](const auto& a, const auto& b) { return a ? a : b; };
  if (auto b = pick(overrides.backend, document.backend)) o.backend = parse_backend(*b);
  if (auto t = pick(overrides.tolerance, document.tolerance)) {
    if (!(*t > 0)) throw ProblemError("tolerance", "tolerance must be positive");
    o.tolerance = *t;
  }
  if (auto b = pick(overrides.b_minus, document.b_minus)) o.b_minus = BMinusPolicy::parse(*b);
  return o;
}

ProblemSpec parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    throw ProblemError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), cut == std::string::npos ? msg : msg.substr(cut));
  }
  return parse_problem_json(doc);
}

ProblemSpec parse_problem_json(const json& doc) {
  only_keys(doc, "", {"catalog", "custom", "metric", "sweep", "options"});
  ProblemSpec spec;
  bool has_catalog = doc.contains("catalog"), has_custom = doc.contains("custom");
  if (has_catalog == has_custom) fail("/", "give exactly one of 'catalog' or 'custom'");
  spec.structure = has_catalog ? read_catalog(doc["catalog"], "/catalog") : read_custom(doc["custom"], "/custom");
  if (doc.contains("metric")) spec.metric = read_metric(doc["metric"], "/metric");
  if (doc.contains("sweep")) spec.sweep = read_sweep(doc["sweep"], "/sweep");
  if (doc.contains("options")) spec.options = read_options(doc["options"], "/options");
  return spec;
}

json problem_to_json(const ProblemSpec& spec) {
  json out = json::object();
  const StructureSpec& s = spec.structure;
  if (!s.catalog.empty()) {
    json params = json::object();
    for (const auto& [k, v] : s.params) params[k] = complex_json(v);
    out["catalog"] = {{"name", s.catalog}, {"params", params}};
  } else {
    json consts = json::array();
    for (const auto& c : s.constants) consts.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"c", rational_json(c.c)}});
    json rows = json::array();
    for (const auto& row : s.coframe) {
      json r = json::array();
      for (const auto& z : row) r.push_back(json::array({to_string(z.re), to_string(z.im)}));
      rows.push_back(r);
    }
    out["custom"] = json::object();
    if (!s.name.empty()) out["custom"]["name"] = s.name;
    out["custom"]["structure"] = consts;
    out["custom"]["coframe"] = rows;
  }
  if (spec.metric) {
    const MetricSpec& m = *spec.metric;
    out["metric"] = {{m.squares ? "r2" : "r", rational_json(m.r)},
                     {m.squares ? "s2" : "s", rational_json(m.s)},
                     {"u_re", rational_json(m.u.re)},
                     {"u_im", rational_json(m.u.im)}};
  }
  if (spec.sweep) {
    const SweepSpec& w = *spec.sweep;
    out["sweep"] = {{"r", rational_json(w.r)},
                    {"s", rational_json(w.s)},
                    {"u_re", json::array({rational_json(w.u_re_lo), rational_json(w.u_re_hi)})},
                    {"u_im", json::array({rational_json(w.u_im_lo), rational_json(w.u_im_hi)})},
                    {"steps", json::array({w.steps_re, w.steps_im})}};
  }
  json opts = json::object();
  if (spec.options.b_minus) opts["b_minus"] = *spec.options.b_minus;
  if (spec.options.backend) opts["backend"] = *spec.options.backend;
  if (spec.options.tolerance) opts["tolerance"] = *spec.options.tolerance;
  if (!opts.empty()) out["options"] = opts;
  return out;
}

ResolvedStructure resolve_structure(const StructureSpec& spec) {
  if (!spec.catalog.empty()) {
    try {
      CatalogEntry e = catalog(spec.catalog, spec.params);
      return {e.name, e.lie, e.coframe, e};
    } catch (const std::invalid_argument& err) {
      throw ProblemError("/catalog", err.what());
    }
  }
  LieStructure lie(spec.name.empty() ? "custom" : spec.name);
  for (const auto& c : spec.constants) lie.add(c.i, c.j, c.k, c.c);
  auto verdict = validate_d_squared(lie);
  if (!verdict.ok) {
    std::string msg = "structure constants violate d^2 = 0:";
    for (const auto& [i, f] : verdict.failures) msg += " d(de^" + std::to_string(i) + ") = " + to_string(f) + ";";
    msg.pop_back();
    throw ProblemError("/custom/structure", msg);
  }
  try {
    AlmostComplexCoframe coframe(spec.coframe);
    return {lie.name(), lie, coframe, std::nullopt};
  } catch (const std::invalid_argument& err) {
    throw ProblemError("/custom/coframe", err.what());
  }
}

ValidationReport validate_problem(const ProblemSpec& spec) {
  ValidationReport rep;
  std::optional<LieStructure> lie;
  std::optional<AlmostComplexCoframe> coframe;
  if (!spec.structure.catalog.empty()) {
    try {
      CatalogEntry e = catalog(spec.structure.catalog, spec.structure.params);
      lie = e.lie;
      coframe = e.coframe;
    } catch (const std::invalid_argument& err) {
      rep.structure_ok = false;
      rep.structure_message = err.what();
    }
  } else {
    LieStructure l(spec.structure.name.empty() ? "custom" : spec.structure.name);
    for (const auto& c : spec.structure.constants) l.add(c.i, c.j, c.k, c.c);
    lie = l;
    try {
      coframe = AlmostComplexCoframe(spec.structure.coframe);
    } catch (const std::invalid_argument& err) {
      rep.coframe_ok = false;
      rep.coframe_message = err.what();
    }
  }
  if (lie) {
    auto v = validate_d_squared(*lie);
    rep.d_squared_ok = v.ok;
    for (const auto& [i, f] : v.failures) rep.d_squared_failures.push_back("d(de^" + std::to_string(i) + ") = " + to_string(f));
  }
  if (spec.metric) {
    try {
      (void)spec.metric->params();
      rep.metric_ok = true;
    } catch (const ProblemError& err) {
      rep.metric_ok = false;
      rep.metric_message = err.what();
    }
  }
  return rep;
}

std::vector<Rational> sweep_axis(const Rational& lo, const Rational& hi, int steps) {
  if (steps < 1) throw std::invalid_argument("empty grid");
  std::vector<Rational> out;
  for (int k = 0; k < steps; ++k) {
    Rational v = steps == 1 ? lo : Rational(lo + (hi - lo) * k / (steps - 1));
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

}  // namespace invh11
