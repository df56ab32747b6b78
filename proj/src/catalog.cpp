#include "invh11/catalog.hpp"

#include <stdexcept>

namespace invh11 {

namespace {

using Row = std::array<GaussRational, 4>;

const GaussRational kI{0, 1};

Row row(GaussRational a, GaussRational b, GaussRational c, GaussRational d) { return {a, b, c, d}; }

const GaussRational& require(const CatalogParams& params, const std::string& entry, const std::string& key,
                             const std::string& domain) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("catalog entry '" + entry + "' requires parameter " + key + " (" + domain + ")");
  }
  return it->second;
}

Rational require_real(const CatalogParams& params, const std::string& entry, const std::string& key,
                      const std::string& domain) {
  const GaussRational& v = require(params, entry, key, domain);
  if (sgn(v.im) != 0) throw std::invalid_argument("parameter " + key + " of '" + entry + "' must be real");
  return v.re;
}

void reject_extra(const CatalogParams& params, const std::string& entry, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == key;
    if (!ok) throw std::invalid_argument("catalog entry '" + entry + "' has no parameter '" + key + "'");
  }
}

// e^1 + i e^3, e^2 + i e^4
AlmostComplexCoframe standard_coframe() {
  return AlmostComplexCoframe({row(1, 0, kI, 0), row(0, 1, 0, kI)});
}

auto never = [](const MetricParams&) { return false; };
auto always = [](const MetricParams&) { return true; };
auto im_u_zero = [](const MetricParams& m) { return sgn(m.u().im) == 0; };
auto u_zero = [](const MetricParams& m) { return m.u().is_zero(); };

LieStructure filiform() {
  LieStructure lie("nilmanifold");
  lie.add(3, 1, 2, -1).add(4, 1, 3, -1);
  return lie;
}

LieStructure hyperelliptic() {
  LieStructure lie("hyperelliptic");
  lie.add(1, 2, 3, -1).add(2, 1, 3, 1);
  return lie;
}

LieStructure heisenberg_times_r() {
  LieStructure lie("primary_kodaira");
  lie.add(3, 1, 2, -1);
  return lie;
}

CatalogEntry make_entry(std::string name, std::string description, CatalogParams params, LieStructure lie,
                        AlmostComplexCoframe coframe) {
  return CatalogEntry{std::move(name), std::move(description), std::move(params), std::move(lie), std::move(coframe),
                      0, 0, false, {}, {}, {}, {}, {}};
}

}  // namespace

const std::vector<CatalogInfo>& catalog_names() {
  static const std::vector<CatalogInfo> names = {
      {"secondary_kodaira", {}, "no parameters"},
      {"inoue_sm", {"alpha", "beta"}, "alpha, beta real, alpha != 0"},
      {"nilmanifold_I", {}, "no parameters"},
      {"nilmanifold_II", {}, "no parameters"},
      {"hyperelliptic_I", {}, "no parameters"},
      {"hyperelliptic_II", {"t"}, "t complex, 0 < |t| < 1"},
      {"primary_kodaira_I", {"alpha"}, "alpha real"},
      {"primary_kodaira_II", {"beta"}, "beta real, beta != 0"},
  };
  return names;
}

CatalogEntry catalog(const std::string& name, const CatalogParams& params) {
  const CatalogInfo* info = nullptr;
  for (const auto& c : catalog_names())
    if (c.name == name) info = &c;
  if (!info) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  reject_extra(params, name, info->parameters);
  const std::string& domain = info->parameter_domain;

  if (name == "secondary_kodaira") {
    LieStructure lie(name);
    lie.add(1, 2, 4, 1).add(2, 1, 4, -1).add(3, 1, 2, 1);
    CatalogEntry e = make_entry(name, "secondary Kodaira surface; phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4", params,
                                lie, standard_coframe());
    e.reference_b2 = 0;
    e.reference_b_minus = 0;
    e.expected_condition = "Im(u) = 0";
    e.expected_delta = im_u_zero;
    e.expected_ak_condition = "never";
    e.expected_ak = never;
    e.parameter_domain = domain;
    return e;
  }

  if (name == "inoue_sm") {
    Rational alpha = require_real(params, name, "alpha", domain);
    Rational beta = require_real(params, name, "beta", domain);
    if (sgn(alpha) == 0) throw std::invalid_argument("inoue_sm requires alpha != 0");
    LieStructure lie(name);
    lie.add(1, 1, 4, alpha).add(1, 2, 4, beta).add(2, 1, 4, -beta).add(2, 2, 4, alpha).add(3, 3, 4, -2 * alpha);
    CatalogEntry e = make_entry(name, "Inoue surface S_M; phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4", params, lie,
                                standard_coframe());
    e.reference_b2 = 0;
    e.reference_b_minus = 0;
    e.expected_condition = "beta * Im(u) = -alpha * r^2";
    e.expected_delta = [alpha, beta](const MetricParams& m) { return beta * m.u().im == -alpha * m.r2(); };
    e.expected_ak_condition = "never";
    e.expected_ak = never;
    e.parameter_domain = domain;
    return e;
  }

  if (name == "nilmanifold_I") {
    LieStructure lie = filiform();
    lie.set_name(name);
    CatalogEntry e = make_entry(name,
                                "4-dimensional nilmanifold without complex structures; "
                                "phi^1 = e^3 + i e^4, phi^2 = e^1 + i e^2",
                                params, lie, AlmostComplexCoframe({row(0, 0, 1, kI), row(1, kI, 0, 0)}));
    e.reference_b2 = 2;
    e.reference_b_minus = 1;
    e.nilpotent = true;
    e.expected_condition = "always";
    e.expected_delta = always;
    // Printed as Re(u) = i r^2, which no metric satisfies.
    e.expected_ak_condition = "Re(u) = i r^2 (as printed)";
    e.expected_ak = [](const MetricParams& m) { return GaussRational(m.u().re) == GaussRational(0, m.r2()); };
    e.parameter_domain = domain;
    return e;
  }

  if (name == "nilmanifold_II") {
    LieStructure lie = filiform();
    lie.set_name(name);
    CatalogEntry e = make_entry(name,
                                "4-dimensional nilmanifold without complex structures; "
                                "phi^1 = e^1 + i e^4, phi^2 = e^2 + i e^3",
                                params, lie, AlmostComplexCoframe({row(1, 0, 0, kI), row(0, 1, kI, 0)}));
    e.reference_b2 = 2;
    e.reference_b_minus = 1;
    e.nilpotent = true;
    e.expected_condition = "u = 0";
    e.expected_delta = u_zero;
    e.expected_ak_condition = "u = 0";
    e.expected_ak = u_zero;
    e.parameter_domain = domain;
    return e;
  }

  if (name == "hyperelliptic_I") {
    LieStructure lie = hyperelliptic();
    lie.set_name(name);
    CatalogEntry e = make_entry(name, "hyperelliptic surface; phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4", params, lie,
                                standard_coframe());
    e.reference_b2 = 2;
    e.reference_b_minus = 1;
    e.expected_condition = "never";
    e.expected_delta = never;
    e.expected_ak_condition = "never";
    e.expected_ak = never;
    e.parameter_domain = domain;
    return e;
  }

  if (name == "hyperelliptic_II") {
    GaussRational t = require(params, name, "t", domain);
    Rational n = t.norm();
    if (!(sgn(n) > 0 && n < 1)) throw std::invalid_argument("hyperelliptic_II requires 0 < |t| < 1");
    LieStructure lie = hyperelliptic();
    lie.set_name(name);
    GaussRational one(1);
    CatalogEntry e = make_entry(name,
                                "hyperelliptic surface, deformed structure; "
                                "phi^1 = (1+t) e^1 + i(1-t) e^2, phi^2 = e^3 + i e^4",
                                params, lie, AlmostComplexCoframe({row(one + t, kI * (one - t), 0, 0), row(0, 0, 1, kI)}));
    e.reference_b2 = 2;
    e.reference_b_minus = 1;
    e.expected_condition = "always";
    e.expected_delta = always;
    e.expected_ak_condition = "u = 0";
    e.expected_ak = u_zero;
    e.parameter_domain = domain;
    return e;
  }

  if (name == "primary_kodaira_I") {
    Rational alpha = require_real(params, name, "alpha", domain);
    LieStructure lie = heisenberg_times_r();
    lie.set_name(name);
    CatalogEntry e = make_entry(name,
                                "primary Kodaira surface; phi^1 = (e^1 + alpha e^4) + i e^3, phi^2 = e^2 + i e^4",
                                params, lie, AlmostComplexCoframe({row(1, 0, kI, GaussRational(alpha)), row(0, 1, 0, kI)}));
    e.reference_b2 = 2;
    e.reference_b_minus = 1;
    e.nilpotent = true;
    e.expected_condition = "Re(u) = alpha * r^2";
    e.expected_delta = [alpha](const MetricParams& m) { return m.u().re == alpha * m.r2(); };
    e.expected_ak_condition = "Re(u) = alpha * r^2";
    e.expected_ak = e.expected_delta;
    e.parameter_domain = domain;
    return e;
  }

  // primary_kodaira_II
  Rational beta = require_real(params, name, "beta", domain);
  if (sgn(beta) == 0) throw std::invalid_argument("primary_kodaira_II requires beta != 0");
  LieStructure lie = heisenberg_times_r();
  lie.set_name(name);
  CatalogEntry e = make_entry(name, "primary Kodaira surface; phi^1 = e^4 + i e^1, phi^2 = e^2 - i beta e^3", params,
                              lie, AlmostComplexCoframe({row(kI, 0, 0, 1), row(0, 1, GaussRational(0, -beta), 0)}));
  e.reference_b2 = 2;
  e.reference_b_minus = 1;
  e.nilpotent = true;
  e.expected_condition = "Im(u) = 0";
  e.expected_delta = im_u_zero;
  e.expected_ak_condition = "Im(u) = 0";
  e.expected_ak = im_u_zero;
  e.parameter_domain = domain;
  return e;
}

}  // namespace invh11
