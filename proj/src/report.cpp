#include "invh11/report.hpp"

#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace invh11 {

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

json rational_matrix(const Matrix<Rational>& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

template <class S>
json form_json(const Form<S>& f) {
  json out = json::object();
  for (const auto& [w, c] : f.terms()) out[w.label(f.frame())] = to_string(c);
  return out;
}

std::string metric_text(const MetricParams& m) {
  std::string s = "r^2 = " + to_string(m.r2()) + ", s^2 = " + to_string(m.s2()) + ", u = " + to_string(m.u());
  return s;
}

json metric_json(const MetricParams& m) {
  return {{"r2", to_string(m.r2())}, {"s2", to_string(m.s2())}, {"u_re", to_string(m.u().re)}, {"u_im", to_string(m.u().im)}};
}

std::string pad(const std::string& s, std::size_t width) { return s.size() >= width ? s : s + std::string(width - s.size(), ' '); }

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

}  // namespace

json validation_to_json(const ValidationReport& v) {
  json out = {{"ok", v.ok()}, {"structure_ok", v.structure_ok}, {"d_squared_ok", v.d_squared_ok},
              {"d_squared_failures", v.d_squared_failures}, {"coframe_ok", v.coframe_ok}};
  if (!v.structure_message.empty()) out["structure_message"] = v.structure_message;
  if (!v.coframe_message.empty()) out["coframe_message"] = v.coframe_message;
  if (v.metric_ok) {
    out["metric_ok"] = *v.metric_ok;
    if (!v.metric_message.empty()) out["metric_message"] = v.metric_message;
  }
  return out;
}

json decision_to_json(const DecisionReport& d) {
  json out = {{"delta", d.delta},
              {"h11", d.h11},
              {"backend", backend_name(d.backend)},
              {"tolerance", d.tolerance},
              {"b_minus", {{"used", d.b_minus_used}, {"source", b_minus_source_name(d.b_minus_source)}}}};
  out["b_minus"]["ce_computed"] = d.b_minus_ce ? json(*d.b_minus_ce) : json(nullptr);
  out["b_minus"]["paper_reference"] = d.b_minus_reference ? json(*d.b_minus_reference) : json(nullptr);
  out["b_minus"]["discrepancy"] = d.b_minus_discrepancy;
  if (d.b_minus_ce) out["h11_ce_computed"] = *d.b_minus_ce + d.delta;
  if (d.b_minus_reference) out["h11_paper_reference"] = *d.b_minus_reference + d.delta;

  json sys = json::array();
  for (int r = 0; r < d.system.matrix.rows(); ++r) {
    json coeffs = json::array();
    for (int c = 0; c < 3; ++c) coeffs.push_back(to_string(d.system.matrix(r, c)));
    sys.push_back({{"row", d.system.row_labels[static_cast<std::size_t>(r)]},
                   {"coefficients", coeffs},
                   {"rhs", to_string(d.system.rhs[static_cast<std::size_t>(r)])}});
  }
  out["system"] = {{"unknowns", json::array({"A", "B' = B tau", "C' = C tau"})}, {"rows", sys}};

  if (d.exact) {
    const ExactVerdict& e = *d.exact;
    json ex = {{"delta", e.delta}, {"rank_matrix", e.ranks.rank_matrix}, {"rank_augmented", e.ranks.rank_augmented}};
    if (e.witness) {
      ex["witness"] = {{"A", to_string((*e.witness)[0])}, {"B", to_string((*e.witness)[1])}, {"C", to_string((*e.witness)[2])}};
      ex["scaled_witness"] = {{"A", to_string((*e.scaled_witness)[0])},
                              {"B'", to_string((*e.scaled_witness)[1])},
                              {"C'", to_string((*e.scaled_witness)[2])}};
      ex["residual_dc_zero"] = e.dc_residual_zero;
      ex["residual_star_zero"] = e.star_residual_zero;
    }
    if (e.certificate) {
      json y = json::array();
      for (const auto& c : *e.certificate) y.push_back(to_string(c));
      ex["certificate"] = {{"left_null_vector", y}, {"meaning", "y^T M = 0 and y^T v != 0"}};
    }
    out["exact"] = ex;
  }
  if (d.floating) {
    const FloatVerdict& f = *d.floating;
    json fl = {{"delta", f.delta},
               {"rank_matrix", f.ranks.rank_matrix},
               {"rank_augmented", f.ranks.rank_augmented},
               {"singular_values", f.singular_values},
               {"least_squares_residual", f.least_squares_residual},
               {"tolerance", d.tolerance}};
    if (f.witness) {
      fl["witness"] = {{"A", complex_pair((*f.witness)[0])}, {"B", complex_pair((*f.witness)[1])}, {"C", complex_pair((*f.witness)[2])}};
      fl["residual_dc"] = f.dc_residual;
      fl["residual_star"] = f.star_residual;
    }
    out["float"] = fl;
  }
  out["notes"] = d.notes;
  return out;
}

json cohomology_to_json(const CohomologyReport& c) {
  json reps = json::array();
  for (const auto& f : c.h2_basis) reps.push_back(to_string(f));
  json out = {{"betti", c.betti}, {"h2_basis", reps}, {"unimodular", c.unimodular}};
  if (c.unimodular) {
    out["intersection_matrix"] = rational_matrix(c.intersection_matrix);
    out["orientation"] = "e^{1234}";
    out["b_plus"] = c.b_plus;
    out["b_minus"] = c.b_minus;
  } else {
    out["intersection_matrix"] = nullptr;
  }
  return out;
}

json almost_kahler_to_json(const AlmostKahlerVerdict& v) {
  json kernel = json::array();
  for (const auto& k : v.kernel) {
    json row = json::array();
    for (const auto& x : k) row.push_back(to_string(x));
    kernel.push_back(row);
  }
  json out = {{"verdict", feasibility_name(v.verdict)},
              {"unknowns", json::array({"r^2", "s^2", "Re u", "Im u"})},
              {"constraints", rational_matrix(v.constraints)},
              {"solution_space", kernel},
              {"restricted_inertia", {{"positive", v.restricted_positive}, {"negative", v.restricted_negative}, {"zero", v.restricted_zero}}}};
  if (v.witness) {
    out["witness"] = metric_json(*v.witness);
    out["witness_verified"] = v.witness_verified;
  }
  if (!v.certificate.empty()) out["certificate"] = v.certificate;
  return out;
}

json symplectic_to_json(const SymplecticVerdict& v) {
  json basis = json::array();
  for (const auto& f : v.closed_basis) basis.push_back(to_string(f));
  json out = {{"verdict", feasibility_name(v.verdict)}, {"closed_2_forms", basis}, {"gram", rational_matrix(v.gram)}};
  if (v.witness) {
    out["witness"] = to_string(*v.witness);
    out["witness_verified"] = v.witness_verified;
  }
  if (!v.certificate.empty()) out["certificate"] = v.certificate;
  return out;
}

json operator_tables_to_json(const ResolvedStructure& s) {
  AlmostComplexStructure<GaussRational> acs(s.lie, s.coframe);
  const GaussRational four_i(0, 4);
  json d = json::object();
  for (const char* w : {"phi^{1}", "phi^{2}"}) {
    auto f = Form<GaussRational>::basis(FrameTag::Complex, parse_word(w, FrameTag::Complex));
    d[std::string("d ") + w] = form_json(acs.d(f));
  }
  json rows = json::array();
  for (BasisWord w : words_of_bidegree(1, 1)) {
    auto f = Form<GaussRational>::basis(FrameTag::Complex, w);
    rows.push_back({{"form", w.label(FrameTag::Complex)},
                    {"4i del", form_json(four_i * del(acs, f))},
                    {"4i delbar", form_json(four_i * delbar(acs, f))}});
  }
  json de = json::object();
  for (int i = 1; i <= 4; ++i) de["d e^" + std::to_string(i)] = form_json(s.lie.differential<GaussRational>(i));
  return {{"structure_equations", de}, {"d_phi", d}, {"del_delbar_11", rows}};
}

json catalog_listing_to_json() {
  json out = json::array();
  for (const auto& info : catalog_names())
    out.push_back({{"name", info.name}, {"parameters", info.parameters}, {"domain", info.parameter_domain}});
  return out;
}

json catalog_entry_to_json(const CatalogEntry& e) {
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = to_string(v);
  json coframe = json::array();
  for (const auto& row : e.coframe.rows()) {
    json r = json::array();
    for (const auto& z : row) r.push_back(to_string(z));
    coframe.push_back(r);
  }
  return {{"name", e.name},
          {"description", e.description},
          {"params", params},
          {"domain", e.parameter_domain},
          {"coframe", coframe},
          {"nilpotent", e.nilpotent},
          {"reference_b2", e.reference_b2},
          {"reference_b_minus", e.reference_b_minus},
          {"expected_condition", e.expected_condition},
          {"expected_almost_kahler_condition", e.expected_ak_condition}};
}

std::string format_validation(const ValidationReport& v) {
  std::ostringstream os;
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  if (!v.structure_ok) os << "structure      FAIL  " << v.structure_message << "\n";
  os << "d^2 = 0        " << mark(v.d_squared_ok) << "\n";
  for (const auto& f : v.d_squared_failures) os << "                 " << f << "\n";
  os << "coframe        " << mark(v.coframe_ok);
  if (!v.coframe_message.empty()) os << "  " << v.coframe_message;
  os << "\n";
  if (v.metric_ok) {
    os << "metric         " << mark(*v.metric_ok);
    if (!v.metric_message.empty()) os << "  " << v.metric_message;
    os << "\n";
  }
  return os.str();
}

std::string format_decision(const DecisionReport& d) {
  std::ostringstream os;
  os << "harmonic system (unknowns A, B' = B tau, C' = C tau)\n";
  for (int r = 0; r < d.system.matrix.rows(); ++r) {
    os << "  " << pad(d.system.row_labels[static_cast<std::size_t>(r)], 34) << " [";
    for (int c = 0; c < 3; ++c) os << (c ? ", " : "") << to_string(d.system.matrix(r, c));
    os << "] = " << to_string(d.system.rhs[static_cast<std::size_t>(r)]) << "\n";
  }
  if (d.exact) {
    const auto& e = *d.exact;
    os << "exact backend:  delta = " << e.delta << "  (rank M = " << e.ranks.rank_matrix
       << ", rank [M|v] = " << e.ranks.rank_augmented << ")\n";
    if (e.witness) {
      os << "  witness A = " << to_string((*e.witness)[0]) << ", B = " << to_string((*e.witness)[1])
         << ", C = " << to_string((*e.witness)[2]) << "\n";
      os << "  i d^c gamma - d omega = 0: " << (e.dc_residual_zero ? "yes" : "NO")
         << ";  *gamma + gamma = 0: " << (e.star_residual_zero ? "yes" : "NO") << "\n";
    }
  }
  if (d.floating) {
    const auto& f = *d.floating;
    os << "float backend:  delta = " << f.delta << "  (rank M = " << f.ranks.rank_matrix
       << ", rank [M|v] = " << f.ranks.rank_augmented << ", residual " << sci(f.least_squares_residual)
       << ", tolerance " << sci(d.tolerance) << ")\n";
    if (f.witness) {
      os << "  witness A = " << to_string((*f.witness)[0]) << ", B = " << to_string((*f.witness)[1])
         << ", C = " << to_string((*f.witness)[2]) << "\n";
      os << "  residuals: d^c " << sci(f.dc_residual) << ", star " << sci(f.star_residual) << "\n";
    }
  }
  os << "b^-: " << d.b_minus_used << " (" << b_minus_source_name(d.b_minus_source) << ");  reference "
     << (d.b_minus_reference ? std::to_string(*d.b_minus_reference) : "n/a") << ", invariant cohomology "
     << (d.b_minus_ce ? std::to_string(*d.b_minus_ce) : "undefined") << (d.b_minus_discrepancy ? "  [DISCREPANCY]" : "")
     << "\n";
  os << "delta = " << d.delta << ", h^{1,1} = " << d.h11;
  if (d.b_minus_discrepancy) {
    os << "  (reference: " << *d.b_minus_reference + d.delta << ", invariant cohomology: " << *d.b_minus_ce + d.delta
       << ")";
  }
  os << "\n";
  for (const auto& n : d.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string format_cohomology(const CohomologyReport& c) {
  std::ostringstream os;
  os << "invariant Betti numbers:";
  for (int b : c.betti) os << " " << b;
  os << "\n";
  for (const auto& f : c.h2_basis) os << "  H^2 representative: " << to_string(f) << "\n";
  if (c.unimodular) {
    os << "  intersection form (e^{1234}):";
    for (int r = 0; r < c.intersection_matrix.rows(); ++r) {
      os << (r ? "; " : " ");
      for (int k = 0; k < c.intersection_matrix.cols(); ++k) os << (k ? " " : "") << to_string(c.intersection_matrix(r, k));
    }
    os << "\n  b^+ = " << c.b_plus << ", b^- = " << c.b_minus << "\n";
  } else {
    os << "  not unimodular (b^4 = 0): no intersection form\n";
  }
  return os.str();
}

std::string format_almost_kahler(const AlmostKahlerVerdict& v) {
  std::ostringstream os;
  os << "almost Kaehler: " << feasibility_name(v.verdict);
  if (v.witness) os << "  witness " << metric_text(*v.witness) << (v.witness_verified ? " (d omega = 0 verified)" : "");
  os << "\n";
  if (!v.certificate.empty()) os << "  " << v.certificate << "\n";
  return os.str();
}

std::string format_symplectic(const SymplecticVerdict& v) {
  std::ostringstream os;
  os << "symplectic: " << feasibility_name(v.verdict);
  if (v.witness) os << "  witness " << to_string(*v.witness) << (v.witness_verified ? " (closed, nondegenerate)" : "");
  os << "\n";
  if (!v.certificate.empty()) os << "  " << v.certificate << "\n";
  return os.str();
}

std::string format_operator_tables(const ResolvedStructure& s) {
  AlmostComplexStructure<GaussRational> acs(s.lie, s.coframe);
  const GaussRational four_i(0, 4);
  std::ostringstream os;
  for (int i = 1; i <= 4; ++i) os << "d e^" << i << " = " << to_string(s.lie.differential<GaussRational>(i)) << "\n";
  for (const char* w : {"phi^{1}", "phi^{2}"}) {
    auto f = Form<GaussRational>::basis(FrameTag::Complex, parse_word(w, FrameTag::Complex));
    os << "d " << w << " = " << to_string(acs.d(f)) << "\n";
  }
  for (BasisWord w : words_of_bidegree(1, 1)) {
    auto f = Form<GaussRational>::basis(FrameTag::Complex, w);
    os << "4i del " << pad(w.label(FrameTag::Complex), 11) << " = " << pad(to_string(four_i * del(acs, f)), 36)
       << "4i delbar " << pad(w.label(FrameTag::Complex), 11) << " = " << to_string(four_i * delbar(acs, f)) << "\n";
  }
  return os.str();
}

std::string format_catalog_listing() {
  std::ostringstream os;
  for (const auto& info : catalog_names()) os << pad(info.name, 20) << info.parameter_domain << "\n";
  return os.str();
}

std::string format_catalog_entry(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.name << ": " << e.description << "\n";
  os << "  parameters: " << e.parameter_domain << "\n";
  for (const auto& [k, v] : e.params) os << "    " << k << " = " << to_string(v) << "\n";
  os << "  reference b^2 = " << e.reference_b2 << ", b^- = " << e.reference_b_minus << (e.nilpotent ? " (nilpotent)" : "")
     << "\n";
  os << "  h^{1,1} = b^- + 1 iff: " << e.expected_condition << "\n";
  os << "  almost Kaehler iff: " << e.expected_ak_condition << "\n";
  return os.str();
}

SweepResult run_sweep(const ResolvedStructure& s, const SweepSpec& grid, const DecisionOptions& options,
                      unsigned threads) {
  SweepResult res;
  res.u_re = sweep_axis(grid.u_re_lo, grid.u_re_hi, grid.steps_re);
  res.u_im = sweep_axis(grid.u_im_lo, grid.u_im_hi, grid.steps_im);
  const std::size_t cols = res.u_re.size();
  const std::size_t total = cols * res.u_im.size();
  res.cells.assign(res.u_im.size(), std::vector<SweepCell>(cols));
  // Errors are kept per cell so the first one in grid order is reported.
  std::vector<std::exception_ptr> errors(total);

  const Rational r2 = grid.r * grid.r, s2 = grid.s * grid.s;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t n = next++; n < total; n = next++) {
      std::size_t row = n / cols, col = n % cols;
      GaussRational u(res.u_re[col], res.u_im[row]);
      SweepCell& cell = res.cells[row][col];
      if (!metric_is_valid(r2, s2, u)) continue;
      try {
        DecisionReport d = decide_h11(s.lie, s.coframe, MetricParams::from_squares(r2, s2, u), options, s.entry_ptr());
        cell.valid = true;
        cell.delta = d.delta;
      } catch (...) {
        errors[n] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return res;
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "u_im\\u_re";
  for (const auto& x : r.u_re) os << "," << to_string(x);
  os << "\n";
  for (std::size_t row = 0; row < r.u_im.size(); ++row) {
    os << to_string(r.u_im[row]);
    for (const auto& cell : r.cells[row]) os << "," << (cell.valid ? (cell.delta ? "1" : "0") : "x");
    os << "\n";
  }
  return os.str();
}

}  // namespace invh11
