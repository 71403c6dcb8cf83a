#include "laxscatter/serialize.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace laxscatter {
namespace {

cplx complex_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError(fmt::format("{}: expected [re, im]", what));
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw FormatError(fmt::format("field '{}' must be a number", key));
  return j[key].get<double>();
}

ojson complex_list(const std::vector<cplx>& zs) {
  ojson out = ojson::array();
  for (cplx z : zs) out.push_back(to_json(z));
  return out;
}

}  // namespace

ojson to_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson to_json(const UpperInner& psi) {
  ojson atoms = ojson::array();
  for (const auto& a : psi.singular_atoms()) atoms.push_back(ojson::array({a.point, a.mass}));
  ojson j;
  j["blaschke_zeros"] = complex_list(psi.blaschke_zeros());
  j["exp_alpha"] = psi.exp_alpha();
  j["singular_atoms"] = std::move(atoms);
  j["const"] = to_json(psi.unimodular_const());
  return j;
}

ojson to_json(const RatioFunction& ratio) {
  ojson j;
  j["source"] = to_json(ratio.source());
  j["zeros_lower"] = complex_list(ratio.zeros_lower());
  j["boundary_essential"] = ratio.boundary_essential();
  j["exp_alpha2"] = ratio.exp_alpha2();
  return j;
}

ojson to_json(const PotentialSpec& p) {
  ojson j;
  j["poly_coeffs"] = p.poly_coeffs;
  j["angular_k"] = p.angular_k;
  return j;
}

ojson to_json(const Eigen::MatrixXcd& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson singularities_json(const ScatteringReport& report) {
  ojson j;
  j["base"] = complex_list(report.singularities_base);
  j["new"] = complex_list(report.singularities_new);
  j["modified"] = complex_list(report.singularities_modified);
  j["boundary_essential"] = report.boundary_singularities;
  return j;
}

ojson to_json(const ScatteringReport& report) {
  const Psi0Trace& t = report.psi0_trace;
  ojson trace;
  trace["laguerre_alphas"] = t.expansion.alphas;
  trace["gamma"] = complex_list(t.gamma.coeffs());
  trace["g"] = complex_list(t.dss.g.coeffs());
  trace["phi_power"] = t.dss.phi_power;
  trace["dss_residual"] = t.dss_residual;

  ojson samples = ojson::array();
  for (const auto& s : report.boundary_samples) {
    samples.push_back(ojson::array({s.delta, s.value.real(), s.value.imag()}));
  }

  const DecayEvidence& ev = report.decay_evidence;
  ojson decay;
  decay["dim"] = ev.dim;
  decay["spectral_radius"] = ev.spectral_radius;
  decay["predicted_steps"] = ev.predicted_steps;
  decay["norms"] = ev.norms;

  ojson j;
  j["psi0_trace"] = std::move(trace);
  j["psi0"] = to_json(report.psi0);
  j["psi1"] = to_json(report.psi1);
  j["singularities"] = singularities_json(report);
  j["boundary_samples"] = std::move(samples);
  j["two_path_deviation"] = report.two_path_deviation;
  j["decay_evidence"] = std::move(decay);
  j["notes"] = report.notes;
  return j;
}

UpperInner upper_inner_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("inner function: expected a JSON object");
  std::vector<cplx> zeros;
  if (j.contains("blaschke_zeros")) {
    if (!j["blaschke_zeros"].is_array()) throw FormatError("blaschke_zeros must be an array");
    for (const auto& z : j["blaschke_zeros"]) zeros.push_back(complex_from_json(z, "blaschke_zeros"));
  }
  std::vector<SingularAtom> atoms;
  if (j.contains("singular_atoms")) {
    if (!j["singular_atoms"].is_array()) throw FormatError("singular_atoms must be an array");
    for (const auto& a : j["singular_atoms"]) {
      const cplx pair = complex_from_json(a, "singular_atoms");
      atoms.push_back({pair.real(), pair.imag()});
    }
  }
  const double alpha = number_field(j, "exp_alpha", 0.0);
  const cplx c = j.contains("const") ? complex_from_json(j["const"], "const") : cplx{1.0, 0.0};
  return UpperInner(std::move(zeros), alpha, std::move(atoms), c);
}

PotentialSpec potential_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("poly_coeffs") || !j["poly_coeffs"].is_array()) {
    throw FormatError("potential: expected {\"poly_coeffs\": [...], \"angular_k\": k}");
  }
  PotentialSpec p;
  for (const auto& c : j["poly_coeffs"]) {
    if (!c.is_number()) throw FormatError("poly_coeffs entries must be numbers");
    p.poly_coeffs.push_back(c.get<double>());
  }
  if (j.contains("angular_k")) {
    if (!j["angular_k"].is_number_integer() || j["angular_k"].get<int>() < 0) {
      throw FormatError("angular_k must be a non-negative integer");
    }
    p.angular_k = j["angular_k"].get<int>();
  }
  return p;
}

std::string boundary_csv(const ScatteringReport& report) {
  std::string out = "delta,re,im,abs,arg\n";
  for (const auto& s : report.boundary_samples) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", s.delta, s.value.real(),
                       s.value.imag(), std::abs(s.value), std::arg(s.value));
  }
  return out;
}

SampledBaseline read_baseline_csv(std::istream& in, std::vector<cplx> singularities) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("delta,re,im", 0) != 0) {
    throw FormatError("baseline CSV: header must start with 'delta,re,im'");
  }
  std::vector<SampledBaseline::Sample> samples;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    double v[3];
    for (double& x : v) {
      std::string cell;
      if (!std::getline(fields, cell, ',')) {
        throw FormatError(fmt::format("baseline CSV row {}: expected delta,re,im", row));
      }
      try {
        x = std::stod(cell);
      } catch (const std::exception&) {
        throw FormatError(fmt::format("baseline CSV row {}: '{}' is not a number", row, cell));
      }
    }
    samples.push_back({v[0], {v[1], v[2]}});
  }
  return SampledBaseline(std::move(samples), std::move(singularities));
}

}  // namespace laxscatter
