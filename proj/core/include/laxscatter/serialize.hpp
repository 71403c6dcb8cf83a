#pragma once

// JSON and CSV forms of the library's value types. Complex numbers are
// [re, im] pairs; field order is fixed so identical inputs give identical bytes.

#include <istream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "laxscatter/inner.hpp"
#include "laxscatter/laguerre.hpp"
#include "laxscatter/pipeline.hpp"

namespace laxscatter {

using ojson = nlohmann::ordered_json;

// Malformed or ill-typed serialized input.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ojson to_json(cplx z);
ojson to_json(const UpperInner& psi);
ojson to_json(const RatioFunction& ratio);
ojson to_json(const PotentialSpec& p);
ojson to_json(const Eigen::MatrixXcd& m);  // row-major
ojson to_json(const ScatteringReport& report);

// {"base": [...], "new": [...], "modified": [...], "boundary_essential": [...]}
ojson singularities_json(const ScatteringReport& report);

// {"blaschke_zeros":[[re,im],...], "exp_alpha":a, "singular_atoms":[[t,mass],...], "const":[re,im]}
// Missing fields default to the trivial factor.
UpperInner upper_inner_from_json(const nlohmann::json& j);

// {"poly_coeffs":[...], "angular_k":0}
PotentialSpec potential_from_json(const nlohmann::json& j);

// Header "delta,re,im,abs,arg", one row per boundary sample, %.17g numbers.
std::string boundary_csv(const ScatteringReport& report);

// Reads "delta,re,im[,...]" rows (header required) into baseline samples.
SampledBaseline read_baseline_csv(std::istream& in, std::vector<cplx> singularities = {});

}  // namespace laxscatter
