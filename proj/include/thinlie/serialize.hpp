#pragma once

#include <json.hpp>

#include <string>

#include "thinlie/algebra.hpp"
#include "thinlie/analysis.hpp"

namespace thinlie {

inline constexpr const char* kAlgebraSchema = "thinlie.algebra/1";
inline constexpr const char* kReportSchema = "thinlie.report/1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j, const PrimeField& f);

/// Per-degree basis labels and action tables; structure constants are
/// re-derived on load.
nlohmann::json algebra_to_json(const GradedAlgebra& alg);
GradedAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ThinReport& rep, const PrimeField& f);
std::string report_to_text(const ThinReport& rep, const PrimeField& f);

/// "0", "<y>", "<x + 2y>", "L_1"
std::string describe_subspace(const std::vector<Vec>& basis);

}  // namespace thinlie
