#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinlie/algebra.hpp"
#include "thinlie/analysis.hpp"

namespace thinlie {

class HarnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One expected-versus-observed comparison.
struct Check {
  std::string item;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct ExperimentResult {
  std::string name;
  std::map<std::string, std::int64_t> params;
  /// Plain statement of what is being verified.
  std::string claim;
  bool pass = false;
  std::vector<Check> checks;
  double runtime_seconds = 0.0;

  void add(std::string item, std::string expected, std::string observed, bool ok);
  /// Adds an equality check on string renderings.
  void expect_eq(std::string item, const std::string& expected, const std::string& observed);
  void finish() {
    pass = !checks.empty();
    for (const auto& c : checks) pass = pass && c.ok;
  }
};

/// Diamond pattern of the thin algebra of build_theorem41: diamonds in
/// every degree t(q-1)+1, infinite type unless t = r p^s + 1, type r mod p
/// otherwise, fake when r = 0 mod p.
ExperimentResult exp_theorem41(unsigned p, unsigned n, unsigned s, int max_degree);

/// Collapse (or survival) of the (-1)-family with first finite diamond at
/// v_a, routed by the residue of a: odd a not 1 mod p checks [v_a x x] = 0
/// without a type relator; even a not 1 mod p checks the component of degree
/// (a+1)(q-1)+3 vanishes; a = 1 + n' p^s with n' > 1 checks degree
/// (a+p^s)(q-1)+2 vanishes; a = 1 + p^s checks there is no collapse.
ExperimentResult exp_ldies(unsigned p, unsigned n, unsigned a, int max_degree);

/// Adjoint action of v_1 and v_2 on elements next to diamonds.
ExperimentResult exp_lemma_identities(unsigned p, unsigned n, unsigned s, int max_degree);

/// Chain length and type relations after each genuine diamond of a thin
/// algebra; with expect_regular every distance must equal q - 1.
ExperimentResult exp_prop_chains(const GradedAlgebra& alg, std::uint64_t q, bool expect_regular);
ExperimentResult exp_prop_chains(unsigned p, unsigned n, unsigned s, int max_degree);

/// Second diamond in degree 3, 5, q or 2q - 1; with expected set, exactly there.
ExperimentResult exp_second_diamond(const GradedAlgebra& alg, std::uint64_t q,
                                    std::optional<int> expected);
ExperimentResult exp_second_diamond(unsigned p, unsigned n, unsigned s, int max_degree);

/// The odd-k relators [v_k x x] = 0 do not change the thin core.
ExperimentResult exp_superfluity(unsigned p, unsigned n, unsigned a, int max_degree);

/// A named experiment with its parameters, as listed in a manifest.
struct ExperimentSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
};

std::vector<std::string> experiment_names();
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// The canonical grid of parameter sets.
std::vector<ExperimentSpec> default_manifest();
std::vector<ExperimentSpec> manifest_from_json(const nlohmann::json& j);
nlohmann::json manifest_to_json(const std::vector<ExperimentSpec>& specs);

/// Runs specs, possibly concurrently; results keep the manifest order.
std::vector<ExperimentResult> run_all(const std::vector<ExperimentSpec>& specs, unsigned threads = 1);

nlohmann::json result_to_json(const ExperimentResult& r, bool include_timing = true);
std::string result_to_text(const ExperimentResult& r, bool include_timing = true);

}  // namespace thinlie
