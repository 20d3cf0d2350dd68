#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinlie/algebra.hpp"

namespace thinlie {

enum class DiamondKind {
  Chain,
  GenuineFinite,
  GenuineInfinite,
  Fake,
  BoundaryIndeterminate,
  Untypable,
};

std::string to_string(DiamondKind k);
inline bool is_genuine(DiamondKind k) {
  return k == DiamondKind::GenuineFinite || k == DiamondKind::GenuineInfinite;
}

/// Generators of L_1 in coordinates (x, y) of the computed basis.
struct Generators {
  Vec x;
  Vec y;
};

Generators standard_generators();

struct DiamondRecord {
  int degree = 0;
  Index dim = 0;
  DiamondKind kind = DiamondKind::Chain;
  /// Finite type; set only for GenuineFinite.
  std::optional<Residue> lambda;
  /// Spans the preceding component when that component is one-dimensional.
  std::optional<HomElement> witness_w;
  std::string note;
};

struct CentralizerInfo {
  int degree = 0;
  /// Basis of C_{L_1}(L_k) in (x, y) coordinates; 0, 1 or 2 vectors.
  std::vector<Vec> basis;
};

struct AnalysisOptions {
  /// Widest component whose lines are enumerated by check_covering.
  Index max_line_dim = 2;
  /// Above this modulus covering uses basis lines plus a seeded random sample.
  std::uint32_t max_exhaustive_p = 97;
  std::size_t sample_lines = 64;
  /// q = p^n; inferred from the second diamond when absent.
  std::optional<std::uint64_t> q;
  /// Generators to type diamonds with; normalize_generators when absent.
  std::optional<Generators> generators;
};

struct ThinReport {
  int max_degree = 0;
  std::vector<Index> dims;
  std::vector<DiamondRecord> records;
  std::vector<CentralizerInfo> centralizers;
  /// Largest d such that covering holds in every degree 1..d (0 if none).
  int covering_ok_upto = 0;
  bool covering_sampled = false;
  /// First degree with a zero component, if any in range.
  std::optional<int> collapse_degree;
  /// Degree one, then every genuine or fake diamond, ascending.
  std::vector<int> diamond_degrees;
  std::vector<int> diamond_distances;
  std::optional<std::uint64_t> q;
  Generators generators;
  bool normalized = false;
  /// Structural findings: failures of covering, untypable diamonds, chain
  /// components not centralized by y.
  std::vector<std::string> findings;
  /// True when findings include untypable diamonds or covering failures.
  bool has_structural_findings = false;
};

/// True iff span{[u, x], [u, y]} = L_{d+1} for every line <u> of L_d.
/// Throws AlgebraError when L_d is wider than opts.max_line_dim.
bool check_covering(const GradedAlgebra& alg, int d, const AnalysisOptions& opts = {});
/// As check_covering; sets `sampled` when only a sample of lines was tested.
bool check_covering(const GradedAlgebra& alg, int d, const AnalysisOptions& opts, bool& sampled);

/// C_{L_1}(L_k) = {a in L_1 : [b, a] = 0 for all b in L_k}.
std::vector<Vec> two_step_centralizer(const GradedAlgebra& alg, int k);

/// y' spans C_{L_1}(L_2); x' is the first of x, y outside <y'>.
Generators normalize_generators(const GradedAlgebra& alg);

/// Type of the component L_h against the generators; q enables fake
/// diamond detection at degrees congruent to 1 mod q - 1.
DiamondRecord classify_component(const GradedAlgebra& alg, int h, const Generators& gens,
                                 std::optional<std::uint64_t> q = std::nullopt);
DiamondRecord classify_component(const GradedAlgebra& alg, int h);

/// q from the second diamond in degree 2q - 1, when that is a power of p.
std::optional<std::uint64_t> infer_q(const GradedAlgebra& alg);

ThinReport full_report(const GradedAlgebra& alg, const AnalysisOptions& opts = {});

struct ChainCheck {
  bool hypothesis = true;        ///< y centralizes T_{m-q+2} .. T_{m-2}
  bool centralized = true;       ///< y centralizes T_{m+1} .. T_{m+q-3}
  bool no_early_diamond = true;  ///< T_{m+1} .. T_{m+q-2} at most one-dimensional
  bool ok() const { return centralized && no_early_diamond; }
};

/// Distance and centralization assertions after the genuine diamond T_m.
ChainCheck chain_check(const GradedAlgebra& alg, int m, std::uint64_t q, const Generators& gens);
/// Throws AlgebraError if T_m is not genuine or the hypothesis fails.
bool check_chain_theorem(const GradedAlgebra& alg, int m, std::uint64_t q, const Generators& gens);

/// Whether every element of L_k is killed by bracketing with a.
bool centralizes(const GradedAlgebra& alg, int k, const Vec& a);

}  // namespace thinlie
