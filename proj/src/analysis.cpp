#include "thinlie/analysis.hpp"

#include <random>

namespace thinlie {

std::string to_string(DiamondKind k) {
  switch (k) {
    case DiamondKind::Chain: return "chain";
    case DiamondKind::GenuineFinite: return "genuine-finite";
    case DiamondKind::GenuineInfinite: return "genuine-infinite";
    case DiamondKind::Fake: return "fake";
    case DiamondKind::BoundaryIndeterminate: return "boundary-indeterminate";
    case DiamondKind::Untypable: return "untypable";
  }
  return "untypable";
}

Generators standard_generators() { return {unit_vec(2, 0), unit_vec(2, 1)}; }

namespace {

void require_next(const GradedAlgebra& alg, int d, const char* what) {
  if (d < 1 || d + 1 > alg.max_degree())
    throw AlgebraError(std::string(what) + " in degree " + std::to_string(d) +
                       " needs degree " + std::to_string(d + 1) + ", computed up to " +
                       std::to_string(alg.max_degree()));
}

/// Scales v so that its first nonzero entry is 1.
Vec monic(const Vec& v, const PrimeField& f) {
  const Index lead = leading_index(v);
  return lead < 0 ? v : scaled(v, f.inv(v(lead)), f);
}

/// Lines of F_p^n as vectors with leading entry 1, in lexicographic order.
std::vector<Vec> all_lines(Index n, std::uint32_t p) {
  std::vector<Vec> out;
  for (Index lead = 0; lead < n; ++lead) {
    const Index tail = n - lead - 1;
    std::uint64_t count = 1;
    for (Index i = 0; i < tail; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec v = zero_vec(n);
      v(lead) = 1;
      std::uint64_t rest = c;
      for (Index i = n - 1; i > lead; --i) {
        v(i) = static_cast<Residue>(rest % p);
        rest /= p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

bool check_covering(const GradedAlgebra& alg, int d, const AnalysisOptions& opts) {
  bool sampled = false;
  return check_covering(alg, d, opts, sampled);
}

bool check_covering(const GradedAlgebra& alg, int d, const AnalysisOptions& opts, bool& sampled) {
  require_next(alg, d, "covering");
  sampled = false;
  const Index n = alg.dim(d), target = alg.dim(d + 1);
  if (n == 0) return true;
  if (n > opts.max_line_dim)
    throw AlgebraError("component too wide for line enumeration: dim L_" + std::to_string(d) +
                       " = " + std::to_string(n));
  const auto& f = alg.field();
  std::vector<Vec> lines;
  if (n == 1 || f.modulus() <= opts.max_exhaustive_p) {
    lines = all_lines(n, f.modulus());
  } else {
    sampled = true;
    for (Index i = 0; i < n; ++i) lines.push_back(unit_vec(n, i));
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(d));
    std::uniform_int_distribution<Residue> coord(0, f.modulus() - 1);
    for (std::size_t s = 0; s < opts.sample_lines; ++s) {
      Vec v(n);
      for (Index i = 0; i < n; ++i) v(i) = coord(rng);
      if (!is_zero(v)) lines.push_back(monic(v, f));
    }
  }
  for (const Vec& u : lines) {
    const HomElement e{d, u};
    const Index r = span_rank({act(alg, e, Letter::X).coeffs, act(alg, e, Letter::Y).coeffs},
                              target, f);
    if (r != target) return false;
  }
  return true;
}

std::vector<Vec> two_step_centralizer(const GradedAlgebra& alg, int k) {
  require_next(alg, k, "two-step centralizer");
  const Index n = alg.dim(k), m = alg.dim(k + 1);
  Mat a = Mat::Zero(n * m, 2);
  for (Index j = 0; j < n; ++j)
    for (int g = 0; g < 2; ++g) {
      const Vec& img = alg.action(k, j, g == 0 ? Letter::X : Letter::Y);
      for (Index r = 0; r < m; ++r) a(j * m + r, g) = img(r);
    }
  std::vector<Vec> basis;
  for (const auto& v : nullspace(a, alg.field())) basis.push_back(monic(v, alg.field()));
  return basis;
}

Generators normalize_generators(const GradedAlgebra& alg) {
  const auto c = two_step_centralizer(alg, 2);
  if (c.size() != 1)
    throw AlgebraError("not a (-1)-algebra normal form: C_{L_1}(L_2) has dimension " +
                       std::to_string(c.size()));
  Generators g;
  g.y = c.front();
  const Vec ex = unit_vec(2, 0);
  g.x = proportionality(ex, g.y, alg.field()) ? unit_vec(2, 1) : ex;
  return g;
}

bool centralizes(const GradedAlgebra& alg, int k, const Vec& a) {
  require_next(alg, k, "centralizer check");
  for (Index j = 0; j < alg.dim(k); ++j)
    if (!act(alg, alg.basis_element(k, j), a).is_zero()) return false;
  return true;
}

DiamondRecord classify_component(const GradedAlgebra& alg, int h) {
  return classify_component(alg, h, normalize_generators(alg), infer_q(alg));
}

DiamondRecord classify_component(const GradedAlgebra& alg, int h, const Generators& gens,
                                 std::optional<std::uint64_t> q) {
  if (h < 2) throw AlgebraError("classification starts in degree 2");
  require_next(alg, h, "classification");
  const auto& f = alg.field();
  DiamondRecord rec;
  rec.degree = h;
  rec.dim = alg.dim(h);
  if (rec.dim == 0) throw AlgebraError("component of degree " + std::to_string(h) + " is zero");
  if (rec.dim > 2) {
    rec.kind = DiamondKind::Untypable;
    rec.note = "component wider than two";
    return rec;
  }
  if (alg.dim(h - 1) != 1) {
    rec.kind = rec.dim == 1 ? DiamondKind::Chain : DiamondKind::Untypable;
    if (rec.dim == 2) rec.note = "no one-dimensional predecessor";
    return rec;
  }
  const HomElement w = alg.basis_element(h - 1, 0);
  rec.witness_w = w;
  const HomElement wx = act(alg, w, gens.x), wy = act(alg, w, gens.y);
  const HomElement wxx = act(alg, wx, gens.x), wxy = act(alg, wx, gens.y);
  const HomElement wyx = act(alg, wy, gens.x), wyy = act(alg, wy, gens.y);

  if (rec.dim == 2) {
    if (alg.dim(h + 1) == 0) {
      rec.kind = DiamondKind::BoundaryIndeterminate;
      rec.note = "last nonzero component";
      return rec;
    }
    if (!add(alg, wxy, wyx).is_zero() || !wyy.is_zero()) {
      rec.kind = DiamondKind::Untypable;
      rec.note = "[wxy] + [wyx] = 0 or [wyy] = 0 fails";
      return rec;
    }
    if (wxx.is_zero() && wyx.is_zero()) {
      rec.kind = DiamondKind::BoundaryIndeterminate;
      rec.note = "[wxx] = [wyx] = 0";
      return rec;
    }
    if (wxx.is_zero()) {
      rec.kind = DiamondKind::GenuineInfinite;
      return rec;
    }
    const auto lambda = proportionality(wyx.coeffs, wxx.coeffs, f);
    if (!lambda || *lambda == 0) {
      rec.kind = DiamondKind::Untypable;
      rec.note = lambda ? "type zero on a two-dimensional component"
                        : "[wyx] is not a multiple of [wxx]";
      return rec;
    }
    rec.kind = DiamondKind::GenuineFinite;
    rec.lambda = *lambda;
    return rec;
  }

  const bool pattern_degree = q && *q > 1 && (h - 1) % static_cast<int>(*q - 1) == 0;
  rec.kind = pattern_degree && wy.is_zero() && wxy.is_zero() ? DiamondKind::Fake
                                                              : DiamondKind::Chain;
  return rec;
}

std::optional<std::uint64_t> infer_q(const GradedAlgebra& alg) {
  for (int h = 2; h <= alg.max_degree(); ++h) {
    if (alg.dim(h) == 0) return std::nullopt;
    if (alg.dim(h) < 2) continue;
    if (h % 2 == 0) return std::nullopt;
    const std::uint64_t q = static_cast<std::uint64_t>(h + 1) / 2;
    std::uint64_t pw = alg.field().modulus();
    while (pw < q) pw *= alg.field().modulus();
    return pw == q ? std::optional(q) : std::nullopt;
  }
  return std::nullopt;
}

ThinReport full_report(const GradedAlgebra& alg, const AnalysisOptions& opts) {
  ThinReport rep;
  const int top = alg.max_degree();
  rep.max_degree = top;
  rep.dims = dims(alg);
  rep.q = opts.q ? opts.q : infer_q(alg);

  if (opts.generators) {
    rep.generators = *opts.generators;
    rep.normalized = true;
  } else {
    try {
      rep.generators = normalize_generators(alg);
      rep.normalized = true;
    } catch (const AlgebraError& e) {
      rep.generators = standard_generators();
      rep.findings.push_back(e.what());
    }
  }

  for (int d = 1; d + 1 <= top; ++d) {
    if (alg.dim(d) > opts.max_line_dim) {
      rep.findings.push_back("covering: dim L_" + std::to_string(d) + " = " +
                             std::to_string(alg.dim(d)) + " exceeds line-enumeration cap");
      rep.has_structural_findings = true;
      break;
    }
    bool sampled = false;
    if (!check_covering(alg, d, opts, sampled)) {
      rep.findings.push_back("covering fails in degree " + std::to_string(d));
      rep.has_structural_findings = true;
      break;
    }
    rep.covering_sampled = rep.covering_sampled || sampled;
    rep.covering_ok_upto = d;
  }

  for (int k = 1; k + 1 <= top; ++k) rep.centralizers.push_back({k, two_step_centralizer(alg, k)});

  for (int d = 1; d <= top; ++d)
    if (alg.dim(d) == 0) {
      rep.collapse_degree = d;
      break;
    }

  rep.diamond_degrees.push_back(1);
  for (int h = 2; h + 1 <= top; ++h) {
    if (alg.dim(h) == 0) break;
    DiamondRecord rec = classify_component(alg, h, rep.generators, rep.q);
    if (rec.kind == DiamondKind::Untypable) {
      rep.findings.push_back("untypable component in degree " + std::to_string(h) + ": " + rec.note);
      rep.has_structural_findings = true;
    }
    if (is_genuine(rec.kind) || rec.kind == DiamondKind::Fake) rep.diamond_degrees.push_back(h);
    rep.records.push_back(std::move(rec));
  }
  for (std::size_t i = 1; i < rep.diamond_degrees.size(); ++i)
    rep.diamond_distances.push_back(rep.diamond_degrees[i] - rep.diamond_degrees[i - 1]);

  if (rep.normalized) {
    for (int k = 2; k + 1 <= top; ++k) {
      if (alg.dim(k) != 1 || alg.dim(k + 1) != 1) continue;
      if (!centralizes(alg, k, rep.generators.y))
        rep.findings.push_back("one-dimensional component L_" + std::to_string(k) +
                               " not preceding a diamond is not centralized by y");
    }
  }
  return rep;
}

ChainCheck chain_check(const GradedAlgebra& alg, int m, std::uint64_t q, const Generators& gens) {
  const int qi = static_cast<int>(q);
  if (m + qi - 2 > alg.max_degree())
    throw AlgebraError("chain check after degree " + std::to_string(m) + " needs degree " +
                       std::to_string(m + qi - 2) + ", computed up to " +
                       std::to_string(alg.max_degree()));
  ChainCheck c;
  for (int k = m - qi + 2; k <= m - 2; ++k)
    if (k >= 1 && !centralizes(alg, k, gens.y)) c.hypothesis = false;
  for (int k = m + 1; k <= m + qi - 3; ++k)
    if (!centralizes(alg, k, gens.y)) c.centralized = false;
  for (int k = m + 1; k <= m + qi - 2; ++k)
    if (alg.dim(k) > 1) c.no_early_diamond = false;
  return c;
}

bool check_chain_theorem(const GradedAlgebra& alg, int m, std::uint64_t q, const Generators& gens) {
  const DiamondRecord rec = classify_component(alg, m, gens, q);
  if (!is_genuine(rec.kind))
    throw AlgebraError("degree " + std::to_string(m) + " is not a genuine diamond");
  const ChainCheck c = chain_check(alg, m, q, gens);
  if (!c.hypothesis)
    throw AlgebraError("y does not centralize the chain before degree " + std::to_string(m));
  return c.ok();
}

}  // namespace thinlie
