#include <doctest.h>

#include <json.hpp>

#include "brute.hpp"
#include "oracles.hpp"
#include "thinlie/algebra.hpp"
#include "thinlie/serialize.hpp"

using namespace thinlie;

namespace {
Presentation free_pres(std::uint32_t p) { return {PrimeField(p), {}, {}, Provenance::Custom}; }
Word w(const char* s) { return Word::from_string(s); }
}  // namespace

TEST_CASE("free algebra matches the necklace count") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto d = dims(compute(free_pres(p), 10));
    for (int k = 1; k <= 10; ++k) CHECK(d[k - 1] == oracle::witt(k));
  }
}

TEST_CASE("free algebra satisfies Jacobi and antisymmetry") {
  const GradedAlgebra alg = compute(free_pres(5), 7);
  CHECK(brute::jacobi_violations(alg, 7) == 0);
  CHECK(brute::antisymmetry_violations(alg) == 0);
}

TEST_CASE("family algebra satisfies Jacobi and antisymmetry") {
  const GradedAlgebra alg = compute(build_theorem41(3, 1, 1), 12);
  CHECK(alg.dim(5) == 2);
  CHECK(brute::jacobi_violations(alg, 12) == 0);
  CHECK(brute::antisymmetry_violations(alg) == 0);
}

TEST_CASE("types 1..6 keep Jacobi") {
  for (std::int64_t lambda = 1; lambda <= 6; ++lambda) {
    const GradedAlgebra alg = compute(build_minus1(7, 1, 3, lambda), 20);
    CAPTURE(lambda);
    CHECK(brute::jacobi_violations(alg, 20) == 0);
  }
}

TEST_CASE("a single relator in degree three") {
  const GradedAlgebra alg = compute(parse_relators("p=3\n[y,x,y]\n"), 4);
  CHECK(alg.dim(2) == 1);
  CHECK(alg.dim(3) == 1);
  CHECK(evaluate_word(alg, w("yxy")).is_zero());
}

TEST_CASE("word evaluation") {
  const GradedAlgebra alg = thin_core(compute(build_theorem41(3, 1, 1), 12));
  CHECK(evaluate_word(alg, w("x")) == alg.generator(Letter::X));
  CHECK(evaluate_word(alg, w("yy")).is_zero());
  CHECK(evaluate_word(alg, w("yxy")).is_zero());
  CHECK(bracket(alg, alg.generator(Letter::X), alg.generator(Letter::Y)) == evaluate_word(alg, w("xy")));
  CHECK(add(alg, evaluate_word(alg, w("xy")), evaluate_word(alg, w("yx"))).is_zero());
  for (const auto& r : build_theorem41(3, 1, 1).relators)
    if (r.degree() <= 10) CHECK(evaluate_relator(alg, r).is_zero());
  CHECK_THROWS_AS(evaluate_word(alg, w("yxxxxxxxxxxx")), AlgebraError);
}

TEST_CASE("maximality") {
  const Presentation base = build_theorem41(3, 1, 1);
  const auto d0 = dims(compute(base, 14));
  Presentation trivial = base;
  trivial.relators.emplace_back(base.field, w("xx"));
  CHECK(dims(compute(trivial, 14)) == d0);
  Presentation more = base;
  more.relators.emplace_back(base.field, v_word(3, 3));
  const auto d1 = dims(compute(more, 14));
  for (std::size_t i = 0; i < d0.size(); ++i) CHECK(d1[i] <= d0[i]);
  CHECK(d1 != d0);
}

TEST_CASE("construction is deterministic") {
  const GradedAlgebra a = compute(build_theorem41(5, 1, 1), 30);
  const GradedAlgebra b = compute(build_theorem41(5, 1, 1), 30);
  CHECK(algebra_to_json(a).dump() == algebra_to_json(b).dump());
}

TEST_CASE("compute contract") {
  CHECK_THROWS_AS(compute(free_pres(3), 1), AlgebraError);
  CHECK_THROWS_AS(compute(build_theorem41(3, 1, 1), 9), AlgebraError);
}

TEST_CASE("graded centre") {
  const GradedAlgebra free = compute(free_pres(3), 6);
  for (int d = 1; d < 5; ++d) CHECK(graded_center_component(free, d).empty());
  CHECK_THROWS_AS(graded_center_component(free, 6), AlgebraError);
  const GradedAlgebra n = compute(build_theorem41(3, 1, 1), 12);
  CHECK(graded_center_component(n, 3).size() >= 1);
}

TEST_CASE("thin core") {
  const GradedAlgebra n = compute(build_theorem41(3, 1, 1), 23);
  const GradedAlgebra core = thin_core(n);
  const auto d = dims(core);
  REQUIRE(d.size() == 21);
  for (int k = 2; k <= 21; ++k) {
    CAPTURE(k);
    const bool diamond = k % 2 == 1 && k >= 5 && k <= 19;
    CHECK(d[k - 1] == (diamond ? 2 : 1));
  }
  CHECK(dims(thin_core(core, 20)) == std::vector<Index>(d.begin(), d.begin() + 20));
  for (Index x : d) CHECK(x <= 2);
}

TEST_CASE("collapse") {
  const GradedAlgebra core = thin_core(compute(build_minus1(5, 1, 4, 1), 28));
  CHECK(core.dim(23) == 0);
  for (int k = 23; k <= core.max_degree(); ++k) CHECK(core.dim(k) == 0);
  CHECK(core.dim(22) == 1);
  ComputeOptions stop;
  stop.stop_at_collapse = true;
  const GradedAlgebra early = compute(build_minus1(5, 1, 4, 1), 40, stop);
  CHECK(dims(early).back() == 0);
}

TEST_CASE("quotient and truncate") {
  const GradedAlgebra free = compute(free_pres(3), 5);
  const GradedAlgebra t = truncate(free, 3);
  CHECK(dims(t) == std::vector<Index>{2, 1, 2});
  // ideal generated by [y,x,y]
  std::vector<std::vector<Vec>> ideal(5);
  HomElement g = evaluate_word(free, w("yxy"));
  ideal[2].push_back(g.coeffs);
  for (int d = 3; d < 5; ++d)
    for (const Vec& v : std::vector<Vec>(ideal[d - 1])) {
      ideal[d].push_back(act(free, {d, v}, Letter::X).coeffs);
      ideal[d].push_back(act(free, {d, v}, Letter::Y).coeffs);
    }
  const GradedAlgebra qa = quotient(free, ideal, 5);
  CHECK(dims(qa) == dims(compute(parse_relators("p=3\n[y,x,y]\n"), 5)));
}

TEST_CASE("algebra JSON round trip") {
  const GradedAlgebra a = thin_core(compute(build_theorem41(3, 1, 1), 15));
  const nlohmann::json j = algebra_to_json(a);
  const GradedAlgebra b = algebra_from_json(j);
  CHECK(dims(b) == dims(a));
  CHECK(algebra_to_json(b) == j);
  for (int d1 = 1; d1 < a.max_degree(); ++d1)
    for (int d2 = 1; d1 + d2 <= a.max_degree(); ++d2)
      for (Index i = 0; i < a.dim(d1); ++i)
        for (Index k = 0; k < a.dim(d2); ++k) CHECK(a.product(d1, i, d2, k) == b.product(d1, i, d2, k));
  nlohmann::json broken = j;
  broken["schema"] = "other";
  CHECK_THROWS_AS(algebra_from_json(broken), FormatError);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json::object()), FormatError);
}
