#include <doctest.h>

#include <algorithm>
#include <random>

#include "thinlie/linalg.hpp"

using namespace thinlie;

namespace {
Vec vec(std::initializer_list<Residue> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Residue x : xs) v(i++) = x;
  return v;
}
}  // namespace

TEST_CASE("vector helpers") {
  const PrimeField f(5);
  Vec y = vec({1, 2, 3});
  axpy(y, 2, vec({1, 1, 1}), f);
  CHECK(y == vec({3, 4, 0}));
  CHECK(negated(y, f) == vec({2, 1, 0}));
  CHECK(subtracted(y, y, f) == zero_vec(3));
  CHECK(leading_index(vec({0, 0, 4})) == 2);
  CHECK(leading_index(zero_vec(2)) == -1);
}

TEST_CASE("row echelon is independent of insertion order") {
  const PrimeField f(7);
  std::mt19937 rng(11);
  std::vector<Vec> vs;
  for (int i = 0; i < 5; ++i) {
    Vec v(8);
    for (Index j = 0; j < 8; ++j) v(j) = rng() % 7;
    vs.push_back(v);
  }
  vs.push_back(added(vs[0], vs[1], f));
  RowEchelon a(8, f), b(8, f);
  for (const auto& v : vs) a.insert(v);
  std::reverse(vs.begin(), vs.end());
  for (const auto& v : vs) b.insert(v);
  CHECK(a.rank() == b.rank());
  CHECK(a.pivots() == b.pivots());
  CHECK(a.rows() == b.rows());
  CHECK(a.contains(vs[2]));
  CHECK_FALSE(a.insert(scaled(vs[3], 3, f)));
}

TEST_CASE("nullspace") {
  const PrimeField f(3);
  Mat m(2, 3);
  m << 1, 1, 0, 0, 1, 1;
  const auto ns = nullspace(m, f);
  REQUIRE(ns.size() == 1);
  const Vec prod = (m.cast<std::int64_t>() * ns[0].cast<std::int64_t>()).unaryExpr([](std::int64_t x) {
    return x % 3;
  }).cast<Residue>();
  CHECK(is_zero(prod));
  CHECK(span_rank({vec({1, 2, 0}), vec({2, 1, 0})}, 3, f) == 1);
}

TEST_CASE("proportionality") {
  const PrimeField f(5);
  CHECK(proportionality(vec({2, 4}), vec({1, 2}), f) == Residue(2));
  CHECK(proportionality(zero_vec(2), vec({1, 2}), f) == Residue(0));
  CHECK_FALSE(proportionality(vec({1, 1}), vec({1, 2}), f).has_value());
}
