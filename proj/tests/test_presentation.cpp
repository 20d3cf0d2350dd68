#include <doctest.h>

#include <algorithm>
#include <random>

#include "thinlie/presentation.hpp"

using namespace thinlie;

namespace {
std::vector<std::string> words(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators) out.push_back(r.str(p.field));
  return out;
}
}  // namespace

TEST_CASE("words") {
  const Word w = Word::from_string("yxxy");
  CHECK(w.degree() == 4);
  CHECK(w.str() == "yxxy");
  CHECK(w.bracket_str() == "[y,x^2,y]");
  CHECK_THROWS_AS(Word::from_string("xz"), PresentationError);
}

TEST_CASE("relators collect terms and check homogeneity") {
  const PrimeField f(3);
  const Relator r(f, {{1, Word::from_string("yxy")}, {2, Word::from_string("yxx")}, {2, Word::from_string("yxy")}});
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms()[0].word.str() == "yxx");
  CHECK(r.str(f) == "-[y,x^2]");
  CHECK_THROWS_AS(Relator(f, {{1, Word::from_string("yx")}, {1, Word::from_string("yxx")}}), PresentationError);
  CHECK_THROWS_AS(Relator(f, {{3, Word::from_string("yx")}}), PresentationError);
  CHECK_THROWS_AS(Relator(f, Word()), PresentationError);
}

TEST_CASE("v words") {
  CHECK(v_word(1, 5).str() == "yxxx");
  CHECK(v_word(2, 3).str() == "yxxx");
  CHECK(v_word(3, 3).str() == "yxxxxy");
  for (int k = 1; k < 6; ++k) CHECK(v_word(k, 9).degree() == k * 8);
}

TEST_CASE("family relators, q = 3") {
  const Presentation p = build_theorem41(3, 1, 1);
  CHECK(p.provenance == Provenance::Theorem41);
  auto render = [](const Relator& r) {
    std::string s;
    for (const auto& t : r.terms()) s += std::to_string(t.coeff) + ":" + t.word.str() + " ";
    return s;
  };
  const Word v4 = v_word(4, 3);
  std::vector<std::string> expected{"1:yxxy ", "1:yxyx ", "1:yxyy ", "1:yxxxxxx ", "1:yxxxxxy ",
                                    "1:" + Word(v4).append(Word::from_string("yx")).str() + " 2:" +
                                        Word(v4).append(Word::from_string("xx")).str() + " "};
  std::vector<std::string> got;
  for (const auto& r : p.relators) got.push_back(render(r));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("family relators, q = 5") {
  const Presentation p = build_theorem41(5, 1, 1);
  const PrimeField& f = p.field;
  auto has = [&](const Word& w) {
    return std::any_of(p.relators.begin(), p.relators.end(), [&](const Relator& r) {
      return r.terms().size() == 1 && r.terms()[0].word == w;
    });
  };
  for (int i : {1, 2, 4, 5, 6}) CHECK(has(Word::from_string("y").append(Letter::X, i).append(Letter::Y)));
  CHECK_FALSE(has(Word::from_string("yxxxy")));
  CHECK(has(Word::from_string("yxxxyx")));
  CHECK(has(v_word(2, 5).append(Word::from_string("xxx"))));
  CHECK(has(v_word(2, 5).append(Word::from_string("xxy"))));
  CHECK(has(v_word(4, 5).append(Word::from_string("xx"))));
  CHECK_FALSE(has(v_word(3, 5).append(Word::from_string("xx"))));
  const Relator& last = p.relators.back();
  CHECK(last.degree() == 6 * 4 + 2);
  CHECK(last.str(f) == Relator(f, {{1, v_word(6, 5).append(Word::from_string("yx"))},
                                   {-1, v_word(6, 5).append(Word::from_string("xx"))}})
                           .str(f));
  for (const auto& r : p.relators)
    for (const auto& t : r.terms()) CHECK(t.word.degree() == r.degree());
}

TEST_CASE("minus-one family") {
  const Presentation with = build_minus1(5, 1, 4, 1, true);
  const Presentation without = build_minus1(5, 1, 4, 1, false);
  CHECK(with.relators.size() == without.relators.size() + 1);
  CHECK(with.relators.back().degree() == 4 * 4 + 2);
  const Presentation small = build_minus1(5, 1, 3, 1);
  CHECK(small.relators.size() == chain_relators(small.field, 1).size() + 2);
  CHECK(build_minus1_untyped(5, 1, 3).relators.size() == small.relators.size() - 1);
}

TEST_CASE("swapping generators") {
  const Presentation p = build_theorem41(3, 1, 1);
  const Presentation s = swap_generators(p);
  CHECK(s.relators.front().terms()[0].word.str() == "xyyx");
  CHECK(swap_generators(s).relators == p.relators);
}

TEST_CASE("parsing") {
  const Presentation a = parse_relators("p=3 n=1\n[y,x^2,y] = 0\n");
  REQUIRE(a.relators.size() == 1);
  CHECK(a.relators[0].degree() == 4);

  const Presentation b = parse_relators("# type one\np=5 n=1\n[v(4),y,x] - [v(4),x,x] = 0\n");
  REQUIRE(b.relators.size() == 1);
  CHECK(b.relators[0].degree() == 18);

  const Presentation c = parse_relators("p=7\n3*[y x y] - 2 [y,y,x]\n[x,y]\n");
  CHECK(c.relators.size() == 2);
  CHECK(c.relators[0].terms()[1].coeff == 5);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_relators("p=3\n[x^0]\n"), doctest::Contains("empty word"), ParseError);
  CHECK_THROWS_AS(parse_relators("[y,x]\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=4\n[y,x]\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3\n[v(2),x]\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3 n=1\n[x,v(2)]\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3\n[y,x] + [y,x,x]\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3\n[y,x\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3\n[y,x]\nn=1\n"), ParseError);
  CHECK_THROWS_AS(parse_relators("p=3 k=1\n"), ParseError);
  try {
    parse_relators("p=3\n\n[y,q]\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("print and parse round trip") {
  for (const Presentation& p : {build_theorem41(3, 1, 1), build_theorem41(5, 1, 1), build_minus1(3, 2, 5, 2)}) {
    const Presentation back = parse_relators(print_relators(p));
    CHECK(back.relators == p.relators);
    CHECK(back.params == p.params);
  }
  std::mt19937 rng(7);
  const PrimeField f(11);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p{f, {}, {}, Provenance::Custom};
    const int nrel = 1 + rng() % 4;
    for (int r = 0; r < nrel; ++r) {
      const int deg = 2 + rng() % 6;
      std::vector<std::pair<std::int64_t, Word>> terms;
      for (int t = 0; t < 3; ++t) {
        Word w;
        for (int i = 0; i < deg; ++i) w.append(rng() % 2 ? Letter::X : Letter::Y);
        terms.push_back({static_cast<std::int64_t>(rng() % 21) - 10, w});
      }
      try {
        p.relators.emplace_back(f, terms);
      } catch (const PresentationError&) {
      }
    }
    REQUIRE(parse_relators(print_relators(p)) == p);
  }
}
