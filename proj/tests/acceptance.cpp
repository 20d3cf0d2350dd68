// Acceptance criteria A1..A14: one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "brute.hpp"
#include "oracles.hpp"
#include "thinlie/harness.hpp"
#include "thinlie/serialize.hpp"

using namespace thinlie;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string kind_of(const ThinReport& rep, int h) {
  for (const auto& r : rep.records)
    if (r.degree == h) {
      if (r.kind == DiamondKind::GenuineFinite) return "type " + std::to_string(*r.lambda);
      if (r.kind == DiamondKind::GenuineInfinite) return "type inf";
      return to_string(r.kind);
    }
  return "none";
}

ThinReport report_for(unsigned p, unsigned n, unsigned s, int max_degree) {
  AnalysisOptions opts;
  opts.q = int_pow(p, n);
  return full_report(thin_core(compute(build_theorem41(p, n, s), max_degree)), opts);
}

Outcome experiment(const ExperimentResult& r) {
  std::string failed;
  for (const auto& c : r.checks)
    if (!c.ok) failed += " [" + c.item + ": expected " + c.expected + ", observed " + c.observed + "]";
  return {r.pass, r.pass ? std::to_string(r.checks.size()) + " checks" : "failed:" + failed};
}

Outcome all_of(std::vector<Outcome> parts) {
  Outcome o{true, ""};
  for (const auto& p : parts) {
    o.ok = o.ok && p.ok;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

Outcome expect_kinds(const ThinReport& rep, const std::vector<std::pair<int, std::string>>& want) {
  std::string detail;
  bool ok = true;
  for (const auto& [h, k] : want) {
    const std::string got = kind_of(rep, h);
    ok = ok && got == k;
    detail += (detail.empty() ? "" : ", ") + std::to_string(h) + ": " + got;
  }
  return {ok, detail};
}

Outcome second_diamond(const ThinReport& rep, int want) {
  int found = 0;
  for (std::size_t i = 1; i < rep.dims.size() && !found; ++i)
    if (rep.dims[i] == 2) found = static_cast<int>(i) + 1;
  return {found == want, "second diamond at " + std::to_string(found)};
}

Outcome a1() {
  std::string detail;
  bool ok = true;
  for (std::uint32_t p : {3u, 5u}) {
    const auto d = dims(compute(Presentation{PrimeField(p), {}, {}, Provenance::Custom}, 10));
    for (int k = 1; k <= 10; ++k) ok = ok && d[k - 1] == oracle::witt(k);
    detail += "p=" + std::to_string(p) + " ok ";
  }
  return {ok, detail + "(2,1,2,3,6,9,18,30,56,99)"};
}

Outcome a2() {
  const int bad = brute::jacobi_violations(compute(build_theorem41(3, 1, 1), 12), 12);
  return {bad == 0, std::to_string(bad) + " violations"};
}

Outcome a3() {
  long checked = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    const auto t = oracle::pascal_mod(2000, p);
    for (int a = 0; a < 2000; ++a)
      for (int b = 0; b <= a; ++b, ++checked)
        if (lucas_binomial(a, b, f) != t[a][b])
          return {false, "mismatch at C(" + std::to_string(a) + "," + std::to_string(b) + ") mod " +
                             std::to_string(p)};
  }
  return {true, std::to_string(checked) + " coefficients agree"};
}

Outcome a4() {
  const ThinReport rep = report_for(3, 1, 1, 25);
  // classified range is 2..22; odd degrees are diamonds, degree 3 and 21 fake
  std::set<int> odd_ok;
  bool ok = true;
  for (int h = 3; h <= 21; h += 2) {
    const std::string k = kind_of(rep, h);
    ok = ok && (k.rfind("type", 0) == 0 || k == "fake");
  }
  for (int h = 2; h <= 22; h += 2) ok = ok && kind_of(rep, h) == "chain";
  return all_of({experiment(exp_theorem41(3, 1, 1, 25)),
                 {ok, "odd degrees 3..21 diamonds, even degrees chains"},
                 expect_kinds(rep, {{9, "type 1"}, {15, "type 2"}, {21, "fake"}})});
}

Outcome a5() {
  const ThinReport rep = report_for(5, 1, 1, 30);
  return all_of({experiment(exp_theorem41(5, 1, 1, 30)), second_diamond(rep, 9),
                 expect_kinds(rep, {{13, "type inf"}, {17, "type inf"}, {21, "type inf"}, {25, "type 1"}})});
}

Outcome a6() {
  const ThinReport rep = report_for(3, 2, 1, 36);
  return all_of({experiment(exp_theorem41(3, 2, 1, 36)), second_diamond(rep, 17),
                 expect_kinds(rep, {{33, "type 1"}})});
}

Outcome a14() {
  auto once = [] {
    const GradedAlgebra core = thin_core(compute(build_theorem41(3, 1, 1), 25));
    AnalysisOptions opts;
    opts.q = 3;
    return report_to_json(full_report(core, opts), core.field()).dump() +
           result_to_json(exp_theorem41(3, 1, 1, 25), false).dump();
  };
  const std::string a = once(), b = once(), c = once();
  return {a == b && b == c, std::to_string(a.size()) + " bytes, three runs identical"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"A1", "free algebra dimensions", 5, a1},
      {"A2", "Jacobi brute force", 0, a2},
      {"A3", "Lucas against Pascal mod p", 10, a3},
      {"A4", "diamond pattern q=3", 30, a4},
      {"A5", "diamond pattern q=5", 60, a5},
      {"A6", "diamond pattern q=9", 120, a6},
      {"A7", "[v_3 x x] vanishes, a odd", 0, [] { return experiment(exp_ldies(5, 1, 3, 16)); }},
      {"A8", "collapse at 23, p=q=5 a=4", 60, [] { return experiment(exp_ldies(5, 1, 4, 28)); }},
      {"A9", "collapse by 22, p=q=3 a=7", 30, [] { return experiment(exp_ldies(3, 1, 7, 26)); }},
      {"A10", "no collapse, p=q=3 a=4", 0, [] { return experiment(exp_ldies(3, 1, 4, 32)); }},
      {"A11", "adjoint identities q=5", 0,
       [] {
         const ExperimentResult r = exp_lemma_identities(5, 1, 1, 32);
         std::set<int> ks;
         for (const auto& c : r.checks)
           for (int k = 2; k <= 5; ++k)
             if (c.item.find("[v_k v_1]") == 0 && c.item.find("(k=" + std::to_string(k) + ",") != std::string::npos)
               ks.insert(k);
         return all_of({experiment(r), {ks.size() == 4, "part one checked for k=2..5"}});
       }},
      {"A12", "chains between diamonds", 0,
       [] {
         return all_of({experiment(exp_prop_chains(3, 1, 1, 25)), experiment(exp_prop_chains(5, 1, 1, 30)),
                        experiment(exp_prop_chains(3, 2, 1, 36))});
       }},
      {"A13", "odd-k relators superfluous", 0,
       [] {
         return all_of({experiment(exp_superfluity(3, 1, 4, 32)), experiment(exp_superfluity(5, 1, 4, 28))});
       }},
      {"A14", "deterministic reports", 0, a14},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << std::left << std::setw(4) << c.id << ' ' << c.what << " ("
              << std::fixed << std::setprecision(3) << secs << " s): " << o.detail << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
