// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jt/joint_torsion.hpp"
#include "jt/suites.hpp"

namespace {

using namespace jt;

struct Verdict {
  bool ok = true;
  std::string detail;
};

Verdict from_suite(const std::string& name, std::size_t trials, SuiteConfig cfg = {}) {
  SuiteReport r = run_suite(name, trials, 20240601, cfg);
  Verdict v{r.ok(), std::to_string(r.trials) + " trials, " + std::to_string(r.checks) + " checks"};
  if (!r.ok()) {
    const TrialResult& t = r.failed.front();
    v.detail += ", " + std::to_string(r.failed.size()) + " failed; first: trial " + std::to_string(t.trial) + " seed " +
                std::to_string(t.seed) + ": " + (t.failures.empty() ? "" : t.failures.front());
  }
  return v;
}

FactoredPoly fac(FieldSpec f, long lead, std::vector<long> roots) {
  FactoredPoly out{Scalar(f, lead), {}};
  for (long r : roots) out.roots.emplace_back(Scalar(f, r), 1u);
  return out;
}

Verdict tame_golden() {
  FieldSpec q = FieldSpec::rationals();
  struct Case {
    FactoredPoly f, g;
    long expected;
  };
  std::vector<Case> cases{{fac(q, 1, {1}), fac(q, 1, {2}), -1},
                          {fac(q, 2, {1}), fac(q, 1, {2}), -2},
                          {fac(q, 1, {1, 3}), fac(q, 1, {2}), 1}};
  Verdict v{true, ""};
  for (const auto& c : cases) {
    std::vector<Poly> ps{c.f.expand(), c.g.expand()};
    Scalar want(q, c.expected);
    Scalar pipeline = pid_joint_tau(ps, 1, 2).tau;
    Scalar lef = lefschetz_tau(poly_tuple(ps), 1, 2, PolyEngine{});
    Scalar tame = tame_symbol(c.f, c.g);
    bool ok = pipeline == want && lef == want && tame == want;
    v.ok = v.ok && ok;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += "tau(" + ps[0].to_string() + ", " + ps[1].to_string() + ") = " + pipeline.to_string() + "/" +
                lef.to_string() + "/" + tame.to_string();
  }
  return v;
}

Verdict cauchy() {
  FieldSpec q = FieldSpec::rationals();
  MultiPoly f(q, 2);
  f.add_term({0, 0}, Scalar(q, 3L));
  f.add_term({1, 0}, Scalar(q, 1L));
  f.add_term({1, 1}, Scalar(q, 1L));
  std::vector<Scalar> origin{Scalar::zero(q), Scalar::zero(q)};
  Scalar three(q, 3L);
  Scalar t2 = polydisc_tau(f, origin, 2).tau, t3 = polydisc_tau(f, origin, 3).tau;
  Scalar loc = local_joint_tau({Poly(q, {three, Scalar::one(q)}), Poly::z(q)}, 1, 2, Scalar::zero(q)).tau;
  return {t2 == three && t3 == three && loc == three,
          "polydisc j=2: " + t2.to_string() + ", j=3: " + t3.to_string() + ", local: " + loc.to_string()};
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  SuiteConfig dim8;
  dim8.max_dim = 8;
  std::vector<Criterion> all{
      {1, "triviality (200 tuples over Q and GF(10007), n in {2,3}, dim <= 8)", 60,
       [&] { return from_suite("triviality", 200, dim8); }},
      {2, "pseudo-inverse independence (100 exact endomorphisms, 3 inverses)", 10,
       [] { return from_suite("pseudo-inverse", 100); }},
      {3, "tame-symbol golden values by three routes", 5, tame_golden},
      {4, "Cauchy-formula analog", 5, cauchy},
      {5, "multiplicativity (100 coprime pairs/triples, degree <= 5)", 60,
       [] { return from_suite("multiplicativity", 100); }},
      {6, "cocycle and inverse (50 F[z] triples)", 60, [] { return from_suite("cocycle", 50); }},
      {7, "permutation symmetry (50 matrix and 25 F[z] tuples)", 60, [] { return from_suite("symmetry", 75); }},
      {8, "index laws (100 matrix and 100 F[z] instances)", 30, [] { return from_suite("index-laws", 100); }},
      {9, "bitriangle comparison (50 triviality, 25 matrix and 25 F[z] X(m)/X(1))", 120,
       [] { return from_suite("bitriangle", 100); }},
      {10, "quotient formula on the bitriangles of criterion 9", 60,
       [] { return from_suite("comparison-quotient", 100); }},
      {11, "six-term exactness (100 random triangles)", 30, [] { return from_suite("six-term", 100); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = v.ok && secs < c.limit_s;
    failed += !ok;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.number, c.name, v.detail.c_str(), secs,
                c.limit_s);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
