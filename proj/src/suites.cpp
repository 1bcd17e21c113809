#include "jt/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "jt/generators.hpp"
#include "jt/joint_torsion.hpp"
#include "jt/linalg.hpp"

namespace jt {

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF = FieldSpec::prime_field(10007);

FieldSpec field_for(std::size_t k) { return k % 2 ? kGF : kQ; }

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

class Checks {
 public:
  explicit Checks(TrialResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < 4) r_.failures.push_back(what);
  }

 private:
  TrialResult& r_;
};

std::string pair_name(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

std::vector<Poly> expand_all(const std::vector<FactoredPoly>& fs) {
  std::vector<Poly> out;
  for (const auto& f : fs) out.push_back(f.expand());
  return out;
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> inv(sigma.size() + 1);
  for (std::size_t k = 1; k <= sigma.size(); ++k) inv[sigma[k - 1]] = k;
  return inv;
}

template <class E>
void check_triangles(const OperatorTupleT<typename E::Map>& a, const E& e, const std::string& tag, Checks& c) {
  for (std::size_t j = 1; j <= a.size(); ++j) {
    auto x = triangle_X(a, j);
    auto rep = verify_homotopy_exact(x, e);
    c.expect(rep.ok(), tag + " X_" + std::to_string(j) + " homotopy exact: " + rep.summary());
    for (const auto& node : six_term_nodes(triangle_homology(x, e).v))
      c.expect(node.exact(), tag + " X_" + std::to_string(j) + " node " + std::to_string(node.space) + part_name(node.part) +
                                 ": dim " + std::to_string(node.dim) + ", ranks " + std::to_string(node.rank_in) + "+" +
                                 std::to_string(node.rank_out));
  }
}

void pseudo_inverse(Rng& rng, std::size_t k, const SuiteConfig& cfg, Checks& c) {
  FieldSpec f = field_for(k);
  std::size_t n = draw(rng, 2, std::max<std::size_t>(cfg.max_dim, 2));
  ExactEndo e = random_exact_endo(rng, f, n);
  while (rank(e.alpha.minus()) == 0 || rank(e.alpha.minus()) == n) e = random_exact_endo(rng, f, n);
  const Matrix& am = e.alpha.minus();
  std::vector<std::size_t> rev(n);
  std::iota(rev.rbegin(), rev.rend(), std::size_t{0});
  std::vector<Matrix> gs{generalized_inverse(am)};
  auto add = [&](Matrix g) {
    if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(std::move(g));
  };
  add(generalized_inverse(am, rev, rev));
  for (int attempt = 0; gs.size() < 3 && attempt < 20; ++attempt) {
    Matrix p = random_invertible(rng, f, n), q = random_invertible(rng, f, n);
    add(p * generalized_inverse(q * am * p) * q);
  }
  c.expect(gs.size() == 3, "three distinct generalized inverses");
  Scalar t0 = torsion_scalar(e.alpha, gs[0]).value;
  c.expect(t0 == e.expected_torsion, "torsion " + t0.to_string() + " vs conjugation oracle " + e.expected_torsion.to_string());
  for (std::size_t g = 1; g < gs.size(); ++g) {
    Scalar t = torsion_scalar(e.alpha, gs[g]).value;
    c.expect(t == t0, "inverse " + std::to_string(g + 1) + " gives " + t.to_string() + ", inverse 1 gives " + t0.to_string());
  }
}

void six_term(Rng& rng, std::size_t k, const SuiteConfig& cfg, Checks& c) {
  FieldSpec f = field_for(k);
  if (k % 4 == 3) {
    std::vector<Poly> ps;
    for (std::size_t m = draw(rng, 2, 3); m > 0; --m) ps.push_back(random_factored(rng, f, 0, 3, {}, 2).expand());
    check_triangles(poly_tuple(ps), PolyEngine{}, "F[z]", c);
  } else {
    auto a = random_commuting_tuple(rng, f, draw(rng, 1, 3), draw(rng, 0, cfg.max_dim));
    check_triangles(a, FiniteEngine{}, "matrix", c);
  }
}

void triviality(Rng& rng, std::size_t k, const SuiteConfig& cfg, Checks& c) {
  FieldSpec f = field_for(k);
  std::size_t n = 2 + (k / 2) % 2;
  auto a = random_commuting_tuple(rng, f, n, draw(rng, 0, cfg.max_dim));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) {
        Scalar t = joint_tau(a, i, j).tau;
        c.expect(t.is_one(), "tau_" + pair_name(i, j) + " = " + t.to_string());
      }
}

void cocycle(Rng& rng, std::size_t k, const SuiteConfig&, Checks& c) {
  FieldSpec f = field_for(k);
  std::vector<Poly> ps;
  for (int m = 0; m < 3; ++m) ps.push_back(random_factored(rng, f, 1, 3, {}, 2).expand());
  std::map<std::pair<std::size_t, std::size_t>, Scalar> tau;
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      if (i != j) tau[{i, j}] = pid_joint_tau(ps, i, j).tau;
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) {
      if (i == j) continue;
      c.expect((tau[{i, j}] * tau[{j, i}]).is_one(), "tau_" + pair_name(i, j) + " tau_" + pair_name(j, i) + " != 1");
      for (std::size_t l = 1; l <= 3; ++l)
        if (l != i && l != j)
          c.expect(tau[{i, j}] * tau[{j, l}] == tau[{i, l}],
                   "tau_" + pair_name(i, j) + " tau_" + pair_name(j, l) + " != tau_" + pair_name(i, l));
    }
}

template <class E>
void check_symmetry(Rng& rng, const OperatorTupleT<typename E::Map>& a, const E& e, const std::string& tag, Checks& c) {
  auto sigma = random_permutation(rng, a.size());
  auto b = permute_tuple(a, sigma).tuple;
  auto inv = inverse_permutation(sigma);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= a.size(); ++j)
      if (i != j) {
        Scalar x = joint_tau(a, i, j, e).tau, y = joint_tau(b, inv[i], inv[j], e).tau;
        c.expect(x == y, tag + " tau_" + pair_name(i, j) + "(A) = " + x.to_string() + " but tau_" +
                             pair_name(inv[i], inv[j]) + "(sigma A) = " + y.to_string());
      }
}

void symmetry(Rng& rng, std::size_t k, const SuiteConfig& cfg, Checks& c) {
  FieldSpec f = field_for(k);
  std::size_t n = draw(rng, 2, 3);
  if (k % 3 == 2) {
    std::vector<Poly> ps;
    for (std::size_t m = 0; m < n; ++m) ps.push_back(random_factored(rng, f, 1, 3, {}, 2).expand());
    check_symmetry(rng, poly_tuple(ps), PolyEngine{}, "F[z]", c);
  } else {
    check_symmetry(rng, random_commuting_tuple(rng, f, n, draw(rng, 0, cfg.max_dim)), FiniteEngine{}, "matrix", c);
  }
}

void multiplicativity(Rng& rng, std::size_t k, const SuiteConfig&, Checks& c) {
  FieldSpec f = field_for(k / 2);
  FactoredPoly g = random_factored(rng, f, 1, 5);
  std::vector<Scalar> gr;
  for (const auto& [r, m] : g.roots) gr.push_back(r);
  Poly a1 = random_factored(rng, f, 0, 5, gr).expand(), b1 = random_factored(rng, f, 0, 5, gr).expand();
  std::vector<Poly> rest{g.expand()};
  if (k % 2) rest.push_back(random_factored(rng, f, 0, 5).expand());
  auto with = [&](const Poly& first) {
    std::vector<Poly> out{first};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  };
  auto a = with(a1), b = with(b1), ab = with(a1 * b1);
  std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) {
        Scalar ta = pid_joint_tau(a, i, j).tau, tb = pid_joint_tau(b, i, j).tau, tab = pid_joint_tau(ab, i, j).tau;
        c.expect(ta * tb == tab, "tau_" + pair_name(i, j) + ": " + ta.to_string() + " * " + tb.to_string() +
                                     " != " + tab.to_string() + " for the product");
      }
}

template <class E>
long index_of(const OperatorTupleT<typename E::Map>& a, const E& e) {
  return fredholm(a, e).index;
}

// Ind(A.B) = Ind(A) + Ind(B), directly and through the homology of M(A, B).
template <class E>
void check_additivity(const OperatorTupleT<typename E::Map>& a, const OperatorTupleT<typename E::Map>& b, const E& e,
                      const std::string& tag, Checks& c) {
  long ia = index_of(a, e), ib = index_of(b, e), iab = index_of(product_tuple(a, b), e);
  c.expect(iab == ia + ib, tag + " Ind(A.B) = " + std::to_string(iab) + ", Ind(A) + Ind(B) = " + std::to_string(ia + ib));
  auto m = build_M_triangle(a, b);
  auto rep = verify_homotopy_exact(m, e);
  c.expect(rep.ok(), tag + " M(A, B) homotopy exact: " + rep.summary());
  auto th = triangle_homology(m, e);
  auto ind = [&](std::size_t s, bool shifted) {
    long d = static_cast<long>(th.H[s].dims().minus) - static_cast<long>(th.H[s].dims().plus);
    return shifted ? -d : d;
  };
  c.expect(ind(0, false) == ib && ind(1, true) == iab && ind(2, false) == ia, tag + " M(A, B) homology indices");
  c.expect(six_term_exact(th.v), tag + " M(A, B) six-term sequence");
}

void index_laws(Rng& rng, std::size_t k, const SuiteConfig& cfg, Checks& c) {
  FieldSpec f = field_for(k);
  FiniteEngine fe;
  {
    std::size_t n = draw(rng, 1, 3), dim = draw(rng, 0, cfg.max_dim);
    auto full = random_commuting_tuple(rng, f, n + 1, dim);
    auto a = remove_entry(full, n + 1);
    long ia = index_of(a, fe);
    c.expect(ia == 0, "matrix Ind(A) = " + std::to_string(ia));
    auto sigma = random_permutation(rng, n);
    c.expect(index_of(permute_tuple(a, sigma).tuple, fe) == ia, "matrix Ind(sigma A) != Ind(A)");
    c.expect(index_of(full, fe) == 0, "matrix Ind(A u A_{n+1}) != 0");
    auto [p, q] = random_tuple_pair(rng, f, n, dim);
    check_additivity(p, q, fe, "matrix", c);
  }
  {
    PolyEngine pe;
    Poly p1 = random_factored(rng, f, 0, 4).expand(), p2 = random_factored(rng, f, 0, 4).expand();
    Poly p3 = k % 3 == 0 ? Poly(f, std::vector<Scalar>{}) : random_factored(rng, f, 0, 4).expand();
    long i1 = index_of(poly_tuple({p1}), pe);
    c.expect(i1 == -p1.degree(), "Ind((p)) = " + std::to_string(i1) + " for deg p = " + std::to_string(p1.degree()));
    c.expect(index_of(poly_tuple({p1, p2}), pe) == index_of(poly_tuple({p2, p1}), pe), "F[z] Ind(p, q) != Ind(q, p)");
    c.expect(index_of(poly_tuple({p1, p3}), pe) == 0, "F[z] Ind(p, r) != 0 for r = " + p3.to_string());
    c.expect(index_of(poly_tuple({p1, p2, p3}), pe) == 0, "F[z] Ind(p, q, r) != 0");
    check_additivity(poly_tuple({p1}), poly_tuple({p2}), pe, "F[z]", c);
  }
}

void bitriangle_suite(Rng&, std::size_t k, std::uint64_t seed, const SuiteConfig& cfg, Checks& c) {
  for (const auto& run : bitriangle_runs(k, seed, cfg)) {
    c.expect(run.validation.ok(), run.label + " validate: " + run.validation.summary());
    const ComparisonReport& cr = run.comparison;
    c.expect(cr.comparison.is_one(), run.label + " comparison number " + cr.comparison.to_string());
    c.expect(cr.corollary, run.label + " T_v = " + cr.T_v.to_string() + ", T_h = " + cr.T_h.to_string() +
                               ", sgn theta = " + std::to_string(cr.theta()));
    c.expect(cr.verdict, run.label + " verdict");
  }
}

void comparison_quotient(Rng&, std::size_t k, std::uint64_t seed, const SuiteConfig& cfg, Checks& c) {
  for (const auto& run : bitriangle_runs(k, seed, cfg)) {
    const ComparisonReport& cr = run.comparison;
    c.expect(cr.via_quotients == cr.comparison,
             run.label + " quotient product " + cr.via_quotients.to_string() + " vs " + cr.comparison.to_string());
    c.expect(run.direct_quotients == cr.comparison,
             run.label + " via quotients " + run.direct_quotients.to_string() + " vs " + cr.comparison.to_string());
  }
}

void oracle_agreement(Rng& rng, std::size_t k, const SuiteConfig&, Checks& c) {
  FieldSpec f = field_for(k);
  auto fam = random_coprime_family(rng, f, 2, 0, 4);
  std::vector<Poly> ps = expand_all(fam);
  Scalar pipeline = pid_joint_tau(ps, 1, 2).tau;
  Scalar tame = tame_symbol(fam[0], fam[1]);
  Scalar lef = lefschetz_tau(poly_tuple(ps), 1, 2, PolyEngine{});
  Scalar local = Scalar::one(f);
  for (const auto& fp : fam)
    for (const auto& [r, m] : fp.normalized().roots) local *= local_joint_tau(ps, 1, 2, r).tau;
  std::string tag = "(" + ps[0].to_string() + ", " + ps[1].to_string() + "): pipeline " + pipeline.to_string();
  c.expect(pipeline == tame, tag + ", tame symbol " + tame.to_string());
  c.expect(pipeline == lef, tag + ", Lefschetz " + lef.to_string());
  c.expect(pipeline == local, tag + ", product of local values " + local.to_string());
}

using TrialFn = std::function<void(Rng&, std::size_t, std::uint64_t, const SuiteConfig&, Checks&)>;

template <void (*F)(Rng&, std::size_t, const SuiteConfig&, Checks&)>
void plain(Rng& rng, std::size_t k, std::uint64_t, const SuiteConfig& cfg, Checks& c) {
  F(rng, k, cfg, c);
}

struct Entry {
  SuiteInfo info;
  TrialFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{"pseudo-inverse", "the torsion of an exact odd endomorphism does not depend on the generalized inverse"},
       plain<pseudo_inverse>},
      {{"six-term", "the homology triangle of X^A_j is a six-term exact sequence"}, plain<six_term>},
      {{"triviality", "tau_{i,j}(A) = 1 for commuting matrices"}, plain<triviality>},
      {{"cocycle", "tau_{i,j} tau_{j,k} = tau_{i,k} and tau_{i,j} = tau_{j,i}^{-1}"}, plain<cocycle>},
      {{"symmetry", "tau_{i,j}(A) = tau_{sigma^{-1}(i),sigma^{-1}(j)}(sigma(A))"}, plain<symmetry>},
      {{"multiplicativity", "tau_{i,j}(A) tau_{i,j}(B) = tau_{i,j}(A.B)"}, plain<multiplicativity>},
      {{"index-laws", "index symmetry, triviality under an extra operator, additivity"}, plain<index_laws>},
      {{"bitriangle", "the two torsion isomorphisms of a bitriangle agree"}, bitriangle_suite},
      {{"comparison-quotient", "the comparison number is the product of quotient determinants"},
       comparison_quotient},
      {{"oracle-agreement", "pipeline, tame symbol, Lefschetz number and local product agree"},
       plain<oracle_agreement>},
  };
  return all;
}

const Entry& entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e;
  throw ParseError("unknown suite \"" + name + "\"");
}

template <class E>
BitriangleRun make_run(std::string label, const BitriangleT<typename E::Map>& bt, const E& e) {
  BitriangleRun run{std::move(label), validate(bt, e), {}, {}};
  auto hx = bitriangle_homology(bt, e);
  run.comparison = compare_homology(hx);
  auto [v, h] = bitriangle_endomorphisms(hx);
  run.direct_quotients = comparison_via_quotients(v, h);
  return run;
}

template <class E>
void product_runs(const OperatorTupleT<typename E::Map>& a, const OperatorTupleT<typename E::Map>& b, const E& e,
                  const std::string& tag, std::vector<BitriangleRun>& out) {
  for (std::size_t m = 2; m <= a.size(); ++m) out.push_back(make_run(tag + " X(" + std::to_string(m) + ")", build_Xm(a, b, m), e));
  out.push_back(make_run(tag + " X(1)", build_X1(a, b), e));
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

const SuiteInfo& suite_info(const std::string& name) { return entry(name).info; }

std::vector<BitriangleRun> bitriangle_runs(std::size_t k, std::uint64_t seed, const SuiteConfig& cfg) {
  Rng rng(trial_seed(seed, k));
  FieldSpec f = field_for(k / 4);
  std::vector<BitriangleRun> out;
  switch (k % 4) {
    case 0:
    case 1: {
      auto a = random_commuting_tuple(rng, f, 3, draw(rng, 1, std::min<std::size_t>(cfg.max_dim, 5)));
      for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j)
          out.push_back(make_run("matrix trivial(" + pair_name(i, j) + ")", build_trivial_bt(a, i, j), FiniteEngine{}));
      break;
    }
    case 2: {
      auto [a, b] = random_tuple_pair(rng, f, draw(rng, 2, 3), draw(rng, 1, std::min<std::size_t>(cfg.max_dim, 4)));
      product_runs(a, b, FiniteEngine{}, "matrix", out);
      break;
    }
    default: {
      auto fam = expand_all(random_coprime_family(rng, f, 3, 0, 3));
      std::vector<Poly> a{fam[0], fam[2]}, b{fam[1], fam[2]};
      if (draw(rng, 0, 1)) {
        Poly h = random_factored(rng, f, 0, 2, {}, 2).expand();
        a.push_back(h);
        b.push_back(h);
      }
      product_runs(poly_tuple(a), poly_tuple(b), PolyEngine{}, "F[z]", out);
      break;
    }
  }
  return out;
}

TrialResult run_trial(const std::string& suite, std::size_t k, std::uint64_t seed, const SuiteConfig& cfg) {
  const Entry& e = entry(suite);
  TrialResult r;
  r.trial = k;
  r.seed = trial_seed(seed, k);
  Checks c(r);
  try {
    Rng rng(r.seed);
    e.fn(rng, k, seed, cfg, c);
  } catch (const std::exception& ex) {
    c.expect(false, std::string("exception: ") + ex.what());
  }
  return r;
}

SuiteReport run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed, const SuiteConfig& cfg) {
  SuiteReport rep{suite_info(suite), trials, seed, 0, {}};
  std::vector<TrialResult> results(trials);
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(trials, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < trials;) results[k] = run_trial(suite, k, seed, cfg);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& r : results) {
    rep.checks += r.checks;
    if (!r.ok()) rep.failed.push_back(std::move(r));
  }
  return rep;
}

}  // namespace jt
