#include "jt/commands.hpp"

#include <algorithm>
#include <sstream>

#include "jt/bitriangle.hpp"
#include "jt/joint_torsion.hpp"
#include "jt/pid.hpp"
#include "jt/problem.hpp"

namespace jt {

namespace {

Json dims_json(GradedSpace s) { return Json{{"plus", s.plus}, {"minus", s.minus}}; }

Json args_json(const CommandArgs& a) {
  Json out = Json::object();
  if (a.input) out["input"] = *a.input;
  if (a.i) out["i"] = *a.i;
  if (a.j) out["j"] = *a.j;
  if (a.m) out["m"] = *a.m;
  if (a.at) out["at"] = *a.at;
  if (a.alpha) out["alpha"] = *a.alpha;
  if (a.construction) out["construction"] = *a.construction;
  if (a.command == "verify") {
    if (a.suite) out["suite"] = *a.suite;
    out["trials"] = a.trials;
    out["seed"] = a.seed;
    out["max_dim"] = a.config.max_dim;
    if (a.replay_trial) out["replay_trial"] = *a.replay_trial;
  }
  return out;
}

std::pair<std::size_t, std::size_t> pair_args(const CommandArgs& a) {
  std::size_t i = a.i.value_or(1), j = a.j.value_or(2);
  if (i == j) throw PreconditionError("i = j: the transition number needs two distinct indices");
  return {i, j};
}

Json tau_json(const JointTorsionResult& r) {
  return Json{{"tau", r.tau.to_string()},
              {"i", r.i},
              {"j", r.j},
              {"T_i", r.T_i.value.to_string()},
              {"T_j", r.T_j.value.to_string()},
              {"mu_i", r.mu_i},
              {"mu_j", r.mu_j},
              {"dims", dims_json(r.dims_A)},
              {"dims_i", dims_json(r.dims_iA)},
              {"dims_j", dims_json(r.dims_jA)}};
}

std::optional<Scalar> localization(const CommandArgs& a, const ProblemFile& p) {
  if (a.at) {
    try {
      return Scalar::parse(p.field, *a.at);
    } catch (const ParseError& e) {
      throw ParseError(std::string("--at: ") + e.what());
    }
  }
  return p.at;
}

Scalar required_point(const CommandArgs& a, const ProblemFile& p) {
  auto at = localization(a, p);
  if (!at) throw PreconditionError("local computation needs a point: pass --at or set \"at\"");
  return *at;
}

std::vector<Scalar> parse_alpha(const std::string& text, FieldSpec f) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(f, item));
  } catch (const ParseError& e) {
    throw ParseError(std::string("--alpha: ") + e.what());
  }
  return out;
}

bool is_polynomial(const ProblemFile& p) { return p.backend == Backend::poly || p.backend == Backend::local; }

PolyEngine poly_engine(const CommandArgs& a, const ProblemFile& p) {
  if (p.backend == Backend::local) return PolyEngine{required_point(a, p)};
  return PolyEngine{localization(a, p)};
}

[[noreturn]] void wrong_backend(const std::string& cmd, const ProblemFile& p) {
  throw PreconditionError(cmd + " is not available for the " + std::string(backend_name(p.backend)) + " backend");
}

Json homology_cmd(const CommandArgs& a, const ProblemFile& p) {
  if (p.backend == Backend::matrix) {
    auto h = homology(koszul_complex(p.matrix_tuple()));
    return Json{{"dims", dims_json(h.dims())}, {"index", static_cast<long>(h.dims().minus) - static_cast<long>(h.dims().plus)}};
  }
  if (!is_polynomial(p)) wrong_backend("homology", p);
  TorsionModuleHomology h(koszul_complex(p.poly_tuple()), poly_engine(a, p).at);
  Json out{{"finite", h.is_finite()}, {"dims", dims_json(h.dims())}};
  if (h.is_finite()) out["index"] = static_cast<long>(h.dims().minus) - static_cast<long>(h.dims().plus);
  Json factors = Json::object(), free = Json::object();
  for (Part s : kParts) {
    Json fs = Json::array();
    for (const auto& d : h.factors(s)) fs.push_back(d.to_string());
    factors[part_name(s)] = fs;
    free[part_name(s)] = h.free_rank(s);
  }
  out["invariant_factors"] = factors;
  out["free_rank"] = free;
  return out;
}

Json fredholm_json(const FredholmData& d) {
  Json removed = Json::array();
  for (const auto& r : d.removed) removed.push_back(r ? dims_json(*r) : Json());
  return Json{{"index", d.index}, {"dims", dims_json(d.dims)}, {"removed", removed}};
}

Json index_cmd(const CommandArgs& a, const ProblemFile& p) {
  if (p.backend == Backend::matrix) return fredholm_json(fredholm(p.matrix_tuple(), FiniteEngine{}));
  if (!is_polynomial(p)) wrong_backend("index", p);
  return fredholm_json(fredholm(p.poly_tuple(), poly_engine(a, p)));
}

Json torsion_cmd(const CommandArgs& a, const ProblemFile& p) {
  auto [i, j] = pair_args(a);
  if (p.backend == Backend::matrix) return tau_json(joint_tau(p.matrix_tuple(), i, j, FiniteEngine{}));
  if (!is_polynomial(p)) wrong_backend("torsion", p);
  return tau_json(joint_tau(p.poly_tuple(), i, j, poly_engine(a, p)));
}

Json lefschetz_cmd(const CommandArgs& a, const ProblemFile& p) {
  auto [i, j] = pair_args(a);
  Scalar t;
  if (p.backend == Backend::matrix) {
    t = lefschetz_tau(p.matrix_tuple(), i, j, FiniteEngine{});
  } else {
    if (!is_polynomial(p)) wrong_backend("lefschetz", p);
    auto tuple = p.poly_tuple();
    if (i > tuple.size() || j > tuple.size() || i < 1 || j < 1) throw PreconditionError("index out of range");
    t = lefschetz_tau(tuple, i, j, poly_engine(a, p));
  }
  return Json{{"tau", t.to_string()}, {"i", i}, {"j", j}};
}

Json tame_cmd(const CommandArgs&, const ProblemFile& p) {
  if (!is_polynomial(p)) wrong_backend("tame-symbol", p);
  if (p.factored.size() != 2) throw PreconditionError("tame-symbol needs exactly two factored forms in \"factored\"");
  return Json{{"tau", tame_symbol(p.factored[0], p.factored[1]).to_string()}};
}

Json local_cmd(const CommandArgs& a, const ProblemFile& p) {
  if (!is_polynomial(p)) wrong_backend("local", p);
  auto [i, j] = pair_args(a);
  Scalar lam = required_point(a, p);
  Json out = tau_json(local_joint_tau(p.polys, i, j, lam));
  out["at"] = lam.to_string();
  return out;
}

Json polydisc_cmd(const CommandArgs& a, const ProblemFile& p) {
  if (p.backend != Backend::polydisc) wrong_backend("polydisc", p);
  if (!a.j) throw PreconditionError("polydisc needs --j");
  std::vector<Scalar> alpha;
  if (a.alpha) alpha = parse_alpha(*a.alpha, p.field);
  else if (p.point) alpha = *p.point;
  else throw PreconditionError("polydisc needs a point: pass --alpha or set \"point\"");
  if (alpha.size() != p.multi->nvars()) throw PreconditionError("the point has the wrong number of coordinates");
  PolydiscResult r = polydisc_tau(*p.multi, alpha, *a.j);
  Json pt = Json::array();
  for (const auto& s : alpha) pt.push_back(s.to_string());
  return Json{{"tau", r.tau.to_string()}, {"j", *a.j}, {"point", pt}, {"value", r.value.to_string()},
              {"line", r.line.to_string()}};
}

Json comparison_json(const ComparisonReport& cr) {
  Json cols = Json::array(), rows = Json::array(), dims = Json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    cols.push_back(cr.columns[k].to_string());
    rows.push_back(cr.rows[k].to_string());
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(dims_json(cr.dims[k][j]));
    dims.push_back(row);
  }
  return Json{{"columns", cols},
              {"rows", rows},
              {"T_v", cr.T_v.to_string()},
              {"T_h", cr.T_h.to_string()},
              {"theta_sign", {{"plus", cr.theta_sign[0]}, {"minus", cr.theta_sign[1]}}},
              {"comparison", cr.comparison.to_string()},
              {"via_quotients", cr.via_quotients.to_string()},
              {"det_plus", cr.det_plus.to_string()},
              {"det_minus", cr.det_minus.to_string()},
              {"corollary", cr.corollary},
              {"verdict", cr.verdict},
              {"homology_dims", dims}};
}

template <class E>
Json bitriangle_json(const BitriangleT<typename E::Map>& bt, const E& e, bool& ok) {
  BitriangleReport rep = validate(bt, e);
  Json fails = Json::array();
  for (const auto& c : rep.failures())
    fails.push_back(Json{{"kind", c.kind}, {"i", c.i}, {"j", c.j}, {"detail", c.detail}});
  Json out{{"valid", rep.ok()}, {"checks", rep.checks.size()}, {"failures", fails}};
  ok = rep.ok();
  if (ok) {
    ComparisonReport cr = compare(bt, e);
    out["comparison"] = comparison_json(cr);
    ok = cr.verdict;
  }
  return out;
}

template <class E>
Json bitriangle_for(const CommandArgs& a, const OperatorTupleT<typename E::Map>& t,
                    const std::optional<typename E::Map>& b1, const E& e, bool& ok) {
  const std::string& c = *a.construction;
  if (c == "trivial") {
    std::size_t i = a.i.value_or(1), j = a.j.value_or(2);
    return bitriangle_json(build_trivial_bt(t, i, j), e, ok);
  }
  if (!b1) throw PreconditionError(c + " needs \"b1\" in the problem file");
  auto b = t;
  if (b.ops.empty()) throw PreconditionError(c + " needs a nonempty tuple");
  b.ops[0] = *b1;
  if (c == "Xm") {
    if (!a.m) throw PreconditionError("Xm needs --m");
    return bitriangle_json(build_Xm(t, b, *a.m), e, ok);
  }
  return bitriangle_json(build_X1(t, b), e, ok);
}

Json bitriangle_cmd(const CommandArgs& a, const ProblemFile& p, bool& ok) {
  if (!a.construction) throw ParseError("bitriangle needs --construction trivial|Xm|X1");
  const std::string& c = *a.construction;
  if (c != "trivial" && c != "Xm" && c != "X1") throw ParseError("--construction must be trivial, Xm or X1");
  if (p.backend == Backend::matrix) return bitriangle_for(a, p.matrix_tuple(), p.matrix_b1, FiniteEngine{}, ok);
  if (!is_polynomial(p)) wrong_backend("bitriangle", p);
  std::optional<PolyMatrix> b1;
  if (p.poly_b1) b1 = poly_tuple({*p.poly_b1})[1];
  return bitriangle_for(a, p.poly_tuple(), b1, poly_engine(a, p), ok);
}

Json trial_json(const TrialResult& r) {
  Json f = Json::array();
  for (const auto& s : r.failures) f.push_back(s);
  return Json{{"trial", r.trial}, {"seed", r.seed}, {"checks", r.checks}, {"failures", f}};
}

Json verify_cmd(const CommandArgs& a, bool& ok) {
  if (!a.suite) throw ParseError("verify needs --suite");
  const SuiteInfo& info = suite_info(*a.suite);
  if (a.trials < 1) throw PreconditionError("verify needs --trials >= 1");
  Json out{{"suite", info.name}, {"theorem", info.theorem}, {"seed", a.seed}};
  if (a.replay_trial) {
    TrialResult r = run_trial(info.name, *a.replay_trial, a.seed, a.config);
    ok = r.ok();
    out["replay"] = trial_json(r);
    return out;
  }
  SuiteReport rep = run_suite(info.name, a.trials, a.seed, a.config);
  ok = rep.ok();
  Json failed = Json::array();
  for (const auto& r : rep.failed) failed.push_back(trial_json(r));
  out["trials"] = rep.trials;
  out["checks"] = rep.checks;
  out["failed_trials"] = rep.failed.size();
  out["failures"] = failed;
  return out;
}

Json dispatch(const CommandArgs& a, const ProblemFile& p, bool& ok) {
  const std::string& c = a.command;
  if (c == "homology") return homology_cmd(a, p);
  if (c == "index") return index_cmd(a, p);
  if (c == "torsion") return torsion_cmd(a, p);
  if (c == "lefschetz") return lefschetz_cmd(a, p);
  if (c == "tame-symbol") return tame_cmd(a, p);
  if (c == "local") return local_cmd(a, p);
  if (c == "polydisc") return polydisc_cmd(a, p);
  if (c == "bitriangle") return bitriangle_cmd(a, p, ok);
  throw ParseError("unknown command \"" + c + "\"");
}

Json error_json(const char* kind, const std::string& message) { return Json{{"error", kind}, {"message", message}}; }

}  // namespace

Outcome run_command(const CommandArgs& args) {
  Outcome out;
  Json& rep = out.report;
  rep["command"] = args.command;
  rep["args"] = args_json(args);
  rep["input_digest"] = nullptr;
  bool ok = true;
  try {
    if (args.command == "verify") {
      rep["result"] = verify_cmd(args, ok);
    } else {
      if (!args.input) throw ParseError(args.command + " needs --input FILE");
      std::string text = read_file(*args.input);
      rep["input_digest"] = fnv1a_hex(text);
      ProblemFile p = parse_problem(text);
      rep["backend"] = backend_name(p.backend);
      rep["field"] = p.field.name();
      rep["result"] = dispatch(args, p, ok);
    }
    out.exit_code = ok ? kOk : kFailed;
    rep["status"] = ok ? "ok" : "failed";
  } catch (const NonCommutingError& e) {
    rep["result"] = error_json("non-commuting", e.what());
    rep["result"]["pair"] = {e.first, e.second};
    out.exit_code = kPrecondition;
  } catch (const NotFredholm& e) {
    rep["result"] = error_json("not-fredholm", e.what());
    out.exit_code = kPrecondition;
  } catch (const PreconditionError& e) {
    rep["result"] = error_json("precondition", e.what());
    out.exit_code = kPrecondition;
  } catch (const ParseError& e) {
    rep["result"] = error_json("parse", e.what());
    out.exit_code = kParse;
  } catch (const std::logic_error& e) {
    rep["result"] = error_json("precondition", e.what());
    out.exit_code = kPrecondition;
  }
  if (out.exit_code >= kPrecondition) rep["status"] = "error";
  rep["exit_status"] = out.exit_code;
  return out;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    if (j.empty() && !prefix.empty()) os << prefix << ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (j.empty()) {
      os << prefix << ": []\n";
    } else if (scalars) {
      os << prefix << ":";
      for (const auto& x : j) os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
      os << "\n";
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", os);
    }
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace jt
