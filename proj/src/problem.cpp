#include "jt/problem.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jt {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing \"") + key + "\"");
  return j.at(key);
}

Scalar scalar(const json& j, FieldSpec f, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, j.dump());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  fail(path, "field elements must be strings or integers, got " + j.dump());
}

unsigned small_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 1000) fail(path, "expected a small non-negative integer");
  return j.get<unsigned>();
}

FieldSpec field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (j.is_object() && j.contains("GF") && j.size() == 1) {
    const json& p = j.at("GF");
    if (!p.is_number_unsigned() || p.get<std::uint64_t>() >= (1ULL << 31) || !is_prime(p.get<std::uint32_t>()))
      fail("field.GF", "expected a prime below 2^31");
    return FieldSpec::prime_field(p.get<std::uint32_t>());
  }
  fail("field", "expected \"Q\" or {\"GF\": p}");
}

Matrix matrix(const json& j, FieldSpec f, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
  std::size_t cols = 0;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(rp, "expected a row array");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) fail(rp, "rows have different lengths");
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < cols; ++c) row.push_back(scalar(j[r][c], f, rp + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  if (cols != rows.size()) fail(path, "operator matrix is not square");
  return Matrix::from_rows(rows, f);
}

Poly poly(const json& j, FieldSpec f, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a coefficient array, low degree first");
  std::vector<Scalar> cs;
  for (std::size_t k = 0; k < j.size(); ++k) cs.push_back(scalar(j[k], f, path + "[" + std::to_string(k) + "]"));
  return Poly(f, std::move(cs));
}

MultiPoly multi(const json& j, FieldSpec f, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of terms");
  std::optional<MultiPoly> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string tp = path + "[" + std::to_string(k) + "]";
    const json& ex = member(j[k], "exponents", tp);
    if (!ex.is_array() || ex.empty()) fail(tp + ".exponents", "expected a nonempty array");
    std::vector<unsigned> e;
    for (std::size_t v = 0; v < ex.size(); ++v) e.push_back(small_uint(ex[v], tp + ".exponents[" + std::to_string(v) + "]"));
    if (!out) out.emplace(f, e.size());
    if (e.size() != out->nvars()) fail(tp + ".exponents", "inconsistent number of variables");
    out->add_term(e, scalar(member(j[k], "coefficient", tp), f, tp + ".coefficient"));
  }
  return *out;
}

FactoredPoly factored(const json& j, FieldSpec f, const std::string& path) {
  FactoredPoly out{scalar(member(j, "lead", path), f, path + ".lead"), {}};
  const json& roots = member(j, "roots", path);
  if (!roots.is_array()) fail(path + ".roots", "expected an array");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::string rp = path + ".roots[" + std::to_string(k) + "]";
    out.roots.emplace_back(scalar(member(roots[k], "root", rp), f, rp + ".root"),
                           small_uint(member(roots[k], "multiplicity", rp), rp + ".multiplicity"));
  }
  return out;
}

std::vector<Scalar> scalars(const json& j, FieldSpec f, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(scalar(j[k], f, path + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::matrix: return "matrix";
    case Backend::poly: return "poly";
    case Backend::local: return "local";
    case Backend::polydisc: return "polydisc";
  }
  return "?";
}

MatrixTuple ProblemFile::matrix_tuple() const {
  if (backend != Backend::matrix) throw PreconditionError("command needs a matrix problem");
  return make_operator_tuple(field, dim, matrices);
}

PolyTuple ProblemFile::poly_tuple() const {
  if (backend != Backend::poly && backend != Backend::local) throw PreconditionError("command needs a polynomial problem");
  return jt::poly_tuple(polys);
}

std::size_t ProblemFile::size() const {
  switch (backend) {
    case Backend::matrix: return matrices.size();
    case Backend::poly:
    case Backend::local: return polys.size();
    case Backend::polydisc: return multi ? multi->nvars() + 1 : 0;
  }
  return 0;
}

ProblemFile parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  static const std::vector<std::string> known{"field", "backend", "operators", "b1", "point", "at", "factored"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) fail(k, "unknown key");

  ProblemFile p;
  p.field = j.contains("field") ? field(j.at("field")) : FieldSpec::rationals();
  const json& b = member(j, "backend", "$");
  std::string bs = b.is_string() ? b.get<std::string>() : "";
  if (bs == "matrix") p.backend = Backend::matrix;
  else if (bs == "poly") p.backend = Backend::poly;
  else if (bs == "local") p.backend = Backend::local;
  else if (bs == "polydisc") p.backend = Backend::polydisc;
  else fail("backend", "expected one of matrix, poly, local, polydisc");

  if (j.contains("factored")) {
    const json& fs = j.at("factored");
    if (!fs.is_array()) fail("factored", "expected an array");
    for (std::size_t k = 0; k < fs.size(); ++k) p.factored.push_back(factored(fs[k], p.field, "factored[" + std::to_string(k) + "]"));
  }
  if (j.contains("point")) p.point = scalars(j.at("point"), p.field, "point");
  if (j.contains("at")) p.at = scalar(j.at("at"), p.field, "at");

  const json* ops = j.contains("operators") ? &j.at("operators") : nullptr;
  if (ops && !ops->is_array()) fail("operators", "expected an array");
  auto op_path = [](std::size_t k) { return "operators[" + std::to_string(k) + "]"; };
  switch (p.backend) {
    case Backend::matrix:
      if (!ops || ops->empty()) fail("operators", "expected at least one matrix");
      for (std::size_t k = 0; k < ops->size(); ++k) p.matrices.push_back(matrix((*ops)[k], p.field, op_path(k)));
      p.dim = p.matrices[0].rows();
      for (std::size_t k = 0; k < p.matrices.size(); ++k)
        if (p.matrices[k].rows() != p.dim) fail(op_path(k), "operators have different sizes");
      if (j.contains("b1")) {
        p.matrix_b1 = matrix(j.at("b1"), p.field, "b1");
        if (p.matrix_b1->rows() != p.dim) fail("b1", "wrong size");
      }
      make_operator_tuple(p.field, p.dim, p.matrices);  // NonCommutingError
      break;
    case Backend::poly:
    case Backend::local:
      if (ops) {
        for (std::size_t k = 0; k < ops->size(); ++k) p.polys.push_back(poly((*ops)[k], p.field, op_path(k)));
      } else {
        for (const auto& f : p.factored) p.polys.push_back(f.expand());
      }
      if (ops && !p.factored.empty()) {
        if (p.factored.size() != p.polys.size()) fail("factored", "count differs from operators");
        for (std::size_t k = 0; k < p.polys.size(); ++k)
          if (!(p.factored[k].expand() == p.polys[k])) fail("factored[" + std::to_string(k) + "]", "does not expand to the operator");
      }
      if (p.polys.empty()) fail("operators", "expected at least one polynomial");
      if (j.contains("b1")) p.poly_b1 = poly(j.at("b1"), p.field, "b1");
      p.dim = 1;
      break;
    case Backend::polydisc:
      if (!ops || ops->size() != 1) fail("operators", "expected exactly one multivariate polynomial");
      p.multi = multi((*ops)[0], p.field, op_path(0));
      if (p.point && p.point->size() != p.multi->nvars()) fail("point", "wrong number of coordinates");
      p.dim = 1;
      break;
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jt
