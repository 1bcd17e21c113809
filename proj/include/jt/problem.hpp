#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jt/koszul.hpp"
#include "jt/poly.hpp"

namespace jt {

enum class Backend { matrix, poly, local, polydisc };

const char* backend_name(Backend b);

// A parsed problem file. Which members are filled depends on the backend:
// matrices for matrix, polys for poly/local, multi for polydisc.
struct ProblemFile {
  FieldSpec field;
  Backend backend = Backend::matrix;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
  std::vector<Poly> polys;
  std::optional<MultiPoly> multi;
  // Replacement of slot 1 for product constructions: B = (b1, A_2, ..., A_n).
  std::optional<Matrix> matrix_b1;
  std::optional<Poly> poly_b1;
  std::optional<std::vector<Scalar>> point;
  std::optional<Scalar> at;
  std::vector<FactoredPoly> factored;

  MatrixTuple matrix_tuple() const;
  PolyTuple poly_tuple() const;
  std::size_t size() const;
};

// Throws ParseError (with a JSON path) on schema violations and
// NonCommutingError for non-commuting matrices.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);
std::string read_file(const std::string& path);

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace jt
