// JSON interchange for algebras, modules and dumps, plus content
// fingerprints. Every object carries "schema": 1.
#pragma once

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "gorext/resolution.hpp"
#include "gorext/spectral.hpp"

namespace gorext {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class SchemaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("matrix: row of wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<Scalar>();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Algebras

/// The canonical form: char, dim, basis, unit, mult[i][j] (coefficients of
/// e_i e_j), maxideal. This is what the fingerprint hashes.
inline Json algebra_canonical_json(const LocalAlgebra& A) {
  const std::size_t n = A.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json v = Json::array();
      for (std::size_t l = 0; l < n; ++l) v.push_back(A.structure_constant(i, j, l));
      row.push_back(std::move(v));
    }
    mult.push_back(std::move(row));
  }
  return Json{{"schema", kSchemaVersion}, {"char", A.field().characteristic()}, {"dim", n},
              {"basis", A.labels()},     {"unit", A.unit()},                     {"mult", std::move(mult)},
              {"maxideal", A.maxideal()}};
}

inline std::string fingerprint(const LocalAlgebra& A) { return sha256_hex(algebra_canonical_json(A).dump()); }

/// Canonical form plus the presentation, when there is one.
inline Json algebra_to_json(const LocalAlgebra& A) {
  Json j = algebra_canonical_json(A);
  if (const auto& p = A.presentation()) j["presentation"] = Json{{"variables", p->variables}, {"generators", p->generators}};
  return j;
}

inline void check_schema(const Json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchemaVersion)
    throw SchemaError(std::string(what) + ": missing or unsupported schema version");
}

inline LocalAlgebra algebra_from_json(const Json& j) {
  check_schema(j, "algebra");
  try {
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<Scalar> mult(n * n * n, 0);
    const Json& m = j.at("mult");
    if (!m.is_array() || m.size() != n) throw SchemaError("algebra: mult must be dim x dim x dim");
    for (std::size_t a = 0; a < n; ++a) {
      if (m[a].size() != n) throw SchemaError("algebra: mult must be dim x dim x dim");
      for (std::size_t b = 0; b < n; ++b) {
        if (m[a][b].size() != n) throw SchemaError("algebra: mult must be dim x dim x dim");
        for (std::size_t l = 0; l < n; ++l) mult[(a * n + b) * n + l] = m[a][b][l].get<Scalar>();
      }
    }
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != n) throw SchemaError("algebra: basis has wrong length");
    LocalAlgebra A(PrimeField(j.at("char").get<std::uint32_t>()), std::move(labels), std::move(mult),
                   j.at("unit").get<std::size_t>(), j.at("maxideal").get<std::vector<std::size_t>>());
    if (j.contains("presentation")) {
      const Json& p = j["presentation"];
      A = A.with_presentation({p.at("variables").get<std::vector<std::string>>(), p.at("generators").get<std::vector<std::string>>()});
    }
    return A;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("algebra: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Modules

inline Json module_to_json(const AModule& M) {
  Json acts = Json::array();
  for (const auto& a : M.actions()) acts.push_back(matrix_to_json(a));
  return Json{{"schema", kSchemaVersion}, {"algebra", fingerprint(M.algebra())}, {"dim", M.dim()}, {"action", std::move(acts)}};
}

/// Validates the fingerprint against A and the module axioms.
inline AModule module_from_json(const Json& j, const LocalAlgebra& A) {
  check_schema(j, "module");
  try {
    if (j.at("algebra").get<std::string>() != fingerprint(A)) throw SchemaError("module: algebra fingerprint does not match");
    const std::size_t d = j.at("dim").get<std::size_t>();
    const Json& acts = j.at("action");
    if (!acts.is_array() || acts.size() != A.dim()) throw SchemaError("module: need one action matrix per basis element");
    std::vector<Matrix> action;
    for (const auto& a : acts) action.push_back(matrix_from_json(a, d, d));
    return AModule(A, std::move(action));
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("module: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Dumps

inline Json betti_table_json(const AModule& M, int B) {
  Json j{{"schema", kSchemaVersion}, {"algebra", fingerprint(M.algebra())}, {"module_dim", M.dim()}, {"bound", B}};
  j["betti"] = poincare_truncation(M, B).coefficients;
  j["bass"] = bass_truncation(M, B).coefficients;
  return j;
}

inline Json spectral_pages_json(const SpectralSequencePages& S) {
  Json pages = Json::array();
  for (const auto& pg : S.pages) {
    Json cells = Json::array();
    for (const auto& [pq, d] : pg.dims)
      if (d) cells.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"dim", d}});
    pages.push_back(Json{{"r", pg.r}, {"cells", std::move(cells)}});
  }
  Json hom = Json::array();
  for (const auto& [n, d] : S.homology) hom.push_back(Json{{"n", n}, {"dim", d}});
  return Json{{"schema", kSchemaVersion},
              {"p_range", {S.p_lo, S.p_hi}},
              {"n_range", {S.n_lo, S.n_hi}},
              {"pages", std::move(pages)},
              {"homology", std::move(hom)},
              {"stable_from", S.stable_from},
              {"converges", S.converges()}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace gorext
