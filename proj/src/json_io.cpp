#include "bandspec/json_io.hpp"

#include <fstream>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex entry must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const Json& row : j) {
    if (!row.is_array()) throw SchemaError("matrix row must be an array");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      throw SchemaError("matrix rows have unequal lengths");
  }
  if (rows == 0 || cols <= 0) throw SchemaError("matrix must be non-empty");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
  return m;
}

Json banded_to_json(const BandedHermitian& b) {
  Json out;
  out["k"] = b.k();
  out["N"] = b.dim();
  Json diag = Json::array();
  for (const Matrix& a : b.diag_blocks()) diag.push_back(matrix_to_json(a));
  out["A"] = std::move(diag);
  Json sub = Json::array();
  for (const Matrix& s : b.sub_blocks()) sub.push_back(matrix_to_json(s));
  out["B"] = std::move(sub);
  return out;
}

BandedHermitian banded_from_json(const Json& j) {
  for (const char* field : {"k", "N", "A", "B"})
    if (!j.contains(field))
      throw SchemaError(std::string("banded matrix needs field ") + field);
  int k = j["k"].get<int>();
  int dim = j["N"].get<int>();
  std::vector<Matrix> diag, sub;
  for (const Json& a : j["A"]) diag.push_back(matrix_from_json(a));
  for (const Json& b : j["B"]) sub.push_back(matrix_from_json(b));
  try {
    return BandedHermitian(k, dim, std::move(diag), std::move(sub));
  } catch (const Error& e) {
    throw SchemaError(std::string("banded matrix malformed: ") + e.what());
  }
}

Json measure_to_json(const MatrixMeasure& mu) {
  Json out;
  out["k"] = mu.k();
  Json atoms = Json::array();
  for (const MeasureAtom& a : mu.atoms()) {
    Json atom;
    atom["x"] = a.x;
    atom["W"] = matrix_to_json(a.weight);
    atoms.push_back(std::move(atom));
  }
  out["atoms"] = std::move(atoms);
  return out;
}

MatrixMeasure measure_from_json(const Json& j) {
  if (!j.contains("k") || !j.contains("atoms"))
    throw SchemaError("measure needs fields k and atoms");
  int k = j["k"].get<int>();
  std::vector<MeasureAtom> atoms;
  for (const Json& a : j["atoms"]) {
    if (!a.contains("x") || !a.contains("W"))
      throw SchemaError("measure atom needs fields x and W");
    MeasureAtom atom;
    atom.x = a["x"].get<double>();
    atom.weight = matrix_from_json(a["W"]);
    atoms.push_back(std::move(atom));
  }
  try {
    return MatrixMeasure(k, std::move(atoms));
  } catch (const Error& e) {
    throw SchemaError(std::string("measure malformed: ") + e.what());
  }
}

MatrixInput matrix_input_from_json(const Json& j) {
  MatrixInput in;
  if (j.is_array()) {
    in.dense = matrix_from_json(j);
    return in;
  }
  if (!j.is_object()) throw SchemaError("matrix input must be object or array");
  if (j.contains("A") && j.contains("B")) {
    in.banded = banded_from_json(j);
    in.dense = in.banded->dense();
    in.k = in.banded->k();
    return in;
  }
  if (j.contains("M")) {
    in.dense = matrix_from_json(j["M"]);
    if (j.contains("k")) in.k = j["k"].get<int>();
    return in;
  }
  throw SchemaError("matrix input needs either A/B blocks or M");
}

bool is_measure_json(const Json& j) {
  return j.is_object() && j.contains("atoms");
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot write " + path);
  f << text;
}

}  // namespace bandspec
