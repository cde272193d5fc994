#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bandspec/banded.hpp"
#include "bandspec/measure.hpp"

namespace bandspec {

using Json = nlohmann::ordered_json;

/// Complex entries serialize as [re, im]; matrices as row-major nested
/// arrays. Doubles round-trip losslessly (shortest repr).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Banded schema: {"k", "N", "A": [blocks...], "B": [blocks...]}.
Json banded_to_json(const BandedHermitian& b);
BandedHermitian banded_from_json(const Json& j);

/// Measure schema: {"k", "atoms": [{"x", "W"}...]}; factors are
/// recomputed canonically on load.
Json measure_to_json(const MatrixMeasure& mu);
MatrixMeasure measure_from_json(const Json& j);

/// A matrix input file: banded schema, dense {"M": rows, "k"?: int},
/// or a bare nested array. k may come from the file or the caller.
struct MatrixInput {
  Matrix dense;
  std::optional<BandedHermitian> banded;
  std::optional<int> k;
};

MatrixInput matrix_input_from_json(const Json& j);

/// True if the file looks like a measure (has "atoms").
bool is_measure_json(const Json& j);

Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace bandspec
