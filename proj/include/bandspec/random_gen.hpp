#pragma once

#include <cstdint>
#include <random>

#include "bandspec/banded.hpp"
#include "bandspec/measure.hpp"

namespace bandspec {

using Rng = std::mt19937_64;

/// Random member of the banded class: Hermitian diagonal blocks with
/// entries in [-1,1], upper-triangular subdiagonal blocks with positive
/// diagonal, and a final echelon block whose pivot columns are drawn
/// uniformly from the valid increasing sequences.
BandedHermitian random_banded(int k, int dim, Rng& rng);

/// Random dense Hermitian matrix with unit-scale Gaussian entries.
Matrix random_hermitian(int dim, Rng& rng);

/// Random normalized measure with total rank dim and atom ranks <= k;
/// resamples until validate_measure accepts (generic draws do).
MatrixMeasure random_measure(int k, int dim, Rng& rng);

/// Random echelon matrix (rows x cols, rows <= cols) with positive pivots
/// at uniformly chosen increasing pivot columns.
Matrix random_echelon(int rows, int cols, Rng& rng);

}  // namespace bandspec
