#pragma once

#include <string>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"
#include "specband/measure.hpp"

namespace specband::io {

inline constexpr int kFormatVersion = 1;

// Matrix file: { format_version, n, N, degenerations: [m_1,...],
//                diagonals: { "0": [N values], ..., "n": [N-n values] } }.
// Loading revalidates the class pattern and cross-checks the recorded
// degeneration indices; a mismatch is a FormatError.
BandMatrix load_matrix(const std::string& path);
void save_matrix(const BandMatrix& a, const DegenerationProfile& profile,
                 const std::string& path);

// T file: { format_version, n, rows: n x n row-major, zeros below the
// diagonal required }.
InitialConditions load_initial_conditions(const std::string& path);
void save_initial_conditions(const InitialConditions& t,
                             const std::string& path);

// Measure file: { format_version, n, atoms: [ { x, weight: n*n row-major } ] }
// with atoms sorted by x.
MatrixMeasure load_measure(const std::string& path);
void save_measure(const MatrixMeasure& sigma, const std::string& path);

// Cumulative step-function export, one row per atom boundary:
// t, sigma[i][j] for all i <= j (the lower triangle is implied).
void export_step_function_csv(const MatrixMeasure& sigma,
                              const std::string& path);

}  // namespace specband::io
