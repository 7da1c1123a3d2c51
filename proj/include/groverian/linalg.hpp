// Spectral routines for the small Hermitian matrices that show up in
// bipartite analysis (reduced states and coefficient-matrix Gram products).

#pragma once

#include <vector>

#include "groverian/qudit.hpp"

namespace groverian {

struct HermitianEigen {
  std::vector<double> values;  // descending
  SquareMatrix vectors;        // column k belongs to values[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi: sweeps until every off-diagonal magnitude is below
/// `tol.jacobi_off_diagonal` or `tol.jacobi_max_sweeps` is reached. Throws
/// std::invalid_argument if the input is not Hermitian within `tol.hermitian`.
HermitianEigen hermitian_eigen(const SquareMatrix& m, const Tolerances& tol = kDefaultTolerances);

std::vector<double> hermitian_eigenvalues(const SquareMatrix& m, const Tolerances& tol = kDefaultTolerances);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// Descending singular values, taken as square roots of the eigenvalues of
/// A A^dagger with negative rounding clamped to zero.
std::vector<double> singular_values(const SquareMatrix& a, const Tolerances& tol = kDefaultTolerances);
std::vector<double> singular_values(const CoeffMatrix& a, const Tolerances& tol = kDefaultTolerances);

}  // namespace groverian
