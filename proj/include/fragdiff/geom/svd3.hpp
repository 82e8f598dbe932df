#pragma once

#include "fragdiff/geom/types.hpp"

namespace fragdiff::geom {

// Eigendecomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
// Eigenvalues sorted descending; V columns are the matching eigenvectors.
void sym_eig3(const Mat3& a, double eigenvalues[3], Mat3& eigenvectors);

// Full SVD of a general 3x3 matrix: m = U diag(s) V^T with s[0] >= s[1] >=
// s[2] >= 0 and U, V orthonormal. Rank-deficient inputs get orthonormal
// completions; in that case U's free columns are chosen right-handed.
void svd3(const Mat3& m, Mat3& u, double s[3], Mat3& v);

}  // namespace fragdiff::geom
