#pragma once

#include "ttc/tensor.hpp"

namespace ttc {

/// Thin SVD of a dense complex matrix: a = u * diag(s) * v^H.
struct MatrixSvd {
    Matrix u;
    RealVector s;
    Matrix v;
};

/// LAPACK divide-and-conquer SVD, falling back to the QR-iteration driver
/// when it does not converge. Throws NumericError if both fail.
MatrixSvd dense_svd(const Matrix& a);

/// Singular values only.
RealVector singular_values(const Matrix& a);

/// Relative threshold below which a singular value counts as zero when
/// forming the pseudo-inverse.
inline constexpr double kPinvRankTol = 1e-12;

/// Moore-Penrose pseudo-inverse V * S^-1 * U^H of a matrix with full column
/// rank. Throws SingularityError when a singular value is below
/// kPinvRankTol * sigma_max or when rows < cols.
Matrix pseudo_inverse(const Matrix& a);

}  // namespace ttc
