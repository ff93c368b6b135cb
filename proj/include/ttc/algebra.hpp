#pragma once

#include "ttc/tensor.hpp"

#include <vector>

namespace ttc {

/// Per-slice thin SVD of a tensor: slice k equals
/// U(:,:,k) * diag(S[k]) * V(:,:,k)^H, with s = min(n1, n2) columns.
struct TSvdFactors {
    Tensor3 U;                    ///< n1 x s x n3
    std::vector<RealVector> S;    ///< n3 vectors of length s, non-increasing
    Tensor3 V;                    ///< n2 x s x n3

    std::size_t rank_capacity() const noexcept { return U.n2(); }
    std::size_t slices() const noexcept { return S.size(); }

    /// Largest singular value over all slices.
    double max_singular_value() const noexcept;
    /// l2 norm of the tube S(i, i, :).
    double tube_norm(std::size_t i) const noexcept;
    /// S as an s x s x n3 tensor with diagonal frontal slices.
    Tensor3 diagonal_tensor() const;
    /// U(:, 0:r, :), V(:, 0:r, :) and S restricted to the leading r tubes.
    TSvdFactors leading(std::size_t r) const;
    /// U * diag(S) * V^H.
    Tensor3 reconstruct() const;
};

inline constexpr double kDefaultRankTol = 1e-8;

/// C(:,:,k) = A(:,:,k) * B(:,:,k).
Tensor3 t_product(const Tensor3& a, const Tensor3& b);

/// Per-slice transpose (no conjugation).
Tensor3 t_transpose(const Tensor3& a);
/// Per-slice conjugate transpose.
Tensor3 t_conj_transpose(const Tensor3& a);

/// Every frontal slice is I_n.
Tensor3 identity_tensor(std::size_t n, std::size_t n3);

/// True iff ||U*U^H - I||_F <= tol and ||U^H*U - I||_F <= tol.
bool is_unitary(const Tensor3& u, double tol = 1e-8);

/// Per-slice SVD. All-zero slices get identity-extended U and V.
TSvdFactors t_svd(const Tensor3& a);

/// Number of tubes S(i,i,:) whose norm exceeds eps_rank times the largest
/// singular value of any slice.
std::size_t tubal_rank(const TSvdFactors& f, double eps_rank = kDefaultRankTol);
std::size_t tubal_rank(const Tensor3& a, double eps_rank = kDefaultRankTol);

/// Largest singular value of any slice; the operator norm of B -> A * B.
double spectral_norm(const Tensor3& a);
/// Sum of all singular values of all slices.
double nuclear_norm(const Tensor3& a);

/// <A, B> = sum conj(a_ijk) * b_ijk.
Complex inner_product(const Tensor3& a, const Tensor3& b);
double fro_norm(const Tensor3& a) noexcept;
/// Largest entry magnitude.
double inf_norm(const Tensor3& a) noexcept;
/// max(largest l2 norm of a horizontal slice A(i,:,:), largest l2 norm of a
/// lateral slice A(:,j,:)).
double inf2_norm(const Tensor3& a) noexcept;

/// result(i, j, k') = sum_k t(k', k) * a(i, j, k).
Tensor3 mode3_product(const Tensor3& a, const Matrix& t);

}  // namespace ttc
