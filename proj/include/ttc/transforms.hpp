#pragma once

#include "ttc/tensor.hpp"

#include <cstdint>
#include <string>

namespace ttc {

/// Injective linear map C^{n3} -> C^{N3} applied along the third mode,
/// together with its pseudo-inverse and the conditioning statistics that
/// enter the sampling-rate bound.
class LinearTransform {
public:
    /// Validates `matrix` (N3 >= n3, full column rank) and caches pinv,
    /// sigma_max/min, kappa, rho and ||T||_{1->2}.
    explicit LinearTransform(Matrix matrix, std::string name = "custom");

    const Matrix& matrix() const noexcept { return matrix_; }
    const Matrix& pinv() const noexcept { return pinv_; }
    const std::string& name() const noexcept { return name_; }

    /// Output length N3.
    std::size_t rows() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    /// Input length n3.
    std::size_t cols() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }

    double sigma_max() const noexcept { return sigma_max_; }
    double sigma_min() const noexcept { return sigma_min_; }
    double kappa() const noexcept { return kappa_; }
    /// N3 * max(||T||_inf^2, ||T^+||_inf^2) with ||.||_inf the entrywise max.
    double rho() const noexcept { return rho_; }
    /// Largest column l2 norm.
    double one_to_two() const noexcept { return one_to_two_; }
    /// True when every entry has zero imaginary part.
    bool is_real() const noexcept { return is_real_; }

private:
    Matrix matrix_;
    Matrix pinv_;
    std::string name_;
    double sigma_max_ = 0;
    double sigma_min_ = 0;
    double kappa_ = 0;
    double rho_ = 0;
    double one_to_two_ = 0;
    bool is_real_ = false;
};

/// Unitary DFT matrix, F(k', k) = exp(-2 pi i k' k / n) / sqrt(n).
LinearTransform dft_transform(std::size_t n3);
/// Orthonormal DCT-II matrix.
LinearTransform dct_transform(std::size_t n3);
/// Orthonormal Walsh-Hadamard matrix in natural (Sylvester) ordering.
/// n3 must be a power of two.
LinearTransform dwht_transform(std::size_t n3);

enum class BaseKind { Dft, Dct, RandomUnitary };

/// First n3 columns of the N3 x N3 base matrix. `seed` is only used for
/// RandomUnitary.
LinearTransform slim_columns(BaseKind kind, std::size_t big_n3, std::size_t n3,
                             std::uint64_t seed = 0);

/// [T1; T2]. Both must share n3.
LinearTransform concat_transforms(const LinearTransform& top, const LinearTransform& bottom);
/// [T; B] for a raw block B with n3 columns; B may have zero rows.
LinearTransform concat_transforms(const LinearTransform& top, const Matrix& bottom);

/// First n3 columns of a unitary N3 x N3 matrix obtained by orthonormalizing
/// a seeded complex Gaussian matrix.
LinearTransform random_unitary(std::size_t n3, std::size_t big_n3, std::uint64_t seed);

/// The n3 singular values random_conditioned(n3, seed, smin, smax) draws,
/// in draw order.
RealVector conditioned_spectrum(std::size_t n3, std::uint64_t seed, double smin, double smax);

/// U * Sigma * V^H with U (N3 x N3) and V (n3 x n3) random unitary and the
/// n3 singular values drawn uniformly from [smin, smax]. When N3 > n3,
/// Sigma occupies the top-left n3 x n3 block.
LinearTransform random_conditioned(std::size_t n3, std::uint64_t seed, double smin, double smax,
                                   std::size_t big_n3 = 0);

/// T applied along mode 3: n1 x n2 x n3 -> n1 x n2 x N3.
Tensor3 apply(const LinearTransform& t, const Tensor3& a);
/// T^+ applied along mode 3: n1 x n2 x N3 -> n1 x n2 x n3.
Tensor3 pinv_apply(const LinearTransform& t, const Tensor3& b);

}  // namespace ttc
