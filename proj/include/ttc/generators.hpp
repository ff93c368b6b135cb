#pragma once

#include "ttc/algebra.hpp"
#include "ttc/mask.hpp"
#include "ttc/transforms.hpp"

#include <cstdint>

namespace ttc {

/// Starting point of the alternating projection.
enum class GeneratorInit {
    /// i.i.d. standard Gaussian entries.
    Gaussian,
    /// M(:,:,k) = sum_{a+b=k} A_a B_b^T with Gaussian factors A (n1 x r x d1+1)
    /// and B (n2 x r x d2+1), d1 + d2 = n3 - 1: a linear convolution along
    /// mode 3. Such M has tubal rank <= r under every DFT of length >= n3,
    /// slim or square, where the Gaussian start converges slowly.
    Convolution,
    /// Convolution with palindromic factors (A_a = A_{d1-a}, B_b = B_{d2-b}),
    /// so M(:,:,k) = M(:,:,n3-1-k). Each DCT-II slice is then a scalar
    /// multiple of a DFT-type evaluation, so the rank bound also holds under
    /// the DCT: a common start for DFT/DCT pairs in gen_double.
    PalindromicConvolution,
};

struct GeneratorConfig {
    std::size_t max_iters = 500;
    GeneratorInit init = GeneratorInit::Gaussian;
    /// Target for sigma_{r+1}-tube / sigma_1-tube.
    double rank_tol = 1e-8;
    std::uint64_t seed = 0;
    /// Draw a real initial tensor and keep iterates real.
    bool real = false;
    /// Iterations over which the ratio must improve by stall_improvement
    /// (relative) before a restart.
    std::size_t stall_window = 50;
    double stall_improvement = 1e-3;
    std::size_t max_restarts = 3;

    void validate() const;
};

/// Nearest tensor of tubal rank <= r: slices keep their leading r singular
/// triplets. Throws ParameterError unless 1 <= r <= min(n1, n2).
Tensor3 truncated_t_svd_project(const Tensor3& a, std::size_t r);

/// Ratio of tube r (0-based, i.e. the (r+1)-th) to tube 0 of the t-SVD;
/// 0 when r >= min(n1, n2) or the tensor is zero.
double tube_ratio(const TSvdFactors& f, std::size_t r) noexcept;

/// Alternating projection for M with rank(T(M)) = r and ||T(M)||_F = 1.
/// Throws GeneratorError when restarts are exhausted.
Tensor3 gen_single(const LinearTransform& t, const Dims& dims, std::size_t r,
                   const GeneratorConfig& cfg = {});

/// Alternating projection for M with rank(T1(M)) = r1, rank(T2(M)) = r2 and
/// ||M||_F = 1.
Tensor3 gen_double(const LinearTransform& t1, std::size_t r1, const LinearTransform& t2,
                   std::size_t r2, const Dims& dims, const GeneratorConfig& cfg = {});

/// Each index observed independently with probability p.
SamplingMask bernoulli_mask(const Dims& dims, double p, std::uint64_t seed);

}  // namespace ttc
