#pragma once

#include "ttc/tensor.hpp"

#include <limits>

namespace ttc {

/// Returned by the PSNR functions when the inputs are identical.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct SsimOptions {
    std::size_t window = 11;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
};

struct MetricsReport {
    double psnr = 0;
    double ssim = 0;
    double mpsnr = 0;
    double mssim = 0;
    double rel_error = 0;
};

/// 10 log10(peak^2 N / ||ref - test||_F^2) over all N entries, real parts.
double psnr(const Tensor3& ref, const Tensor3& test, double peak = 1.0);
/// Mean of per-slice PSNR.
double mpsnr(const Tensor3& ref, const Tensor3& test, double peak = 1.0);

/// SSIM of one frontal slice: mean of the local SSIM map over all window
/// positions that fit inside the slice. Slices smaller than the window use
/// the largest odd window that fits.
double ssim_slice(const Tensor3& ref, const Tensor3& test, std::size_t k, double peak = 1.0,
                  const SsimOptions& opts = {});
/// Mean local SSIM pooled over all window positions of all slices.
double ssim(const Tensor3& ref, const Tensor3& test, double peak = 1.0,
            const SsimOptions& opts = {});
/// Mean of per-slice SSIM.
double mssim(const Tensor3& ref, const Tensor3& test, double peak = 1.0,
             const SsimOptions& opts = {});

/// ||test - ref||_F / ||ref||_F. Throws ParameterError for a zero ref.
double rel_error(const Tensor3& ref, const Tensor3& test);

MetricsReport compute_metrics(const Tensor3& ref, const Tensor3& test, double peak = 1.0);

}  // namespace ttc
