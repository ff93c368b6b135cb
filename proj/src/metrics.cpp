#include "ttc/metrics.hpp"

#include "ttc/algebra.hpp"
#include "ttc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ttc {

namespace {

void check_pair(const Tensor3& ref, const Tensor3& test) {
    if (ref.dims() != test.dims())
        throw ShapeError("metrics need equal dims, got " + to_string(ref.dims()) + " and " +
                         to_string(test.dims()));
}

double psnr_from_sse(double sse, double count, double peak) {
    if (sse == 0.0) return kInfinitePsnr;
    return 10.0 * std::log10(peak * peak * count / sse);
}

double slice_sse(const Tensor3& ref, const Tensor3& test, std::size_t k) {
    return (ref.slice(k).real() - test.slice(k).real()).squaredNorm();
}

std::vector<double> gaussian_window(std::size_t size, double sigma) {
    std::vector<double> w(size);
    const double c = static_cast<double>(size - 1) / 2.0;
    double total = 0;
    for (std::size_t n = 0; n < size; ++n) {
        const double d = static_cast<double>(n) - c;
        w[n] = std::exp(-d * d / (2.0 * sigma * sigma));
        total += w[n];
    }
    for (auto& v : w) v /= total;
    return w;
}

// Separable 'valid' filtering of an n1 x n2 column-major image.
Eigen::MatrixXd filter_valid(const Eigen::MatrixXd& img, const std::vector<double>& w) {
    const auto size = static_cast<Eigen::Index>(w.size());
    const Eigen::Index rows = img.rows() - size + 1;
    const Eigen::Index cols = img.cols() - size + 1;
    Eigen::MatrixXd tmp = Eigen::MatrixXd::Zero(rows, img.cols());
    for (Eigen::Index d = 0; d < size; ++d) tmp += w[static_cast<std::size_t>(d)] * img.middleRows(d, rows);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows, cols);
    for (Eigen::Index d = 0; d < size; ++d) out += w[static_cast<std::size_t>(d)] * tmp.middleCols(d, cols);
    return out;
}

// Sum of the local SSIM map of slice k and the number of window positions.
std::pair<double, double> ssim_map_sum(const Tensor3& ref, const Tensor3& test, std::size_t k,
                                       double peak, const SsimOptions& opts) {
    std::size_t size = std::min({opts.window, ref.n1(), ref.n2()});
    if (size % 2 == 0) --size;
    const auto w = gaussian_window(size, opts.sigma);
    const Eigen::MatrixXd x = ref.slice(k).real();
    const Eigen::MatrixXd y = test.slice(k).real();
    const Eigen::MatrixXd mx = filter_valid(x, w);
    const Eigen::MatrixXd my = filter_valid(y, w);
    const Eigen::MatrixXd sxx = filter_valid(x.cwiseProduct(x), w) - mx.cwiseProduct(mx);
    const Eigen::MatrixXd syy = filter_valid(y.cwiseProduct(y), w) - my.cwiseProduct(my);
    const Eigen::MatrixXd sxy = filter_valid(x.cwiseProduct(y), w) - mx.cwiseProduct(my);
    const double c1 = (opts.k1 * peak) * (opts.k1 * peak);
    const double c2 = (opts.k2 * peak) * (opts.k2 * peak);
    const Eigen::ArrayXXd num = (2.0 * mx.cwiseProduct(my).array() + c1) * (2.0 * sxy.array() + c2);
    const Eigen::ArrayXXd den = (mx.cwiseAbs2().array() + my.cwiseAbs2().array() + c1) *
                                (sxx.array() + syy.array() + c2);
    return {(num / den).sum(), static_cast<double>(num.size())};
}

}  // namespace

double psnr(const Tensor3& ref, const Tensor3& test, double peak) {
    check_pair(ref, test);
    double sse = 0;
    for (std::size_t k = 0; k < ref.n3(); ++k) sse += slice_sse(ref, test, k);
    return psnr_from_sse(sse, static_cast<double>(ref.size()), peak);
}

double mpsnr(const Tensor3& ref, const Tensor3& test, double peak) {
    check_pair(ref, test);
    double total = 0;
    for (std::size_t k = 0; k < ref.n3(); ++k)
        total += psnr_from_sse(slice_sse(ref, test, k),
                               static_cast<double>(ref.dims().slice_size()), peak);
    return total / static_cast<double>(ref.n3());
}

double ssim_slice(const Tensor3& ref, const Tensor3& test, std::size_t k, double peak,
                  const SsimOptions& opts) {
    check_pair(ref, test);
    if (k >= ref.n3()) throw ParameterError("slice index out of range");
    auto [sum, count] = ssim_map_sum(ref, test, k, peak, opts);
    return sum / count;
}

double ssim(const Tensor3& ref, const Tensor3& test, double peak, const SsimOptions& opts) {
    check_pair(ref, test);
    double sum = 0, count = 0;
    for (std::size_t k = 0; k < ref.n3(); ++k) {
        auto [s, c] = ssim_map_sum(ref, test, k, peak, opts);
        sum += s;
        count += c;
    }
    return sum / count;
}

double mssim(const Tensor3& ref, const Tensor3& test, double peak, const SsimOptions& opts) {
    check_pair(ref, test);
    double total = 0;
    for (std::size_t k = 0; k < ref.n3(); ++k) total += ssim_slice(ref, test, k, peak, opts);
    return total / static_cast<double>(ref.n3());
}

double rel_error(const Tensor3& ref, const Tensor3& test) {
    check_pair(ref, test);
    const double denom = fro_norm(ref);
    if (denom == 0.0) throw ParameterError("rel_error: reference tensor is zero");
    return fro_norm(test - ref) / denom;
}

MetricsReport compute_metrics(const Tensor3& ref, const Tensor3& test, double peak) {
    return {psnr(ref, test, peak), ssim(ref, test, peak), mpsnr(ref, test, peak),
            mssim(ref, test, peak), rel_error(ref, test)};
}

}  // namespace ttc
