#include "ttc/transforms.hpp"

#include "ttc/algebra.hpp"
#include "ttc/errors.hpp"
#include "ttc/linalg.hpp"
#include "ttc/rng.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>

namespace ttc {
namespace {

constexpr double kInjectivityTol = 1e-10;

Matrix dft_matrix(std::size_t n) {
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            // Reduce the phase index first so large n keeps full accuracy.
            double angle = -2.0 * std::numbers::pi * static_cast<double>((r * c) % n) /
                           static_cast<double>(n);
            f(r, c) = std::polar(scale, angle);
        }
    return f;
}

Matrix dct_matrix(std::size_t n) {
    Matrix c(n, n);
    const double nn = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = k == 0 ? std::sqrt(1.0 / nn) : std::sqrt(2.0 / nn);
        for (std::size_t j = 0; j < n; ++j)
            c(k, j) = s * std::cos(std::numbers::pi * (2.0 * j + 1.0) * k / (2.0 * nn));
    }
    return c;
}

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
// of R's diagonal moved into Q.
Matrix haar_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix g(n, n);
    for (Eigen::Index c = 0; c < g.cols(); ++c)
        for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = complex_gaussian(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix& rr = qr.matrixQR();
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
        const Complex d = rr(c, c);
        if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

LinearTransform::LinearTransform(Matrix matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)) {
    if (matrix_.cols() == 0 || matrix_.rows() < matrix_.cols())
        throw ParameterError("transform must be N3 x n3 with N3 >= n3 >= 1, got " +
                             std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()));
    if (!matrix_.allFinite()) throw ParameterError("transform has non-finite entries");
    const RealVector s = singular_values(matrix_);
    sigma_max_ = s(0);
    sigma_min_ = s(s.size() - 1);
    if (!(sigma_min_ > kInjectivityTol * sigma_max_))
        throw SingularityError("transform '" + name_ + "' is not injective (sigma_min " +
                               std::to_string(sigma_min_) + ", sigma_max " +
                               std::to_string(sigma_max_) + ")");
    pinv_ = pseudo_inverse(matrix_);
    kappa_ = sigma_max_ / sigma_min_;
    const double t_inf = matrix_.cwiseAbs().maxCoeff();
    const double p_inf = pinv_.cwiseAbs().maxCoeff();
    rho_ = static_cast<double>(rows()) * std::max(t_inf * t_inf, p_inf * p_inf);
    one_to_two_ = matrix_.colwise().norm().maxCoeff();
    is_real_ = matrix_.imag().cwiseAbs().maxCoeff() == 0.0;
}

LinearTransform dft_transform(std::size_t n3) {
    if (n3 == 0) throw ParameterError("dft_transform needs n3 >= 1");
    return LinearTransform(dft_matrix(n3), "dft");
}

LinearTransform dct_transform(std::size_t n3) {
    if (n3 == 0) throw ParameterError("dct_transform needs n3 >= 1");
    return LinearTransform(dct_matrix(n3), "dct");
}

LinearTransform dwht_transform(std::size_t n3) {
    if (!is_power_of_two(n3))
        throw ParameterError("dwht_transform needs a power-of-two n3, got " + std::to_string(n3));
    Matrix h = Matrix::Ones(1, 1);
    while (static_cast<std::size_t>(h.rows()) < n3) {
        const auto m = h.rows();
        Matrix next(2 * m, 2 * m);
        next << h, h, h, -h;
        h = std::move(next);
    }
    h /= std::sqrt(static_cast<double>(n3));
    return LinearTransform(std::move(h), "dwht");
}

LinearTransform slim_columns(BaseKind kind, std::size_t big_n3, std::size_t n3,
                             std::uint64_t seed) {
    if (n3 == 0 || big_n3 < n3)
        throw ParameterError("slim_columns needs N3 >= n3 >= 1, got N3=" +
                             std::to_string(big_n3) + ", n3=" + std::to_string(n3));
    const auto cols = static_cast<Eigen::Index>(n3);
    switch (kind) {
    case BaseKind::Dft:
        return LinearTransform(dft_matrix(big_n3).leftCols(cols),
                               big_n3 == n3 ? "dft" : "dft-slim");
    case BaseKind::Dct:
        return LinearTransform(dct_matrix(big_n3).leftCols(cols),
                               big_n3 == n3 ? "dct" : "dct-slim");
    case BaseKind::RandomUnitary:
        return random_unitary(n3, big_n3, seed);
    }
    throw ParameterError("unknown transform kind");
}

LinearTransform concat_transforms(const LinearTransform& top, const LinearTransform& bottom) {
    if (top.cols() != bottom.cols())
        throw ShapeError("concat_transforms: n3 mismatch " + std::to_string(top.cols()) +
                         " vs " + std::to_string(bottom.cols()));
    Matrix m(top.matrix().rows() + bottom.matrix().rows(), top.matrix().cols());
    m << top.matrix(), bottom.matrix();
    return LinearTransform(std::move(m), top.name() + "+" + bottom.name());
}

LinearTransform concat_transforms(const LinearTransform& top, const Matrix& bottom) {
    if (bottom.rows() == 0) return top;
    if (static_cast<std::size_t>(bottom.cols()) != top.cols())
        throw ShapeError("concat_transforms: n3 mismatch " + std::to_string(top.cols()) +
                         " vs " + std::to_string(bottom.cols()));
    Matrix m(top.matrix().rows() + bottom.rows(), top.matrix().cols());
    m << top.matrix(), bottom;
    return LinearTransform(std::move(m), top.name() + "+custom");
}

LinearTransform random_unitary(std::size_t n3, std::size_t big_n3, std::uint64_t seed) {
    if (n3 == 0 || big_n3 < n3)
        throw ParameterError("random_unitary needs N3 >= n3 >= 1, got N3=" +
                             std::to_string(big_n3) + ", n3=" + std::to_string(n3));
    Matrix q = haar_unitary(big_n3, seed);
    return LinearTransform(q.leftCols(static_cast<Eigen::Index>(n3)),
                           big_n3 == n3 ? "rut" : "rut-slim");
}

RealVector conditioned_spectrum(std::size_t n3, std::uint64_t seed, double smin, double smax) {
    if (!(smin > 0) || !(smax >= smin) || !std::isfinite(smax))
        throw ParameterError("random_conditioned needs 0 < smin <= smax");
    Rng rng(derive_seed({seed, 1}));
    std::uniform_real_distribution<double> u(smin, smax);
    RealVector s(static_cast<Eigen::Index>(n3));
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = smin == smax ? smin : u(rng);
    return s;
}

LinearTransform random_conditioned(std::size_t n3, std::uint64_t seed, double smin, double smax,
                                   std::size_t big_n3) {
    if (big_n3 == 0) big_n3 = n3;
    if (n3 == 0 || big_n3 < n3)
        throw ParameterError("random_conditioned needs N3 >= n3 >= 1");
    const RealVector s = conditioned_spectrum(n3, seed, smin, smax);
    const Matrix u = haar_unitary(big_n3, derive_seed({seed, 2}));
    const Matrix v = haar_unitary(n3, derive_seed({seed, 3}));
    const auto k = static_cast<Eigen::Index>(n3);
    Matrix t = u.leftCols(k) * s.cast<Complex>().asDiagonal() * v.adjoint();
    return LinearTransform(std::move(t), "cond");
}

Tensor3 apply(const LinearTransform& t, const Tensor3& a) {
    if (a.n3() != t.cols())
        throw ShapeError("apply: transform expects n3=" + std::to_string(t.cols()) +
                         ", tensor is " + to_string(a.dims()));
    return mode3_product(a, t.matrix());
}

Tensor3 pinv_apply(const LinearTransform& t, const Tensor3& b) {
    if (b.n3() != t.rows())
        throw ShapeError("pinv_apply: transform expects N3=" + std::to_string(t.rows()) +
                         ", tensor is " + to_string(b.dims()));
    return mode3_product(b, t.pinv());
}

}  // namespace ttc
