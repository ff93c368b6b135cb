#include "ttc/linalg.hpp"

#include "ttc/errors.hpp"

#include <algorithm>
#include <complex>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace ttc {
namespace {

lapack_int as_lapack(Eigen::Index n) { return static_cast<lapack_int>(n); }

// Returns LAPACK info; on success fills out.
lapack_int run_gesdd(Matrix work, MatrixSvd& out) {
    const auto m = work.rows(), n = work.cols(), s = std::min(m, n);
    out.u.resize(m, s);
    out.s.resize(s);
    Matrix vt(s, n);
    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', as_lapack(m), as_lapack(n),
                                     work.data(), as_lapack(m), out.s.data(), out.u.data(),
                                     as_lapack(m), vt.data(), as_lapack(s));
    out.v = vt.adjoint();
    return info;
}

lapack_int run_gesvd(Matrix work, MatrixSvd& out) {
    const auto m = work.rows(), n = work.cols(), s = std::min(m, n);
    out.u.resize(m, s);
    out.s.resize(s);
    Matrix vt(s, n);
    RealVector superb(std::max<Eigen::Index>(1, s - 1));
    lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', as_lapack(m), as_lapack(n),
                                     work.data(), as_lapack(m), out.s.data(), out.u.data(),
                                     as_lapack(m), vt.data(), as_lapack(s), superb.data());
    out.v = vt.adjoint();
    return info;
}

}  // namespace

MatrixSvd dense_svd(const Matrix& a) {
    MatrixSvd out;
    const auto s = std::min(a.rows(), a.cols());
    if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
        out.u = Matrix::Identity(a.rows(), s);
        out.s = RealVector::Zero(s);
        out.v = Matrix::Identity(a.cols(), s);
        return out;
    }
    if (run_gesdd(a, out) == 0) return out;
    lapack_int info = run_gesvd(a, out);
    if (info != 0)
        throw NumericError("SVD did not converge (LAPACK info " + std::to_string(info) + ")");
    return out;
}

RealVector singular_values(const Matrix& a) {
    const auto m = a.rows(), n = a.cols(), s = std::min(m, n);
    if (a.size() == 0) return RealVector{};
    Matrix work = a;
    RealVector sv(s);
    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', as_lapack(m), as_lapack(n),
                                     work.data(), as_lapack(m), sv.data(), nullptr, 1, nullptr,
                                     1);
    if (info != 0) return dense_svd(a).s;
    return sv;
}

Matrix pseudo_inverse(const Matrix& a) {
    if (a.rows() < a.cols())
        throw SingularityError("pseudo_inverse needs rows >= cols, got " +
                               std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    MatrixSvd f = dense_svd(a);
    const double smax = f.s.size() ? f.s(0) : 0.0;
    if (smax == 0.0 || f.s(f.s.size() - 1) <= kPinvRankTol * smax)
        throw SingularityError("matrix is rank deficient (sigma_min/sigma_max = " +
                               std::to_string(smax == 0.0 ? 0.0 : f.s(f.s.size() - 1) / smax) +
                               ")");
    return f.v * f.s.cwiseInverse().asDiagonal() * f.u.adjoint();
}

}  // namespace ttc
