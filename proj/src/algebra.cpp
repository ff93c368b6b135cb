#include "ttc/algebra.hpp"

#include "ttc/errors.hpp"
#include "ttc/linalg.hpp"
#include "ttc/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace ttc {

double TSvdFactors::max_singular_value() const noexcept {
    double m = 0;
    for (const auto& s : S)
        if (s.size()) m = std::max(m, s.maxCoeff());
    return m;
}

double TSvdFactors::tube_norm(std::size_t i) const noexcept {
    double acc = 0;
    for (const auto& s : S) acc += s(static_cast<Eigen::Index>(i)) * s(static_cast<Eigen::Index>(i));
    return std::sqrt(acc);
}

Tensor3 TSvdFactors::diagonal_tensor() const {
    const std::size_t s = rank_capacity();
    Tensor3 d(s, s, slices());
    for (std::size_t k = 0; k < slices(); ++k)
        d.slice(k).diagonal() = S[k].cast<Complex>();
    return d;
}

TSvdFactors TSvdFactors::leading(std::size_t r) const {
    if (r == 0 || r > rank_capacity())
        throw ParameterError("leading(" + std::to_string(r) + ") outside 1.." +
                             std::to_string(rank_capacity()));
    const auto n3 = slices();
    const auto rr = static_cast<Eigen::Index>(r);
    TSvdFactors out{Tensor3(U.n1(), r, n3), std::vector<RealVector>(n3), Tensor3(V.n1(), r, n3)};
    for (std::size_t k = 0; k < n3; ++k) {
        out.U.slice(k) = U.slice(k).leftCols(rr);
        out.V.slice(k) = V.slice(k).leftCols(rr);
        out.S[k] = S[k].head(rr);
    }
    return out;
}

Tensor3 TSvdFactors::reconstruct() const {
    Tensor3 a(U.n1(), V.n1(), slices());
    parallel_for(slices(), [&](std::size_t k) {
        a.slice(k).noalias() = U.slice(k) * S[k].cast<Complex>().asDiagonal() * V.slice(k).adjoint();
    });
    return a;
}

Tensor3 t_product(const Tensor3& a, const Tensor3& b) {
    if (a.n3() != b.n3() || a.n2() != b.n1())
        throw ShapeError("t_product: cannot multiply " + to_string(a.dims()) + " by " +
                         to_string(b.dims()));
    Tensor3 c(a.n1(), b.n2(), a.n3());
    parallel_for(a.n3(), [&](std::size_t k) { c.slice(k).noalias() = a.slice(k) * b.slice(k); });
    return c;
}

Tensor3 t_transpose(const Tensor3& a) {
    Tensor3 t(a.n2(), a.n1(), a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) t.slice(k) = a.slice(k).transpose();
    t.set_real_hint(a.real_hint());
    return t;
}

Tensor3 t_conj_transpose(const Tensor3& a) {
    Tensor3 t(a.n2(), a.n1(), a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) t.slice(k) = a.slice(k).adjoint();
    t.set_real_hint(a.real_hint());
    return t;
}

Tensor3 identity_tensor(std::size_t n, std::size_t n3) {
    Tensor3 id(n, n, n3);
    for (std::size_t k = 0; k < n3; ++k) id.slice(k).setIdentity();
    id.set_real_hint(true);
    return id;
}

bool is_unitary(const Tensor3& u, double tol) {
    if (u.n1() != u.n2())
        throw ShapeError("is_unitary needs square slices, got " + to_string(u.dims()));
    const Tensor3 id = identity_tensor(u.n1(), u.n3());
    const Tensor3 uh = t_conj_transpose(u);
    return fro_norm(t_product(u, uh) - id) <= tol && fro_norm(t_product(uh, u) - id) <= tol;
}

TSvdFactors t_svd(const Tensor3& a) {
    const std::size_t s = std::min(a.n1(), a.n2());
    const std::size_t n3 = a.n3();
    TSvdFactors f{Tensor3(a.n1(), s, n3), std::vector<RealVector>(n3), Tensor3(a.n2(), s, n3)};
    parallel_for(n3, [&](std::size_t k) {
        MatrixSvd m;
        try {
            m = dense_svd(a.slice(k));
        } catch (const NumericError& e) {
            throw NumericError("t_svd failed on slice " + std::to_string(k) + ": " + e.what(),
                               static_cast<long>(k));
        }
        f.U.slice(k) = m.u;
        f.V.slice(k) = m.v;
        f.S[k] = std::move(m.s);
    });
    return f;
}

std::size_t tubal_rank(const TSvdFactors& f, double eps_rank) {
    if (!(eps_rank > 0)) throw ParameterError("tubal_rank needs eps_rank > 0");
    const double smax = f.max_singular_value();
    if (smax == 0.0) return 0;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < f.rank_capacity(); ++i)
        if (f.tube_norm(i) > eps_rank * smax) ++rank;
    return rank;
}

std::size_t tubal_rank(const Tensor3& a, double eps_rank) { return tubal_rank(t_svd(a), eps_rank); }

double spectral_norm(const Tensor3& a) {
    double m = 0;
    for (std::size_t k = 0; k < a.n3(); ++k) {
        RealVector s = singular_values(a.slice(k));
        if (s.size()) m = std::max(m, s.maxCoeff());
    }
    return m;
}

double nuclear_norm(const Tensor3& a) {
    std::vector<double> per_slice(a.n3(), 0.0);
    parallel_for(a.n3(), [&](std::size_t k) { per_slice[k] = singular_values(a.slice(k)).sum(); });
    double total = 0;
    for (double v : per_slice) total += v;
    return total;
}

Complex inner_product(const Tensor3& a, const Tensor3& b) {
    if (a.dims() != b.dims())
        throw ShapeError("inner_product: dims " + to_string(a.dims()) + " vs " +
                         to_string(b.dims()));
    Complex acc{};
    auto x = a.data();
    auto y = b.data();
    for (std::size_t n = 0; n < x.size(); ++n) acc += std::conj(x[n]) * y[n];
    return acc;
}

double fro_norm(const Tensor3& a) noexcept { return a.unfold3().norm(); }

double inf_norm(const Tensor3& a) noexcept {
    double m = 0;
    for (const auto& v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double inf2_norm(const Tensor3& a) noexcept {
    std::vector<double> rows(a.n1(), 0.0), cols(a.n2(), 0.0);
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t j = 0; j < a.n2(); ++j)
            for (std::size_t i = 0; i < a.n1(); ++i) {
                double e = std::norm(a(i, j, k));
                rows[i] += e;
                cols[j] += e;
            }
    double m = 0;
    for (double v : rows) m = std::max(m, v);
    for (double v : cols) m = std::max(m, v);
    return std::sqrt(m);
}

Tensor3 mode3_product(const Tensor3& a, const Matrix& t) {
    if (static_cast<std::size_t>(t.cols()) != a.n3() || t.rows() == 0)
        throw ShapeError("mode3_product: matrix " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + " does not act on " + to_string(a.dims()));
    Tensor3 out(a.n1(), a.n2(), static_cast<std::size_t>(t.rows()));
    out.unfold3().noalias() = a.unfold3() * t.transpose();
    if (a.real_hint() && t.imag().cwiseAbs().maxCoeff() == 0.0) out.set_real_hint(true);
    return out;
}

}  // namespace ttc
