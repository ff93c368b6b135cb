#include "ttc/analysis.hpp"

#include "ttc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ttc {

namespace {

void check_factors(const Tensor3& z, const Tensor3& u, const Tensor3& v) {
    if (u.n1() != z.n1() || v.n1() != z.n2() || u.n3() != z.n3() || v.n3() != z.n3() ||
        u.n2() != v.n2())
        throw ShapeError("projector factors U " + to_string(u.dims()) + ", V " +
                         to_string(v.dims()) + " do not fit Z " + to_string(z.dims()));
}

// E(i, l) = ||F(i, :, l)||^2 for an n x r x N3 factor.
Eigen::MatrixXd row_energy(const Tensor3& f) {
    Eigen::MatrixXd e(f.n1(), f.n3());
    for (std::size_t l = 0; l < f.n3(); ++l)
        e.col(static_cast<Eigen::Index>(l)) = f.slice(l).rowwise().squaredNorm();
    return e;
}

}  // namespace

Tensor3 project_S(const Tensor3& z, const Tensor3& u, const Tensor3& v) {
    check_factors(z, u, v);
    const Tensor3 uh = t_conj_transpose(u);
    const Tensor3 vh = t_conj_transpose(v);
    const Tensor3 uhz = t_product(uh, z);
    Tensor3 out = t_product(u, uhz);
    out += t_product(t_product(z, v), vh);
    out -= t_product(t_product(u, t_product(uhz, v)), vh);
    return out;
}

Tensor3 project_S_perp(const Tensor3& z, const Tensor3& u, const Tensor3& v) {
    check_factors(z, u, v);
    Tensor3 left = z - t_product(u, t_product(t_conj_transpose(u), z));
    return left - t_product(t_product(left, v), t_conj_transpose(v));
}

SingularSubspace singular_subspace(const Tensor3& tx, std::size_t r) {
    if (r == 0) throw ParameterError("singular_subspace needs r >= 1");
    TSvdFactors f = t_svd(tx).leading(r);
    return {std::move(f.U), std::move(f.V)};
}

IncoherenceReport incoherence(const Tensor3& tx, std::size_t r, const LinearTransform& t) {
    if (r == 0) throw ParameterError("incoherence needs tubal rank r >= 1");
    if (tx.n3() != t.rows())
        throw ShapeError("incoherence: transform maps to N3=" + std::to_string(t.rows()) +
                         ", tensor is " + to_string(tx.dims()));
    const SingularSubspace s = singular_subspace(tx, r);
    const Eigen::MatrixXd eu = row_energy(s.u);
    const Eigen::MatrixXd ev = row_energy(s.v);
    // |T(l, k)|^2: column k is the energy profile of T(zeta_k).
    const Eigen::MatrixXd t2 = t.matrix().cwiseAbs2();

    IncoherenceReport rep;
    rep.r = r;
    auto& mx = rep.per_basis_max;
    mx.u_basis = eu.rowwise().sum().maxCoeff();
    mx.v_basis = ev.rowwise().sum().maxCoeff();
    mx.u_coupled = (eu * t2).maxCoeff();
    mx.v_coupled = (ev * t2).maxCoeff();

    const double n1 = static_cast<double>(tx.n1());
    const double n2 = static_cast<double>(tx.n2());
    const double big_n3 = static_cast<double>(tx.n3());
    const double rr = static_cast<double>(r);
    const double t12 = t.one_to_two() * t.one_to_two();
    rep.mu_u = mx.u_basis * n1 / (rr * big_n3);
    rep.mu_v = mx.v_basis * n2 / (rr * big_n3);
    rep.nu_u = mx.u_coupled * n1 / (rr * t12);
    rep.nu_v = mx.v_coupled * n2 / (rr * t12);
    rep.mu = std::max(rep.mu_u, rep.mu_v);
    rep.nu = std::max(rep.nu_u, rep.nu_v);
    rep.lambda = std::max(rep.mu, rep.nu);
    return rep;
}

double sampling_bound(const LinearTransform& t, double lambda, std::size_t r, std::size_t n1,
                      std::size_t n2, double c0) {
    const double k = t.kappa();
    const double p = t.rho();
    const double a = static_cast<double>(n1);
    const double b = static_cast<double>(n2);
    const double lg = std::log(k * (a + b) * static_cast<double>(t.rows()));
    return c0 * (k * k + p * p) * lambda * static_cast<double>(r) * (a + b) / (a * b) * lg * lg;
}

double sampling_rate_bound(const LinearTransform& t, double lambda, std::size_t r,
                           std::size_t n1, std::size_t n2, double c0) {
    return std::clamp(sampling_bound(t, lambda, r, n1, n2, c0), 0.0, 1.0);
}

double max_projected_basis_energy(const SingularSubspace& s, const LinearTransform& t,
                                  std::size_t n3) {
    if (t.cols() != n3 || s.u.n3() != t.rows() || s.v.n3() != t.rows())
        throw ShapeError("projected basis energy: transform does not match the subspace");
    // For Z = T(e_ijk), slice l of Z is T(l, k) e_i e_j^T, so
    // ||P_S Z||^2 = sum_l |T(l,k)|^2 (a_il + b_jl - a_il b_jl) with
    // a_il = ||U(i,:,l)||^2 and b_jl = ||V(j,:,l)||^2.
    const Eigen::MatrixXd a = row_energy(s.u);
    const Eigen::MatrixXd b = row_energy(s.v);
    const Eigen::MatrixXd t2 = t.matrix().cwiseAbs2();
    double best = 0;
    Eigen::VectorXd per_slice(a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.rows(); ++j) {
            per_slice = a.row(i).transpose() + b.row(j).transpose() -
                        a.row(i).transpose().cwiseProduct(b.row(j).transpose());
            best = std::max(best, (t2.transpose() * per_slice).maxCoeff());
        }
    return best;
}

bool projected_basis_bound_check(const SingularSubspace& s, const LinearTransform& t,
                                 std::size_t n3, double nu) {
    const double n1 = static_cast<double>(s.u.n1());
    const double n2 = static_cast<double>(s.v.n1());
    const double r = static_cast<double>(s.u.n2());
    const double t12 = t.one_to_two() * t.one_to_two();
    const double bound = nu * r * (n1 + n2) / (n1 * n2) * t12 + 1e-10;
    return max_projected_basis_energy(s, t, n3) <= bound;
}

}  // namespace ttc
