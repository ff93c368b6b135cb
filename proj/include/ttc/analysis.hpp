#pragma once

#include "ttc/algebra.hpp"
#include "ttc/transforms.hpp"

namespace ttc {

/// Orthogonal projector onto span of the singular tensors:
/// U U^H Z + Z V V^H - U U^H Z V V^H.
Tensor3 project_S(const Tensor3& z, const Tensor3& u, const Tensor3& v);
/// (I - U U^H) Z (I - V V^H).
Tensor3 project_S_perp(const Tensor3& z, const Tensor3& u, const Tensor3& v);

/// Squared-norm maxima behind the four incoherence inequalities.
struct IncoherenceMaxima {
    double u_basis = 0;    ///< max_i ||U^H * xi_i||_F^2
    double v_basis = 0;    ///< max_j ||V^H * xi_j||_F^2
    double u_coupled = 0;  ///< max_{i,k} ||U^H * xi_i * T(zeta_k)||_F^2
    double v_coupled = 0;  ///< max_{j,k} ||V^H * xi_j * T(zeta_k)||_F^2
};

struct IncoherenceReport {
    double mu = 0;
    double nu = 0;
    double lambda = 0;
    std::size_t r = 0;
    /// Smallest parameter satisfying each inequality on its own.
    double mu_u = 0;
    double mu_v = 0;
    double nu_u = 0;
    double nu_v = 0;
    IncoherenceMaxima per_basis_max;
};

/// Skinny factors of T(X): the leading r singular tensors of each slice.
struct SingularSubspace {
    Tensor3 u;  ///< n1 x r x N3
    Tensor3 v;  ///< n2 x r x N3
};
SingularSubspace singular_subspace(const Tensor3& tx, std::size_t r);

/// Tightest mu and nu for the transform-domain tensor `tx` of tubal rank r.
/// Tubes zeta_k live in the original domain so T(zeta_k) is column k of T.
IncoherenceReport incoherence(const Tensor3& tx, std::size_t r, const LinearTransform& t);

/// c0 (kappa^2 + rho^2) lambda r (n1 + n2) / (n1 n2) log^2(kappa (n1 + n2) N3),
/// natural logarithm.
double sampling_bound(const LinearTransform& t, double lambda, std::size_t r, std::size_t n1,
                      std::size_t n2, double c0 = 1.0);
/// The bound clipped to [0, 1].
double sampling_rate_bound(const LinearTransform& t, double lambda, std::size_t r,
                           std::size_t n1, std::size_t n2, double c0 = 1.0);

/// max over original-domain basis tensors e_ijk of ||P_S(T(e_ijk))||_F^2.
double max_projected_basis_energy(const SingularSubspace& s, const LinearTransform& t,
                                  std::size_t n3);

/// True iff ||P_S(T(e_ijk))||_F^2 <= nu r (n1 + n2) / (n1 n2) ||T||_{1->2}^2 + 1e-10
/// for every basis index. r is taken from the subspace width.
bool projected_basis_bound_check(const SingularSubspace& s, const LinearTransform& t,
                                 std::size_t n3, double nu);

}  // namespace ttc
