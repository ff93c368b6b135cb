#include "oracles.hpp"

#include "ttc/algebra.hpp"
#include "ttc/analysis.hpp"
#include "ttc/errors.hpp"
#include "ttc/generators.hpp"

#include <gtest/gtest.h>

using namespace ttc;

namespace {

using oracle::basis_tensor;

Tensor3 generated(const LinearTransform& t, const Dims& d, std::size_t r, std::uint64_t seed) {
    GeneratorConfig c;
    c.seed = seed;
    return apply(t, gen_single(t, d, r, c));
}

// T(M) for a Gaussian M: enough for checks that only need some subspace in
// the range of T.
Tensor3 transformed_random(const LinearTransform& t, const Dims& d, std::uint64_t seed) {
    Rng rng(seed);
    return apply(t, random_tensor(d, rng));
}

}  // namespace

TEST(Projectors, FixedPointComplementIdempotence) {
    Rng rng(1);
    const Tensor3 tx = generated(dft_transform(4), {6, 5, 4}, 2, 1);
    const SingularSubspace s = singular_subspace(tx, 2);
    const Tensor3 g = random_tensor({5, 2, 4}, rng);
    const Tensor3 in_range = t_product(s.u, t_conj_transpose(g));
    EXPECT_LE(oracle::max_abs_diff(project_S(in_range, s.u, s.v), in_range), 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 z = random_tensor(tx.dims(), rng);
        const Tensor3 p = project_S(z, s.u, s.v);
        const Tensor3 q = project_S_perp(z, s.u, s.v);
        EXPECT_LE(oracle::max_abs_diff(p + q, z), 1e-12);
        EXPECT_LE(oracle::max_abs_diff(project_S(p, s.u, s.v), p), 1e-10);
        EXPECT_LE(std::abs(inner_product(p, q)), 1e-10);
    }
    EXPECT_THROW(project_S(Tensor3(6, 5, 3), s.u, s.v), ShapeError);
}

TEST(Incoherence, IdentityBlockAttainsMaximum) {
    const std::size_t n1 = 8, n2 = 6, r = 2, big = 3;
    Tensor3 tx(n1, n2, big);
    for (std::size_t l = 0; l < big; ++l)
        for (std::size_t i = 0; i < r; ++i) tx(i, i, l) = double(3 - i);
    const IncoherenceReport rep = incoherence(tx, r, dft_transform(big));
    EXPECT_NEAR(rep.mu_u, double(n1) / r, 1e-12);
    EXPECT_NEAR(rep.mu_v, double(n2) / r, 1e-12);
    EXPECT_NEAR(rep.mu, double(n1) / r, 1e-12);
    EXPECT_NEAR(rep.lambda, std::max(rep.mu, rep.nu), 0.0);
}

TEST(Incoherence, UniformRowEnergyAttainsMinimum) {
    const std::size_t n1 = 8, n2 = 6, r = 3, big = 4;
    const Matrix fu = dft_transform(n1).matrix().leftCols(r);
    const Matrix fv = dft_transform(n2).matrix().leftCols(r);
    Tensor3 tx(n1, n2, big);
    for (std::size_t l = 0; l < big; ++l) {
        RealVector s(r);
        s << 5.0 + l, 2.0, 1.0;
        tx.slice(l) = fu * s.cast<Complex>().asDiagonal() * fv.adjoint();
    }
    const IncoherenceReport rep = incoherence(tx, r, dft_transform(big));
    EXPECT_NEAR(rep.mu_u, 1.0, 1e-12);
    EXPECT_NEAR(rep.mu_v, 1.0, 1e-12);
    EXPECT_NEAR(rep.mu, 1.0, 1e-12);
}

TEST(Incoherence, MatchesBruteForceBasisLoop) {
    for (const LinearTransform& t :
         {dft_transform(5), slim_columns(BaseKind::Dct, 9, 5), random_conditioned(5, 3, 0.5, 2.0, 7)}) {
        const Dims d{7, 6, 5};
        const std::size_t r = 2;
        const Tensor3 tx = transformed_random(t, d, 4);
        const IncoherenceReport rep = incoherence(tx, r, t);
        const oracle::IncoherenceMaxima b = oracle::incoherence_maxima(singular_subspace(tx, r), t);
        EXPECT_NEAR(rep.per_basis_max.u_basis, b.u_basis, 1e-10) << t.name();
        EXPECT_NEAR(rep.per_basis_max.v_basis, b.v_basis, 1e-10) << t.name();
        EXPECT_NEAR(rep.per_basis_max.u_coupled, b.u_coupled, 1e-10) << t.name();
        EXPECT_NEAR(rep.per_basis_max.v_coupled, b.v_coupled, 1e-10) << t.name();

        const double n1 = 7, n2 = 6, big = double(t.rows()), t12 = std::pow(t.one_to_two(), 2);
        EXPECT_NEAR(rep.mu_u, b.u_basis * n1 / (r * big), 1e-10);
        EXPECT_NEAR(rep.mu_v, b.v_basis * n2 / (r * big), 1e-10);
        EXPECT_NEAR(rep.nu_u, b.u_coupled * n1 / (r * t12), 1e-10);
        EXPECT_NEAR(rep.nu_v, b.v_coupled * n2 / (r * t12), 1e-10);
        EXPECT_GE(rep.mu, 1 - 1e-8);
        EXPECT_LE(rep.mu, std::max(n1, n2) / r + 1e-8);
        EXPECT_GT(rep.nu, 0.0);
        EXPECT_EQ(rep.lambda, std::max(rep.mu, rep.nu));
        EXPECT_EQ(rep.r, r);
    }
}

TEST(Incoherence, RejectsZeroRankAndMismatch) {
    const Tensor3 tx = generated(dft_transform(4), {5, 5, 4}, 1, 5);
    EXPECT_THROW(incoherence(tx, 0, dft_transform(4)), ParameterError);
    EXPECT_THROW(incoherence(tx, 1, dft_transform(3)), ShapeError);
}

TEST(SamplingBound, FormulaAndMonotonicity) {
    const LinearTransform f = dft_transform(20);
    // kappa = rho = 1: 2 * lambda r (n1 + n2) / (n1 n2) * log^2((n1 + n2) N3).
    const double want = 2.0 * 1.0 * 2.0 * 100.0 / 2500.0 * std::pow(std::log(100.0 * 20.0), 2);
    EXPECT_NEAR(sampling_bound(f, 1.0, 2, 50, 50, 1.0), want, 1e-12 * want);
    EXPECT_NEAR(want, 9.24379491, 1e-7);
    EXPECT_NEAR(sampling_bound(f, 1.0, 2, 50, 50, 3.0), 3 * want, 1e-12 * want);
    EXPECT_EQ(sampling_rate_bound(f, 1.0, 2, 50, 50, 1.0), 1.0);
    EXPECT_LT(sampling_rate_bound(f, 1.0, 2, 50, 50, 1e-2), 1.0);

    // Same rho, growing kappa: scale one column of a unitary matrix.
    double last = 0;
    for (double s : {1.0, 1.5, 2.0, 4.0}) {
        Matrix m = Matrix::Identity(4, 4);
        m(3, 3) = 1.0 / s;
        const LinearTransform t(m);
        const double b = sampling_bound(t, 1.0, 1, 10, 10, 1.0);
        EXPECT_GT(b, last);
        last = b;
    }
}

TEST(ProjectedBasisBound, ClosedFormMatchesExplicitProjection) {
    for (const LinearTransform& t : {dft_transform(4), slim_columns(BaseKind::Dft, 7, 4),
                                     random_conditioned(4, 2, 0.5, 2.0)}) {
        const Dims d{6, 5, 4};
        const Tensor3 tx = transformed_random(t, d, 6);
        const SingularSubspace s = singular_subspace(tx, 2);
        double best = 0;
        for (std::size_t i = 0; i < d.n1; ++i)
            for (std::size_t j = 0; j < d.n2; ++j)
                for (std::size_t k = 0; k < d.n3; ++k)
                    best = std::max(best, std::pow(fro_norm(project_S(apply(t, basis_tensor(d, i, j, k)),
                                                                      s.u, s.v)),
                                                   2));
        EXPECT_NEAR(max_projected_basis_energy(s, t, d.n3), best, 1e-12) << t.name();
    }
}

TEST(ProjectedBasisBound, HoldsForFullAndLowRank) {
    const Dims d{6, 5, 4};
    const LinearTransform t = dft_transform(4);
    for (std::size_t r : {2u, 5u}) {
        const Tensor3 tx = generated(t, d, r, 7);
        const IncoherenceReport rep = incoherence(tx, r, t);
        EXPECT_TRUE(projected_basis_bound_check(singular_subspace(tx, r), t, d.n3, rep.nu)) << r;
    }
}

TEST(ProjectedBasisBound, HalvedNuFails) {
    const Dims d{8, 6, 4};
    const LinearTransform t = dft_transform(4);
    const Tensor3 tx = generated(t, d, 2, 8);
    const IncoherenceReport rep = incoherence(tx, 2, t);
    const SingularSubspace s = singular_subspace(tx, 2);
    EXPECT_TRUE(projected_basis_bound_check(s, t, d.n3, rep.nu));
    EXPECT_FALSE(projected_basis_bound_check(s, t, d.n3, rep.nu / 2));
}
