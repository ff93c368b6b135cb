#include "ttc/solver.hpp"

#include "ttc/algebra.hpp"
#include "ttc/errors.hpp"
#include "ttc/linalg.hpp"
#include "ttc/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace ttc {

void SolverConfig::validate() const {
    if (!(alpha0 > 0)) throw ParameterError("alpha0 must be positive");
    if (!(alpha_max >= alpha0)) throw ParameterError("alpha_max must be >= alpha0");
    if (!(rho_growth >= 1)) throw ParameterError("rho_growth must be >= 1");
    if (!(tol > 0)) throw ParameterError("tol must be positive");
    if (max_iters < 1) throw ParameterError("max_iters must be >= 1");
}

Tensor3 svt(const Tensor3& a, double tau) {
    if (!(tau >= 0)) throw ParameterError("svt threshold must be non-negative");
    if (tau == 0) return a;
    Tensor3 out(a.dims());
    parallel_for(a.n3(), [&](std::size_t k) {
        MatrixSvd f;
        try {
            f = dense_svd(a.slice(k));
        } catch (const NumericError& e) {
            throw NumericError("svt failed on slice " + std::to_string(k) + ": " + e.what(),
                               static_cast<long>(k));
        }
        Eigen::Index keep = 0;
        while (keep < f.s.size() && f.s(keep) > tau) ++keep;
        if (keep == 0) return;
        RealVector shrunk = f.s.head(keep).array() - tau;
        out.slice(k).noalias() = f.u.leftCols(keep) * shrunk.cast<Complex>().asDiagonal() *
                                 f.v.leftCols(keep).adjoint();
    });
    return out;
}

Tensor3 y_update(const Tensor3& x, const Tensor3& z, double alpha, const LinearTransform& t) {
    if (!(alpha > 0)) throw ParameterError("penalty alpha must be positive");
    Tensor3 arg = apply(t, x);
    arg += z / alpha;
    return svt(arg, 1.0 / alpha);
}

Tensor3 x_update(const Tensor3& y, const Tensor3& z, double alpha, const SamplingMask& mask,
                 const Tensor3& m, const LinearTransform& t) {
    if (!(alpha > 0)) throw ParameterError("penalty alpha must be positive");
    if (mask.dims() != m.dims())
        throw ShapeError("mask " + to_string(mask.dims()) + " does not match tensor " +
                         to_string(m.dims()));
    Tensor3 x = pinv_apply(t, y - z / alpha);
    if (x.dims() != m.dims())
        throw ShapeError("x_update: pullback has dims " + to_string(x.dims()) + ", M has " +
                         to_string(m.dims()));
    auto dst = x.data();
    auto src = m.data();
    for (std::size_t n = 0; n < dst.size(); ++n)
        if (mask.contains_offset(n)) dst[n] = src[n];
    return x;
}

Tensor3 z_update(const Tensor3& z, double alpha, const Tensor3& x, const Tensor3& y,
                 const LinearTransform& t) {
    if (!(alpha > 0)) throw ParameterError("penalty alpha must be positive");
    Tensor3 residual = apply(t, x);
    residual -= y;
    return z + residual * alpha;
}

double penalty_update(double alpha, const SolverConfig& cfg) {
    if (!(alpha > 0)) throw ParameterError("penalty alpha must be positive");
    return std::min(cfg.rho_growth * alpha, cfg.alpha_max);
}

namespace {

double inf_distance(const Tensor3& a, const Tensor3& b) {
    auto x = a.data();
    auto y = b.data();
    double m = 0;
    for (std::size_t n = 0; n < x.size(); ++n) m = std::max(m, std::abs(x[n] - y[n]));
    return m;
}

void finish(CompletionResult& result, const Tensor3& m, const LinearTransform& t) {
    if (m.real_hint()) {
        const double residue = result.x.max_imag();
        result.report.imag_residue = residue;
        if (residue <= 1e-8 * (fro_norm(result.x) + 1.0)) result.x = result.x.real_part();
    }
    result.report.objective = nuclear_norm(apply(t, result.x));
}

}  // namespace

CompletionResult admm_complete(const Tensor3& m, const SamplingMask& mask,
                               const LinearTransform& t, const SolverConfig& cfg,
                               const IterationObserver& observer) {
    cfg.validate();
    if (mask.dims() != m.dims())
        throw ShapeError("mask " + to_string(mask.dims()) + " does not match tensor " +
                         to_string(m.dims()));
    if (t.cols() != m.n3())
        throw ShapeError("transform expects n3=" + std::to_string(t.cols()) + ", tensor is " +
                         to_string(m.dims()));
    if (mask.count() == 0) throw ParameterError("admm_complete needs at least one observation");

    CompletionResult result;
    if (mask.is_full()) {
        result.x = m;
        result.report.iterations = 1;
        result.report.converged = true;
        finish(result, m, t);
        return result;
    }

    Tensor3 x = sample(mask, m);
    Tensor3 y = apply(t, x);
    Tensor3 tx = y;
    Tensor3 z(y.dims());
    double alpha = cfg.alpha0;

    SolverReport& report = result.report;
    for (std::size_t it = 1; it <= cfg.max_iters; ++it) {
        Tensor3 y_next = y_update(x, z, alpha, t);
        Tensor3 x_next = x_update(y_next, z, alpha, mask, m, t);
        Tensor3 tx_next = apply(t, x_next);
        Tensor3 z_next = z + (tx_next - y_next) * alpha;

        // The primal gap ||T(X) - Y||_inf is part of the statistic: while
        // 1/alpha exceeds every singular value, Y is pinned at zero and X at
        // S_Omega(M), so the three deltas vanish long before Z has done its job.
        const double residual =
            std::max({inf_distance(x_next, x), inf_distance(y_next, y),
                      inf_distance(tx_next, tx), inf_distance(tx_next, y_next)});
        x = std::move(x_next);
        y = std::move(y_next);
        tx = std::move(tx_next);
        z = std::move(z_next);

        report.iterations = it;
        report.final_residual = residual;
        if (cfg.record_history) report.history.push_back({residual, nuclear_norm(tx)});
        if (observer) observer(IterationState{it, x, y, z, alpha, residual});
        alpha = penalty_update(alpha, cfg);
        if (residual <= cfg.tol) {
            report.converged = true;
            break;
        }
    }

    result.x = std::move(x);
    finish(result, m, t);
    return result;
}

}  // namespace ttc
