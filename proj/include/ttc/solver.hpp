#pragma once

#include "ttc/mask.hpp"
#include "ttc/tensor.hpp"
#include "ttc/transforms.hpp"

#include <functional>
#include <vector>

namespace ttc {

/// Penalty schedule and stopping rule for admm_complete.
struct SolverConfig {
    double alpha0 = 1e-2;
    double alpha_max = 1e6;
    double rho_growth = 1.02;
    double tol = 1e-10;
    std::size_t max_iters = 5000;
    /// Record (residual, objective) per iteration. Costs one extra t-SVD
    /// per iteration.
    bool record_history = false;

    /// Throws ParameterError unless alpha0 > 0, alpha_max >= alpha0,
    /// rho_growth >= 1, tol > 0 and max_iters >= 1.
    void validate() const;

    /// Settings used for the random-tensor phase experiments.
    static SolverConfig random_data() { return {}; }
    /// Settings used for visual data inpainting.
    static SolverConfig visual_data() {
        SolverConfig c;
        c.rho_growth = 1.2;
        c.tol = 1e-3;
        return c;
    }
};

struct IterationRecord {
    double residual = 0;
    double objective = 0;
};

struct SolverReport {
    std::size_t iterations = 0;
    /// Stopping statistic of the last iteration.
    double final_residual = 0;
    /// nuclear_norm(apply(T, X)) at exit.
    double objective = 0;
    bool converged = false;
    /// Largest |Im x| discarded when casting a real-hinted result to real;
    /// 0 when no cast happened.
    double imag_residue = 0;
    std::vector<IterationRecord> history;
};

/// Snapshot passed to an IterationObserver after every iteration.
struct IterationState {
    std::size_t iteration = 0;  ///< 1-based
    const Tensor3& x;
    const Tensor3& y;
    const Tensor3& z;
    double alpha = 0;
    double residual = 0;
};

using IterationObserver = std::function<void(const IterationState&)>;

struct CompletionResult {
    Tensor3 x;
    SolverReport report;
};

/// Singular value thresholding U * (S - tau)_+ * V^H, the proximal map of
/// tau * ||.||_*. Throws ParameterError for tau < 0.
Tensor3 svt(const Tensor3& a, double tau);

/// Y = svt(T(X) + Z / alpha, 1 / alpha).
Tensor3 y_update(const Tensor3& x, const Tensor3& z, double alpha, const LinearTransform& t);

/// X = S_{Omega^C}(T^+(Y - Z / alpha)) + S_Omega(M). Observed entries are
/// copied from M verbatim.
Tensor3 x_update(const Tensor3& y, const Tensor3& z, double alpha, const SamplingMask& mask,
                 const Tensor3& m, const LinearTransform& t);

/// Z + alpha * (T(X) - Y).
Tensor3 z_update(const Tensor3& z, double alpha, const Tensor3& x, const Tensor3& y,
                 const LinearTransform& t);

/// min(rho_growth * alpha, alpha_max).
double penalty_update(double alpha, const SolverConfig& cfg);

/// Solves min ||T(X)||_* s.t. S_Omega(X) = S_Omega(M) by ADMM.
///
/// Starts from X = S_Omega(M), Y = T(X), Z = 0 and alternates the Y, X and Z
/// updates with a geometric penalty schedule. Stops once
/// max(||dX||_inf, ||dY||_inf, ||T(dX)||_inf, ||T(X) - Y||_inf) <= tol. Running out of
/// iterations is reported through `converged`, not thrown. A fully observed
/// mask returns M directly. When M is real-hinted the result is cast to
/// real if its imaginary residue is at most 1e-8 * (||X||_F + 1).
CompletionResult admm_complete(const Tensor3& m, const SamplingMask& mask,
                               const LinearTransform& t, const SolverConfig& cfg = {},
                               const IterationObserver& observer = {});

}  // namespace ttc
