#include "ttc/generators.hpp"

#include "ttc/errors.hpp"
#include "ttc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace ttc {

void GeneratorConfig::validate() const {
    if (max_iters < 1) throw ParameterError("generator max_iters must be >= 1");
    if (!(rank_tol > 0)) throw ParameterError("generator rank_tol must be positive");
}

namespace {

void check_rank(std::size_t r, const Dims& dims, const char* who) {
    const std::size_t cap = std::min(dims.n1, dims.n2);
    if (r < 1 || r > cap)
        throw ParameterError(std::string(who) + ": rank " + std::to_string(r) + " outside 1.." +
                             std::to_string(cap));
}

Tensor3 truncate(const TSvdFactors& f, std::size_t r) {
    if (r >= f.rank_capacity()) return f.reconstruct();
    return f.leading(r).reconstruct();
}

void normalize(Tensor3& a) {
    const double n = fro_norm(a);
    if (n == 0.0) throw GeneratorError("alternating projection collapsed to zero", {1.0});
    a /= n;
}

// Tracks whether the worst tube ratio keeps improving.
class StallDetector {
public:
    StallDetector(std::size_t window, double improvement)
        : window_(window), improvement_(improvement) {}

    bool stalled(double ratio) {
        history_.push_back(ratio);
        if (window_ == 0 || history_.size() <= window_) return false;
        const double before = history_.front();
        history_.pop_front();
        return ratio > before * (1.0 - improvement_);
    }

private:
    std::size_t window_;
    double improvement_;
    std::deque<double> history_;
};

Tensor3 initial_tensor(const Dims& dims, std::size_t r, Rng& rng, const GeneratorConfig& cfg) {
    if (cfg.init == GeneratorInit::Gaussian) return random_tensor(dims, rng, cfg.real);
    const std::size_t d1 = (dims.n3 - 1) / 2;
    const std::size_t d2 = dims.n3 - 1 - d1;
    Tensor3 a = random_tensor({dims.n1, r, d1 + 1}, rng, cfg.real);
    Tensor3 b = random_tensor({dims.n2, r, d2 + 1}, rng, cfg.real);
    if (cfg.init == GeneratorInit::PalindromicConvolution) {
        for (std::size_t i = 0; i < (d1 + 1) / 2; ++i) a.slice(d1 - i) = a.slice(i);
        for (std::size_t j = 0; j < (d2 + 1) / 2; ++j) b.slice(d2 - j) = b.slice(j);
    }
    Tensor3 m(dims);
    for (std::size_t i = 0; i <= d1; ++i)
        for (std::size_t j = 0; j <= d2; ++j) m.slice(i + j) += a.slice(i) * b.slice(j).transpose();
    if (cfg.real) m.set_real_hint(true);
    return m;
}

std::string ratio_text(const std::vector<double>& ratios) {
    std::string s;
    for (double r : ratios) s += (s.empty() ? "" : ", ") + std::to_string(r);
    return s;
}

}  // namespace

Tensor3 truncated_t_svd_project(const Tensor3& a, std::size_t r) {
    check_rank(r, a.dims(), "truncated_t_svd_project");
    if (r == std::min(a.n1(), a.n2())) return a;
    return truncate(t_svd(a), r);
}

double tube_ratio(const TSvdFactors& f, std::size_t r) noexcept {
    if (r >= f.rank_capacity()) return 0.0;
    const double top = f.tube_norm(0);
    return top > 0 ? f.tube_norm(r) / top : 0.0;
}

Tensor3 gen_single(const LinearTransform& t, const Dims& dims, std::size_t r,
                   const GeneratorConfig& cfg) {
    cfg.validate();
    check_rank(r, dims, "gen_single");
    if (dims.n3 != t.cols())
        throw ShapeError("gen_single: transform expects n3=" + std::to_string(t.cols()) +
                         ", dims are " + to_string(dims));

    double last_ratio = 1.0;
    for (std::size_t attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
        Rng rng(derive_seed({cfg.seed, attempt}));
        // The iterate is W = T(M); M is recovered as T^+(W) at the end.
        Tensor3 w = apply(t, initial_tensor(dims, r, rng, cfg));
        normalize(w);
        StallDetector stall(cfg.stall_window, cfg.stall_improvement);
        for (std::size_t it = 0;; ++it) {
            const TSvdFactors f = t_svd(w);
            last_ratio = tube_ratio(f, r);
            if (last_ratio <= cfg.rank_tol) {
                Tensor3 m = pinv_apply(t, w);
                if (cfg.real) m = m.real_part();
                return m;
            }
            if (it >= cfg.max_iters || stall.stalled(last_ratio)) break;
            Tensor3 m = pinv_apply(t, truncate(f, r));
            if (cfg.real) m = m.real_part();
            w = apply(t, m);
            normalize(w);
        }
    }
    throw GeneratorError("gen_single did not reach tubal rank " + std::to_string(r) +
                             " (last tube ratio " + std::to_string(last_ratio) + ")",
                         {last_ratio});
}

Tensor3 gen_double(const LinearTransform& t1, std::size_t r1, const LinearTransform& t2,
                   std::size_t r2, const Dims& dims, const GeneratorConfig& cfg) {
    cfg.validate();
    check_rank(r1, dims, "gen_double");
    check_rank(r2, dims, "gen_double");
    if (dims.n3 != t1.cols() || dims.n3 != t2.cols())
        throw ShapeError("gen_double: transforms expect n3=" + std::to_string(t1.cols()) + "/" +
                         std::to_string(t2.cols()) + ", dims are " + to_string(dims));

    std::vector<double> ratios{1.0, 1.0};
    auto project = [&](const LinearTransform& t, const TSvdFactors& f, std::size_t r) {
        Tensor3 m = pinv_apply(t, truncate(f, r));
        if (cfg.real) m = m.real_part();
        normalize(m);
        return m;
    };

    for (std::size_t attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
        Rng rng(derive_seed({cfg.seed, attempt}));
        Tensor3 m = initial_tensor(dims, std::min(r1, r2), rng, cfg);
        normalize(m);
        StallDetector stall(cfg.stall_window, cfg.stall_improvement);
        for (std::size_t it = 0;; ++it) {
            TSvdFactors f1 = t_svd(apply(t1, m));
            ratios[0] = tube_ratio(f1, r1);
            ratios[1] = tube_ratio(t_svd(apply(t2, m)), r2);
            if (ratios[0] <= cfg.rank_tol && ratios[1] <= cfg.rank_tol) return m;
            if (it >= cfg.max_iters || stall.stalled(std::max(ratios[0], ratios[1]))) break;
            m = project(t1, f1, r1);
            m = project(t2, t_svd(apply(t2, m)), r2);
        }
    }
    throw GeneratorError("gen_double did not reach ranks (" + std::to_string(r1) + ", " +
                             std::to_string(r2) + "); last tube ratios " + ratio_text(ratios),
                         ratios);
}

SamplingMask bernoulli_mask(const Dims& dims, double p, std::uint64_t seed) {
    if (!(p > 0) || p > 1) throw ParameterError("sampling rate must lie in (0, 1]");
    if (dims.size() == 0) throw ShapeError("mask dims must be positive");
    Rng rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Index3> observed;
    observed.reserve(static_cast<std::size_t>(p * static_cast<double>(dims.size())) + 16);
    for (std::size_t i = 0; i < dims.n1; ++i)
        for (std::size_t j = 0; j < dims.n2; ++j)
            for (std::size_t k = 0; k < dims.n3; ++k)
                if (p == 1.0 || u(rng) < p) observed.push_back({i, j, k});
    return SamplingMask(dims, std::move(observed));
}

}  // namespace ttc
