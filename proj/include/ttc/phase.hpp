#pragma once

#include "ttc/generators.hpp"
#include "ttc/solver.hpp"
#include "ttc/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttc {

/// Relative error at or below which a completion counts as exact.
inline constexpr double kSuccessThreshold = 1e-3;

/// Parses "start:step:stop" (inclusive of stop when reachable), "start:stop"
/// (unit step), a single value or a comma-separated list of those. Range
/// points are start + i * step rounded to 12 significant decimals.
std::vector<double> parse_range(std::string_view text);

struct PhaseCell {
    std::size_t r = 0;
    std::optional<std::size_t> r2;
    double p = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    /// Trials whose tensor could not be generated; they count as failures.
    std::size_t generator_failures = 0;
};

struct PhaseSetup {
    PhaseSetup(Dims d, LinearTransform t) : dims(d), transform(std::move(t)) {}

    Dims dims;
    /// Transform used to generate M and, unless solve_transform is set, to
    /// complete it.
    LinearTransform transform;
    /// When set, M is generated with rank(T2(M)) = r2 as well.
    std::optional<LinearTransform> transform2;
    std::optional<LinearTransform> solve_transform;
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> ranks2;
    std::vector<double> rates;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    SolverConfig solver;
    GeneratorConfig generator;
};

/// Seed for one trial of one cell.
std::uint64_t trial_seed(std::uint64_t master, std::size_t r, std::optional<std::size_t> r2,
                         double p, std::size_t trial);

/// One (M, Omega) trial: returns the relative error of the completion, or
/// nullopt when generation failed.
std::optional<double> run_trial(const PhaseSetup& setup, std::size_t r,
                                std::optional<std::size_t> r2, double p, std::size_t trial);

/// Cells in (r[, r2], p) row-major order; deterministic for a master seed.
std::vector<PhaseCell> phase_experiment(const PhaseSetup& setup);

/// "r[,r2],p,trials,successes" with a header row.
std::string phase_csv(const std::vector<PhaseCell>& cells);

}  // namespace ttc
