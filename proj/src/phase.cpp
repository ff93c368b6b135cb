#include "ttc/phase.hpp"

#include "ttc/errors.hpp"
#include "ttc/metrics.hpp"
#include "ttc/parallel.hpp"
#include "ttc/rng.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <string>

namespace ttc {

namespace {

double parse_number(std::string_view s) {
    std::string text(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParameterError("bad number '" + text + "' in range");
    }
    if (used != text.size() || !std::isfinite(v))
        throw ParameterError("bad number '" + text + "' in range");
    return v;
}

double round_to_grid(double v) {
    if (v == 0.0) return 0.0;
    const double scale = std::pow(10.0, 11 - std::floor(std::log10(std::abs(v))));
    return std::round(v * scale) / scale;
}

void parse_piece(std::string_view piece, std::vector<double>& out) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = piece.find(':', start)) != std::string_view::npos; start = pos + 1)
        parts.push_back(piece.substr(start, pos - start));
    parts.push_back(piece.substr(start));

    if (parts.size() == 1) {
        out.push_back(parse_number(parts[0]));
        return;
    }
    if (parts.size() > 3) throw ParameterError("range '" + std::string(piece) + "' has too many ':'");
    const double first = parse_number(parts[0]);
    const double step = parts.size() == 3 ? parse_number(parts[1]) : 1.0;
    const double last = parse_number(parts.back());
    if (step == 0.0) throw ParameterError("range step must be non-zero");
    const double span = (last - first) / step;
    if (span < -1e-10) return;  // empty, as in MATLAB
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-10)) + 1;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(round_to_grid(first + static_cast<double>(i) * step));
}

}  // namespace

std::vector<double> parse_range(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(',', start);
        if (pos == std::string_view::npos) pos = text.size();
        std::string_view piece = text.substr(start, pos - start);
        if (piece.empty()) throw ParameterError("empty element in range '" + std::string(text) + "'");
        parse_piece(piece, out);
        start = pos + 1;
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t r, std::optional<std::size_t> r2,
                         double p, std::size_t trial) {
    return derive_seed({master, r, r2 ? *r2 + 1 : 0, std::bit_cast<std::uint64_t>(p), trial});
}

std::optional<double> run_trial(const PhaseSetup& setup, std::size_t r,
                                std::optional<std::size_t> r2, double p, std::size_t trial) {
    const std::uint64_t seed = trial_seed(setup.seed, r, r2, p, trial);
    GeneratorConfig gcfg = setup.generator;
    gcfg.seed = derive_seed({seed, 0x67656e});
    Tensor3 m;
    try {
        if (setup.transform2)
            m = gen_double(setup.transform, r, *setup.transform2, r2.value_or(r), setup.dims, gcfg);
        else
            m = gen_single(setup.transform, setup.dims, r, gcfg);
    } catch (const GeneratorError&) {
        return std::nullopt;
    }
    const SamplingMask mask = bernoulli_mask(setup.dims, p, derive_seed({seed, 0x6d736b}));
    const LinearTransform& solve_t = setup.solve_transform ? *setup.solve_transform : setup.transform;
    const CompletionResult res = admm_complete(m, mask, solve_t, setup.solver);
    return rel_error(m, res.x);
}

std::vector<PhaseCell> phase_experiment(const PhaseSetup& setup) {
    for (double p : setup.rates)
        if (!(p > 0) || p > 1) throw ParameterError("sampling rates must lie in (0, 1]");
    const std::size_t cap = std::min(setup.dims.n1, setup.dims.n2);
    for (auto r : setup.ranks)
        if (r < 1 || r > cap) throw ParameterError("rank " + std::to_string(r) + " outside 1.." + std::to_string(cap));
    for (auto r : setup.ranks2)
        if (r < 1 || r > cap) throw ParameterError("rank " + std::to_string(r) + " outside 1.." + std::to_string(cap));
    if (setup.transform2 && setup.ranks2.empty())
        throw ParameterError("a second generating transform needs a second rank list");

    std::vector<std::optional<std::size_t>> second;
    if (setup.transform2)
        for (auto r2 : setup.ranks2) second.emplace_back(r2);
    else
        second.emplace_back(std::nullopt);

    std::vector<PhaseCell> cells;
    for (auto r : setup.ranks)
        for (const auto& r2 : second)
            for (double p : setup.rates) cells.push_back(PhaseCell{r, r2, p, setup.trials, 0, 0});

    // Trials are independent; results land in fixed slots so the outcome
    // does not depend on scheduling.
    std::vector<std::optional<double>> errors(cells.size() * setup.trials);
    parallel_for(errors.size(), [&](std::size_t n) {
        const PhaseCell& c = cells[n / setup.trials];
        errors[n] = run_trial(setup, c.r, c.r2, c.p, n % setup.trials);
    });
    for (std::size_t n = 0; n < errors.size(); ++n) {
        PhaseCell& c = cells[n / setup.trials];
        if (!errors[n])
            ++c.generator_failures;
        else if (*errors[n] <= kSuccessThreshold)
            ++c.successes;
    }
    return cells;
}

std::string phase_csv(const std::vector<PhaseCell>& cells) {
    const bool two = !cells.empty() && cells.front().r2.has_value();
    std::string out = two ? "r,r2,p,trials,successes\n" : "r,p,trials,successes\n";
    for (const auto& c : cells) {
        if (two)
            out += fmt::format("{},{},{:.17g},{},{}\n", c.r, *c.r2, c.p, c.trials, c.successes);
        else
            out += fmt::format("{},{:.17g},{},{}\n", c.r, c.p, c.trials, c.successes);
    }
    return out;
}

}  // namespace ttc
