#include "ttc/cli.hpp"

#include "ttc/algebra.hpp"
#include "ttc/analysis.hpp"
#include "ttc/errors.hpp"
#include "ttc/generators.hpp"
#include "ttc/io.hpp"
#include "ttc/metrics.hpp"
#include "ttc/phase.hpp"
#include "ttc/solver.hpp"
#include "ttc/transforms.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ttc::cli {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

Dims parse_dims(const std::string& text) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(',', start);
        if (pos == std::string::npos) pos = text.size();
        const std::string piece = text.substr(start, pos - start);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (piece.empty() || used != piece.size() || piece[0] == '-')
            throw ParameterError("--dims expects n1,n2,n3, got '" + text + "'");
        parts.push_back(static_cast<std::size_t>(v));
        start = pos + 1;
    }
    if (parts.size() != 3 || parts[0] == 0 || parts[1] == 0 || parts[2] == 0)
        throw ParameterError("--dims expects three positive integers n1,n2,n3, got '" + text + "'");
    return {parts[0], parts[1], parts[2]};
}

std::vector<std::size_t> parse_ranks(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_range(text)) {
        if (v < 1 || std::floor(v) != v)
            throw ParameterError("ranks must be positive integers, got " + num(v) + " in '" + text + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw ParameterError("empty rank range '" + text + "'");
    return out;
}

LinearTransform load_transform(const std::string& path) {
    return LinearTransform(io::read_matrix(path), path);
}

struct SolverFlags {
    double alpha0 = 1e-2;
    double alpha_max = 1e6;
    double rho = 1.02;
    double tol = 1e-10;
    std::size_t max_iters = SolverConfig{}.max_iters;

    void add(CLI::App* app) {
        app->add_option("--alpha0", alpha0, "Initial penalty")->capture_default_str();
        app->add_option("--alpha-max", alpha_max, "Penalty cap")->capture_default_str();
        app->add_option("--rho", rho, "Penalty growth factor")->capture_default_str();
        app->add_option("--tol", tol, "Infinity-norm stopping tolerance")->capture_default_str();
        app->add_option("--max-iters", max_iters, "Iteration cap")->capture_default_str();
    }
    SolverConfig config() const {
        SolverConfig c;
        c.alpha0 = alpha0;
        c.alpha_max = alpha_max;
        c.rho_growth = rho;
        c.tol = tol;
        c.max_iters = max_iters;
        return c;
    }
};

struct GeneratorFlags {
    std::size_t max_iters = GeneratorConfig{}.max_iters;
    double rank_tol = GeneratorConfig{}.rank_tol;
    bool real = false;
    std::string init = "gaussian";

    void add(CLI::App* app) {
        app->add_option("--gen-max-iters", max_iters, "Alternating projection cap")->capture_default_str();
        app->add_option("--init", init, "Generator start: gaussian, convolution or palindromic")
            ->check(CLI::IsMember({"gaussian", "convolution", "palindromic"}))
            ->capture_default_str();
        app->add_option("--rank-tol", rank_tol, "Target tube-norm ratio")->capture_default_str();
        app->add_flag("--real", real, "Generate real tensors");
    }
    GeneratorConfig config(std::uint64_t seed) const {
        GeneratorConfig c;
        c.max_iters = max_iters;
        c.rank_tol = rank_tol;
        c.real = real;
        c.seed = seed;
        c.init = init == "convolution"   ? GeneratorInit::Convolution
                 : init == "palindromic" ? GeneratorInit::PalindromicConvolution
                                         : GeneratorInit::Gaussian;
        return c;
    }
};

void print_transform(std::ostream& out, const LinearTransform& t) {
    out << "N3=" << t.rows() << "\n"
        << "n3=" << t.cols() << "\n"
        << "kappa=" << num(t.kappa()) << "\n"
        << "rho=" << num(t.rho()) << "\n"
        << "one_to_two=" << num(t.one_to_two()) << "\n";
}

Matrix base_matrix(const std::string& kind, std::size_t big_n3, std::size_t n3,
                   std::uint64_t seed, double smin, double smax) {
    if (kind == "dft") return slim_columns(BaseKind::Dft, big_n3, n3).matrix();
    if (kind == "dct") return slim_columns(BaseKind::Dct, big_n3, n3).matrix();
    if (kind == "dwht") return dwht_transform(big_n3).matrix().leftCols(static_cast<Eigen::Index>(n3));
    if (kind == "rut") return random_unitary(n3, big_n3, seed).matrix();
    if (kind == "cond") return random_conditioned(n3, seed, smin, smax, big_n3).matrix();
    throw ParameterError("unknown transform kind '" + kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tensor completion under arbitrary mode-3 linear transforms"};
    app.require_subcommand(1);

    // transform build / concat
    auto* transform = app.add_subcommand("transform", "Build or combine transform matrices");
    transform->require_subcommand(1);
    std::string kind;
    std::size_t n3 = 0, big_n3 = 0;
    std::uint64_t t_seed = 0;
    double smin = 0.5, smax = 2.0;
    std::string t_out;
    auto* build = transform->add_subcommand("build", "Emit a transform matrix");
    build->add_option("--kind", kind, "dft|dct|dwht|rut|cond")->required()
        ->check(CLI::IsMember({"dft", "dct", "dwht", "rut", "cond"}));
    build->add_option("--n3", n3, "Input length")->required();
    build->add_option("--N3", big_n3, "Output length (defaults to n3)");
    build->add_option("--seed", t_seed, "Seed for rut/cond");
    build->add_option("--smin", smin, "Smallest singular value for cond")->capture_default_str();
    build->add_option("--smax", smax, "Largest singular value for cond")->capture_default_str();
    build->add_option("--out", t_out, "Output matrix file")->required();

    std::string cat_a, cat_b, cat_out;
    auto* concat = transform->add_subcommand("concat", "Stack two transforms vertically");
    concat->add_option("--a", cat_a, "Top matrix")->required();
    concat->add_option("--b", cat_b, "Bottom matrix")->required();
    concat->add_option("--out", cat_out, "Output matrix file")->required();

    // gen
    std::string g_dims, g_transform, g_transform2, g_out;
    std::size_t g_rank = 0, g_rank2 = 0;
    std::uint64_t g_seed = 0;
    GeneratorFlags g_flags;
    auto* gen = app.add_subcommand("gen", "Generate M with prescribed transform-domain tubal rank");
    gen->add_option("--dims", g_dims, "n1,n2,n3")->required();
    gen->add_option("--transform", g_transform, "Transform matrix file")->required();
    gen->add_option("--rank", g_rank, "Target tubal rank")->required();
    auto* g_t2 = gen->add_option("--transform2", g_transform2, "Second transform matrix file");
    gen->add_option("--rank2", g_rank2, "Target tubal rank under the second transform")->needs(g_t2);
    gen->add_option("--seed", g_seed, "Seed")->required();
    gen->add_option("--out", g_out, "Output tensor file")->required();
    g_flags.add(gen);

    // mask
    std::string m_dims, m_out;
    double m_p = 0;
    std::uint64_t m_seed = 0;
    auto* mask = app.add_subcommand("mask", "Draw a Bernoulli sampling mask");
    mask->add_option("--dims", m_dims, "n1,n2,n3")->required();
    mask->add_option("--p", m_p, "Sampling rate in (0, 1]")->required();
    mask->add_option("--seed", m_seed, "Seed")->required();
    mask->add_option("--out", m_out, "Output mask file")->required();

    // complete
    std::string c_input, c_mask, c_transform, c_out, c_report, c_history;
    SolverFlags c_flags;
    auto* complete = app.add_subcommand("complete", "Complete a tensor by ADMM");
    complete->add_option("--input", c_input, "Tensor with observed entries")->required();
    complete->add_option("--mask", c_mask, "Mask file")->required();
    complete->add_option("--transform", c_transform, "Transform matrix file")->required();
    complete->add_option("--out", c_out, "Output tensor file")->required();
    complete->add_option("--report", c_report, "Summary CSV");
    complete->add_option("--history", c_history, "Per-iteration CSV");
    c_flags.add(complete);

    // phase
    std::string p_dims, p_transform, p_transform2, p_solve, p_ranks, p_ranks2, p_rates, p_out;
    std::size_t p_trials = 10;
    std::uint64_t p_seed = 0;
    SolverFlags p_flags;
    GeneratorFlags p_gflags;
    auto* phase = app.add_subcommand("phase", "Run a phase-transition experiment");
    phase->add_option("--dims", p_dims, "n1,n2,n3")->required();
    phase->add_option("--transform", p_transform, "Transform matrix file")->required();
    auto* p_t2 = phase->add_option("--transform2", p_transform2, "Second generating transform");
    phase->add_option("--ranks2", p_ranks2, "Ranks under the second transform")->needs(p_t2);
    phase->add_option("--solve-transform", p_solve, "Transform used for completion");
    phase->add_option("--ranks", p_ranks, "Rank range, e.g. 2:2:50")->required();
    phase->add_option("--rates", p_rates, "Rate range, e.g. 0.05:0.05:0.95")->required();
    phase->add_option("--trials", p_trials, "Trials per cell")->capture_default_str();
    phase->add_option("--seed", p_seed, "Master seed")->required();
    phase->add_option("--out", p_out, "Output CSV (stdout when omitted)");
    p_flags.add(phase);
    p_gflags.add(phase);

    // analyze
    std::string a_input, a_transform;
    double a_c0 = 1.0;
    double a_eps = kDefaultRankTol;
    auto* analyze = app.add_subcommand("analyze", "Report tubal rank, incoherence and the sampling bound");
    analyze->add_option("--input", a_input, "Tensor file")->required();
    analyze->add_option("--transform", a_transform, "Transform matrix file")->required();
    analyze->add_option("--c0", a_c0, "Constant of the sampling bound")->capture_default_str();
    analyze->add_option("--rank-tol", a_eps, "Relative tubal-rank threshold")->capture_default_str();

    // metrics
    std::string r_ref, r_test;
    double r_peak = 1.0;
    auto* metrics = app.add_subcommand("metrics", "Compare two tensors");
    metrics->add_option("--ref", r_ref, "Reference tensor")->required();
    metrics->add_option("--test", r_test, "Test tensor")->required();
    metrics->add_option("--peak", r_peak, "Peak value")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*build) {
            if (big_n3 == 0) big_n3 = n3;
            LinearTransform t(base_matrix(kind, big_n3, n3, t_seed, smin, smax), kind);
            io::write_matrix(t_out, t.matrix());
            print_transform(out, t);
        } else if (*concat) {
            LinearTransform t = concat_transforms(load_transform(cat_a), load_transform(cat_b));
            io::write_matrix(cat_out, t.matrix());
            print_transform(out, t);
        } else if (*gen) {
            const Dims dims = parse_dims(g_dims);
            const LinearTransform t = load_transform(g_transform);
            const GeneratorConfig cfg = g_flags.config(g_seed);
            Tensor3 m;
            if (!g_transform2.empty()) {
                const LinearTransform t2 = load_transform(g_transform2);
                const std::size_t r2 = g_rank2 ? g_rank2 : g_rank;
                m = gen_double(t, g_rank, t2, r2, dims, cfg);
                out << "tube_ratio2=" << num(tube_ratio(t_svd(apply(t2, m)), r2)) << "\n";
            } else {
                m = gen_single(t, dims, g_rank, cfg);
            }
            if (cfg.real) m.set_real_hint(true);
            io::write_tensor(g_out, m);
            out << "tube_ratio=" << num(tube_ratio(t_svd(apply(t, m)), g_rank)) << "\n"
                << "fro_norm=" << num(fro_norm(m)) << "\n";
        } else if (*mask) {
            const SamplingMask w = bernoulli_mask(parse_dims(m_dims), m_p, m_seed);
            io::write_mask(m_out, w);
            out << "count=" << w.count() << "\n" << "rate=" << num(w.rate()) << "\n";
        } else if (*complete) {
            const Tensor3 m = io::read_tensor(c_input);
            const SamplingMask w = io::read_mask(c_mask);
            const LinearTransform t = load_transform(c_transform);
            SolverConfig cfg = c_flags.config();
            cfg.record_history = !c_history.empty();
            const CompletionResult res = admm_complete(m, w, t, cfg);
            io::write_tensor(c_out, res.x);
            const SolverReport& rep = res.report;
            if (!c_report.empty())
                io::write_text(c_report,
                               fmt::format("iterations,final_residual,objective,converged,imag_residue\n"
                                           "{},{},{},{},{}\n",
                                           rep.iterations, num(rep.final_residual), num(rep.objective),
                                           rep.converged ? "true" : "false", num(rep.imag_residue)));
            if (!c_history.empty()) {
                std::string h = "iteration,residual,objective\n";
                for (std::size_t i = 0; i < rep.history.size(); ++i)
                    h += fmt::format("{},{},{}\n", i + 1, num(rep.history[i].residual),
                                     num(rep.history[i].objective));
                io::write_text(c_history, h);
            }
            out << "iterations=" << rep.iterations << "\n"
                << "converged=" << (rep.converged ? "true" : "false") << "\n"
                << "final_residual=" << num(rep.final_residual) << "\n"
                << "objective=" << num(rep.objective) << "\n";
        } else if (*phase) {
            PhaseSetup setup(parse_dims(p_dims), load_transform(p_transform));
            if (!p_transform2.empty()) {
                setup.transform2 = load_transform(p_transform2);
                setup.ranks2 = parse_ranks(p_ranks2.empty() ? p_ranks : p_ranks2);
            }
            if (!p_solve.empty()) setup.solve_transform = load_transform(p_solve);
            setup.ranks = parse_ranks(p_ranks);
            setup.rates = parse_range(p_rates);
            setup.trials = p_trials;
            setup.seed = p_seed;
            setup.solver = p_flags.config();
            setup.solver.validate();
            setup.generator = p_gflags.config(0);
            const auto cells = phase_experiment(setup);
            for (const auto& c : cells)
                if (c.generator_failures)
                    err << "warning: r=" << c.r << " p=" << num(c.p) << ": " << c.generator_failures
                        << " trial(s) could not be generated\n";
            const std::string csv = phase_csv(cells);
            if (p_out.empty())
                out << csv;
            else
                io::write_text(p_out, csv);
        } else if (*analyze) {
            const Tensor3 x = io::read_tensor(a_input);
            const LinearTransform t = load_transform(a_transform);
            const Tensor3 tx = apply(t, x);
            const std::size_t r = tubal_rank(tx, a_eps);
            out << "tubal_rank=" << r << "\n";
            if (r == 0) throw ParameterError("tensor is zero in the transform domain");
            const IncoherenceReport inc = incoherence(tx, r, t);
            out << "mu=" << num(inc.mu) << "\n"
                << "nu=" << num(inc.nu) << "\n"
                << "lambda=" << num(inc.lambda) << "\n"
                << "kappa=" << num(t.kappa()) << "\n"
                << "rho=" << num(t.rho()) << "\n"
                << "sampling_bound=" << num(sampling_bound(t, inc.lambda, r, x.n1(), x.n2(), a_c0))
                << "\n";
        } else if (*metrics) {
            const Tensor3 ref = io::read_tensor(r_ref);
            const Tensor3 test = io::read_tensor(r_test);
            const MetricsReport m = compute_metrics(ref, test, r_peak);
            out << "psnr=" << num(m.psnr) << "\n"
                << "ssim=" << num(m.ssim) << "\n"
                << "mpsnr=" << num(m.mpsnr) << "\n"
                << "mssim=" << num(m.mssim) << "\n"
                << "rel_error=" << num(m.rel_error) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ttc::cli
