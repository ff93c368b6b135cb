#include "ttc/errors.hpp"
#include "ttc/parallel.hpp"
#include "ttc/phase.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

using namespace ttc;

TEST(ParseRange, ColonForms) {
    EXPECT_EQ(parse_range("2:2:10"), (std::vector<double>{2, 4, 6, 8, 10}));
    EXPECT_EQ(parse_range("1:4"), (std::vector<double>{1, 2, 3, 4}));
    EXPECT_EQ(parse_range("3"), (std::vector<double>{3}));
    EXPECT_EQ(parse_range("0.5,1,2:2:6"), (std::vector<double>{0.5, 1, 2, 4, 6}));
    EXPECT_EQ(parse_range("5:-2:1"), (std::vector<double>{5, 3, 1}));
    EXPECT_TRUE(parse_range("4:1").empty());
    EXPECT_EQ(parse_range("1:2:4"), (std::vector<double>{1, 3}));
}

TEST(ParseRange, DecimalStepHitsStopExactly) {
    const auto r = parse_range("0.05:0.05:0.95");
    ASSERT_EQ(r.size(), 19u);
    EXPECT_EQ(r.front(), 0.05);
    EXPECT_EQ(r[2], 0.15);
    EXPECT_EQ(r[5], 0.3);
    EXPECT_EQ(r.back(), 0.95);
    const auto s = parse_range("0.1:0.1:1");
    ASSERT_EQ(s.size(), 10u);
    EXPECT_EQ(s[2], 0.3);
    EXPECT_EQ(s.back(), 1.0);
}

TEST(ParseRange, Errors) {
    EXPECT_THROW(parse_range(""), ParameterError);
    EXPECT_THROW(parse_range("1:0:3"), ParameterError);
    EXPECT_THROW(parse_range("a:2"), ParameterError);
    EXPECT_THROW(parse_range("1:2:3:4"), ParameterError);
    EXPECT_THROW(parse_range("1,,2"), ParameterError);
    EXPECT_THROW(parse_range("1.5x"), ParameterError);
}

TEST(TrialSeed, DistinctAcrossCoordinates) {
    const auto base = trial_seed(1, 2, std::nullopt, 0.5, 0);
    EXPECT_EQ(base, trial_seed(1, 2, std::nullopt, 0.5, 0));
    EXPECT_NE(base, trial_seed(2, 2, std::nullopt, 0.5, 0));
    EXPECT_NE(base, trial_seed(1, 3, std::nullopt, 0.5, 0));
    EXPECT_NE(base, trial_seed(1, 2, 2, 0.5, 0));
    EXPECT_NE(base, trial_seed(1, 2, std::nullopt, 0.55, 0));
    EXPECT_NE(base, trial_seed(1, 2, std::nullopt, 0.5, 1));
}

TEST(Parallel, CoversEveryIndexAndRethrowsLowest) {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    try {
        parallel_for(10, [](std::size_t i) {
            if (i == 3 || i == 7) throw std::runtime_error(std::to_string(i));
        });
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "3");
    }
    std::atomic<int> inner{0};
    parallel_for(4, [&](std::size_t) { parallel_for(3, [&](std::size_t) { ++inner; }); });
    EXPECT_EQ(inner.load(), 12);
    EXPECT_GE(thread_count(), 1u);
}

namespace {

PhaseSetup small_setup() {
    PhaseSetup s{{12, 12, 4}, dft_transform(4)};
    s.ranks = {1, 2};
    s.rates = {0.3, 0.6, 1.0};
    s.trials = 4;
    s.seed = 21;
    return s;
}

}  // namespace

TEST(PhaseExperiment, FullObservationAlwaysSucceedsAndCountsAreBounded) {
    const auto cells = phase_experiment(small_setup());
    ASSERT_EQ(cells.size(), 6u);
    for (const auto& c : cells) {
        EXPECT_LE(c.successes, c.trials);
        EXPECT_EQ(c.trials, 4u);
        EXPECT_EQ(c.generator_failures, 0u);
        if (c.p == 1.0) EXPECT_EQ(c.successes, c.trials);
    }
    EXPECT_EQ(cells[0].r, 1u);
    EXPECT_EQ(cells[0].p, 0.3);
    EXPECT_EQ(cells[5].r, 2u);
}

TEST(PhaseExperiment, ReproducibleForMasterSeedRegardlessOfThreads) {
    const PhaseSetup s = small_setup();
    const std::string first = phase_csv(phase_experiment(s));
    setenv(kThreadsEnvVar, "1", 1);
    const std::string serial = phase_csv(phase_experiment(s));
    unsetenv(kThreadsEnvVar);
    EXPECT_EQ(first, serial);
}

TEST(PhaseExperiment, SuccessNonDecreasingInRate) {
    PhaseSetup s{{16, 16, 4}, dct_transform(4)};
    s.ranks = {2, 4};
    s.rates = {0.15, 0.3, 0.5, 0.8};
    s.trials = 5;
    s.seed = 5;
    const auto cells = phase_experiment(s);
    for (std::size_t row = 0; row < 2; ++row) {
        int inversions = 0;
        for (std::size_t i = 1; i < 4; ++i)
            if (cells[row * 4 + i].successes < cells[row * 4 + i - 1].successes) ++inversions;
        EXPECT_LE(inversions, 1) << "rank " << cells[row * 4].r;
    }
}

TEST(PhaseExperiment, TwoTransformCellsAndCsv) {
    PhaseSetup s{{8, 8, 4}, dft_transform(4)};
    s.transform2 = dct_transform(4);
    s.ranks = {2};
    s.ranks2 = {2, 3};
    s.rates = {1.0};
    s.trials = 2;
    const auto cells = phase_experiment(s);
    ASSERT_EQ(cells.size(), 2u);
    EXPECT_EQ(*cells[1].r2, 3u);
    EXPECT_EQ(phase_csv(cells), "r,r2,p,trials,successes\n2,2,1,2,2\n2,3,1,2,2\n");
}

TEST(PhaseExperiment, CsvPrintsSeventeenDigits) {
    std::vector<PhaseCell> cells{{3, std::nullopt, 0.1, 10, 7, 0}};
    EXPECT_EQ(phase_csv(cells), "r,p,trials,successes\n3,0.10000000000000001,10,7\n");
}

TEST(PhaseExperiment, RejectsBadGrids) {
    PhaseSetup s = small_setup();
    s.rates = {0.0};
    EXPECT_THROW(phase_experiment(s), ParameterError);
    s = small_setup();
    s.ranks = {13};
    EXPECT_THROW(phase_experiment(s), ParameterError);
    s = small_setup();
    s.transform2 = dct_transform(4);
    EXPECT_THROW(phase_experiment(s), ParameterError);
}

TEST(PhaseExperiment, LowRankCellOnFiftyByFiftyAllSucceeds) {
    PhaseSetup s{{50, 50, 20}, dft_transform(20)};
    s.ranks = {2};
    s.rates = {0.5};
    s.trials = 10;
    s.seed = 2024;
    const auto cells = phase_experiment(s);
    EXPECT_EQ(cells[0].successes, 10u);
}

TEST(PhaseExperiment, NearFullRankSparseCellAllFails) {
    PhaseSetup s{{50, 50, 20}, dft_transform(20)};
    s.ranks = {48};
    s.rates = {0.05};
    s.trials = 10;
    s.seed = 2024;
    // 2500 observations against 48 * 52 * 20 degrees of freedom: recovery
    // is impossible whatever the iteration budget, so a short run suffices.
    s.solver.max_iters = 200;
    const auto cells = phase_experiment(s);
    EXPECT_EQ(cells[0].successes, 0u);
}
