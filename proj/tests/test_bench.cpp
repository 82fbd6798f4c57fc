/*********************************************************************
 * Software License Agreement (BSD License)
 *
 *  Copyright (c) 2026, the abit contributors
 *  All rights reserved.
 *
 *  Redistribution and use in source and binary forms, with or without
 *  modification, are permitted provided that the following conditions
 *  are met:
 *
 *   * Redistributions of source code must retain the above copyright
 *     notice, this list of conditions and the following disclaimer.
 *   * Redistributions in binary form must reproduce the above
 *     copyright notice, this list of conditions and the following
 *     disclaimer in the documentation and/or other materials provided
 *     with the distribution.
 *   * Neither the names of the copyright holders nor the names of its
 *     contributors may be used to endorse or promote products derived
 *     from this software without specific prior written permission.
 *
 *  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
 *  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
 *  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS
 *  FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE
 *  COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT,
 *  INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING,
 *  BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
 *  LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
 *  CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
 *  LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN
 *  ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
 *  POSSIBILITY OF SUCH DAMAGE.
 *********************************************************************/

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "abit/bench.hpp"
#include "abit/statistics.hpp"
#include "oracles.hpp"

using namespace abit;

namespace
{
    RunRecord record(std::vector<CostEvent> events, std::uint64_t seed = 0)
    {
        RunRecord r;
        r.planner = "abit";
        r.problem = "p";
        r.seed = seed;
        r.success = !events.empty();
        r.events = std::move(events);
        return r;
    }
}  // namespace

TEST(MedianCi, SmallSampleUsesExtremes)
{
    const auto m = median_ci({3.0, 1.0, 2.0});
    EXPECT_EQ(m.median, 2.0);
    EXPECT_EQ(m.lower, 1.0);
    EXPECT_EQ(m.upper, 3.0);
    EXPECT_THROW(median_ci({}), std::invalid_argument);
}

TEST(MedianCi, IndicesMatchBinomialOracle)
{
    // Frozen results of the oracle at 99 %.
    EXPECT_EQ(median_ci_indices(3, 0.99), (std::pair<std::size_t, std::size_t>{1, 3}));
    EXPECT_EQ(median_ci_indices(10, 0.99), (std::pair<std::size_t, std::size_t>{1, 10}));
    EXPECT_EQ(median_ci_indices(100, 0.99), (std::pair<std::size_t, std::size_t>{37, 63}));
    EXPECT_EQ(median_ci_indices(100, 0.95), (std::pair<std::size_t, std::size_t>{40, 60}));
    EXPECT_EQ(median_ci_indices(10, 0.95), (std::pair<std::size_t, std::size_t>{2, 9}));
    for (std::size_t n : {3u, 10u, 100u})
    {
        for (double level : {0.5, 0.9, 0.95, 0.99})
        {
            EXPECT_EQ(median_ci_indices(n, level), oracle::median_ci(n, level)) << "n=" << n << " level=" << level;
        }
    }
    for (std::size_t n = 2; n <= 60; ++n)
    {
        EXPECT_EQ(median_ci_indices(n, 0.99), oracle::median_ci(n, 0.99)) << "n=" << n;
    }
}

TEST(MedianCi, EndpointsAreOrderStatistics)
{
    std::vector<double> samples;
    for (int i = 100; i >= 1; --i)
    {
        samples.push_back(i * 0.5);
    }
    const auto m = median_ci(samples);
    EXPECT_EQ(m.median, 25.0);  // lower of the two middle values
    EXPECT_EQ(m.lower, 37 * 0.5);
    EXPECT_EQ(m.upper, 63 * 0.5);
}

TEST(MedianCi, MoreThanHalfInfiniteGivesInfiniteMedian)
{
    std::vector<double> samples{1.0, 2.0, 3.0, 4.0, kInfiniteCost, kInfiniteCost, kInfiniteCost, kInfiniteCost,
                                kInfiniteCost};
    EXPECT_TRUE(std::isinf(median_ci(samples).median));
    samples.pop_back();
    samples.pop_back();
    EXPECT_EQ(median_ci(samples).median, 4.0);
}

TEST(TimeGrid, LogSpaced)
{
    const auto grid = log_time_grid(1e-3, 1.0);
    ASSERT_EQ(grid.size(), 200u);
    EXPECT_EQ(grid.front(), 1e-3);
    EXPECT_EQ(grid.back(), 1.0);
    for (std::size_t i = 2; i < grid.size(); ++i)
    {
        EXPECT_NEAR(grid[i] / grid[i - 1], grid[1] / grid[0], 1e-9);
    }
    EXPECT_THROW(log_time_grid(0.0, 1.0), std::invalid_argument);
}

TEST(SuccessCurve, StepsAtFirstSolutionTimes)
{
    const std::vector<RunRecord> records{record({{0.2, 3.0}}), record({{0.5, 2.0}, {0.7, 1.5}}), record({}),
                                         record({{0.05, 4.0}})};
    const std::vector<double> grid{0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0};
    const auto curve = success_curve(records, grid);
    const std::vector<double> expected{0.0, 0.25, 0.25, 0.5, 0.5, 0.75, 0.75};
    ASSERT_EQ(curve.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        EXPECT_EQ(curve[i].time, grid[i]);
        EXPECT_DOUBLE_EQ(curve[i].fraction, expected[i]);
    }
}

TEST(CostOverTime, MedianOfBestSoFar)
{
    const std::vector<RunRecord> records{record({{0.1, 3.0}, {0.4, 2.0}}), record({{0.2, 2.5}, {0.3, 1.0}}),
                                         record({{0.5, 1.5}})};
    const std::vector<double> grid{0.0, 0.1, 0.2, 0.35, 0.45, 1.0};
    const auto curve = cost_over_time(records, grid);
    ASSERT_EQ(curve.size(), grid.size());
    EXPECT_TRUE(std::isinf(curve[0].median));
    EXPECT_TRUE(std::isinf(curve[1].median));   // {3, inf, inf}
    EXPECT_DOUBLE_EQ(curve[2].median, 3.0);     // {3, 2.5, inf}
    EXPECT_DOUBLE_EQ(curve[3].median, 3.0);     // {3, 1, inf}
    EXPECT_DOUBLE_EQ(curve[4].median, 2.0);     // {2, 1, inf}
    EXPECT_DOUBLE_EQ(curve[5].median, 1.5);     // {2, 1, 1.5}
    for (std::size_t i = 1; i < curve.size(); ++i)
    {
        EXPECT_LE(curve[i].median, curve[i - 1].median);
    }

    const auto single = cost_over_time({records[0]}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        EXPECT_EQ(single[i].median, records[0].cost_at(grid[i]));
    }
}

TEST(Results, JsonRoundTripAndCsv)
{
    SuiteDefinition suite;
    suite.problem = "wall_gap";
    suite.dimensions = {2};
    suite.planners = {"abit", "rrtconnect"};
    suite.runs = 3;
    suite.time_budget = 10.0;
    suite.max_iterations = 2000;
    suite.keep_paths = true;
    const auto results = run_suite(suite);
    ASSERT_EQ(results.records.size(), 6u);

    const auto path = std::filesystem::temp_directory_path() / "abit_results_roundtrip.json";
    save_results(results, path.string());
    const auto loaded = load_results(path.string());
    std::filesystem::remove(path);
    EXPECT_EQ(loaded.suite, results.suite);
    ASSERT_EQ(loaded.records.size(), results.records.size());
    for (std::size_t i = 0; i < loaded.records.size(); ++i)
    {
        EXPECT_EQ(loaded.records[i], results.records[i]);
    }

    // Statistics recomputed from the reread file equal those from the in-memory records.
    const auto grid = log_time_grid(1e-3, suite.time_budget);
    for (const std::string planner : {"abit", "rrtconnect"})
    {
        const auto original = select_records(results.records, "wall_gap_2d", planner);
        const auto reread = select_records(loaded.records, "wall_gap_2d", planner);
        ASSERT_EQ(original.size(), 3u);
        const auto c1 = cost_over_time(original, grid);
        const auto c2 = cost_over_time(reread, grid);
        const auto s1 = success_curve(original, grid);
        const auto s2 = success_curve(reread, grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            EXPECT_EQ(c1[i].median, c2[i].median);
            EXPECT_EQ(c1[i].ci_lower, c2[i].ci_lower);
            EXPECT_EQ(c1[i].ci_upper, c2[i].ci_upper);
            EXPECT_EQ(s1[i].fraction, s2[i].fraction);
        }
    }

    const std::string csv = results_to_csv(results);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "planner,problem,seed,t,cost");
    std::size_t rows = 0;
    std::size_t events = 0;
    while (std::getline(in, line))
    {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    }
    for (const auto &r : results.records)
    {
        events += r.events.size();
    }
    EXPECT_EQ(rows, events);
}

TEST(Results, RejectsMalformedFiles)
{
    nlohmann::json j = {{"suite", nlohmann::json::object()},
                        {"records", {{{"planner", "abit"}, {"problem", "p"}, {"seed", 1}, {"success", true},
                                      {"events", nlohmann::json::array()}}}}};
    EXPECT_THROW(results_from_json(j), std::invalid_argument);
    j["records"][0]["events"] = {{0.1, 2.0}};
    EXPECT_NO_THROW(results_from_json(j));
    j["records"][0].erase("seed");
    EXPECT_THROW(results_from_json(j), std::invalid_argument);
    EXPECT_THROW(load_results("/nonexistent/results.json"), std::runtime_error);
}

TEST(Suite, SeedsOrderAndDeterminism)
{
    SuiteDefinition suite;
    suite.problem = "random_rects";
    suite.dimensions = {2};
    suite.instances = 2;
    suite.planners = {"rrtstar", "abit"};
    suite.runs = 3;
    suite.base_seed = 40;
    suite.time_budget = 10.0;
    suite.max_iterations = 1500;
    const auto a = run_suite(suite);
    suite.threads = 3;
    const auto b = run_suite(suite);
    ASSERT_EQ(a.records.size(), 12u);
    for (std::size_t i = 0; i < a.records.size(); ++i)
    {
        const auto &r = a.records[i];
        EXPECT_EQ(r.seed, 40 + i % 3);
        EXPECT_EQ(r.planner, i % 6 < 3 ? "rrtstar" : "abit");
        EXPECT_EQ(r.problem, i < 6 ? "random_rects_2d_i0" : "random_rects_2d_i1");
        EXPECT_EQ(r.success, !r.events.empty());
        ASSERT_EQ(r.events.size(), b.records[i].events.size());
        for (std::size_t k = 0; k < r.events.size(); ++k)
        {
            EXPECT_EQ(r.events[k].cost, b.records[i].events[k].cost);
        }
    }
}

TEST(Suite, TinyBudgetStillProducesRecords)
{
    SuiteDefinition suite;
    suite.problem = "wall_gap";
    suite.dimensions = {4};
    suite.runs = 1;
    suite.time_budget = 0.01;
    const auto results = run_suite(suite);
    ASSERT_EQ(results.records.size(), 1u);
    EXPECT_EQ(results.records[0].success, !results.records[0].events.empty());
}

TEST(Suite, Validation)
{
    SuiteDefinition suite;
    suite.runs = 0;
    EXPECT_THROW(suite.validate(), std::invalid_argument);
    suite.runs = 1;
    suite.time_budget = 0.0;
    EXPECT_THROW(suite.validate(), std::invalid_argument);
    suite.time_budget = 1.0;
    suite.planners = {"prm"};
    EXPECT_THROW(suite.validate(), std::invalid_argument);
    suite.planners = {"abit"};
    suite.problem = "maze";
    EXPECT_THROW(run_suite(suite), std::invalid_argument);
}

TEST(PlannerConfig, JsonBlock)
{
    const auto config = abit_config_from_json(nlohmann::json::parse(
        R"({"m": 50, "eta": 1.5, "pruning": true, "searches_per_batch": 3, "infl_schedule": "unit",
            "trunc_schedule": "constant:1.2", "seed": 9})"));
    EXPECT_EQ(config.rgg.batch_size, 50u);
    EXPECT_EQ(config.rgg.eta, 1.5);
    EXPECT_TRUE(config.pruning);
    EXPECT_EQ(config.searches_per_batch, 3u);
    EXPECT_EQ(config.seed, 9u);
    EXPECT_EQ(abit_config_from_json(abit_config_to_json(config)).truncation_schedule, "constant:1.2");
    const auto defaults = abit_config_from_json(nlohmann::json::object());
    EXPECT_EQ(defaults.rgg.batch_size, 100u);
    EXPECT_EQ(defaults.rgg.eta, 1.1);
    EXPECT_FALSE(defaults.pruning);
    EXPECT_THROW(abit_config_from_json(nlohmann::json::parse(R"({"m": "many"})")), std::invalid_argument);
    EXPECT_THROW(abit_config_from_json(nlohmann::json::parse(R"({"infl_schedule": "x"})")), std::invalid_argument);
}
