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

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "abit/abit_star.hpp"
#include "abit/problem_io.hpp"
#include "abit/rrt.hpp"
#include "abit/run_record.hpp"
#include "abit/world.hpp"

namespace abit
{
    inline const std::vector<std::string> &planner_names()
    {
        static const std::vector<std::string> names{"abit", "rrtconnect", "rrtstar"};
        return names;
    }

    /// An experiment: every planner on every problem, `runs` times each.
    struct SuiteDefinition
    {
        /// "wall_gap", "random_rects", "empty", or "file:<path>".
        std::string problem{"wall_gap"};
        std::vector<std::size_t> dimensions{2};
        std::vector<std::string> planners{"abit"};
        std::size_t runs{10};
        double time_budget{1.0};
        std::uint64_t base_seed{0};
        /// Random-rectangle worlds per dimension.
        std::size_t instances{10};
        RandomRectanglesConfig rectangles{};
        AbitConfig abit{};
        RrtConfig rrt{};
        std::optional<std::uint64_t> max_iterations;
        /// Worker threads; zero uses the hardware concurrency.
        std::size_t threads{1};
        bool keep_paths{false};

        void validate() const
        {
            if (runs < 1)
            {
                throw std::invalid_argument("suite: runs must be at least 1.");
            }
            if (!(time_budget > 0.0))
            {
                throw std::invalid_argument("suite: time budget must be positive.");
            }
            if (planners.empty())
            {
                throw std::invalid_argument("suite: at least one planner is required.");
            }
            for (const auto &name : planners)
            {
                if (std::find(planner_names().begin(), planner_names().end(), name) == planner_names().end())
                {
                    throw std::invalid_argument("suite: unknown planner '" + name + "'.");
                }
            }
            if (problem.rfind("file:", 0) != 0 && dimensions.empty())
            {
                throw std::invalid_argument("suite: at least one dimension is required.");
            }
            abit.rgg.validate();
            (void)abit.schedule();
        }
    };

    /// Seed of the world generator for random-rectangle instance `i`; kept apart from the
    /// run seeds base_seed + run.
    inline std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t instance)
    {
        return base_seed + 1'000'003ULL * (instance + 1);
    }

    /// The problems a suite runs on, in a fixed order.
    inline std::vector<ProblemDefinition> suite_problems(const SuiteDefinition &suite)
    {
        std::vector<ProblemDefinition> problems;
        if (suite.problem.rfind("file:", 0) == 0)
        {
            problems.push_back(load_problem(suite.problem.substr(5)));
            return problems;
        }
        for (std::size_t n : suite.dimensions)
        {
            if (suite.problem == "wall_gap")
            {
                problems.push_back(make_wall_gap(n));
            }
            else if (suite.problem == "empty")
            {
                problems.push_back(make_empty(n));
            }
            else if (suite.problem == "random_rects")
            {
                for (std::size_t i = 0; i < suite.instances; ++i)
                {
                    RandomSource rng(instance_seed(suite.base_seed, i));
                    auto problem = make_random_rectangles(n, suite.rectangles, rng);
                    problem.id = "random_rects_" + std::to_string(n) + "d_i" + std::to_string(i);
                    problems.push_back(std::move(problem));
                }
            }
            else
            {
                throw std::invalid_argument("suite: unknown problem '" + suite.problem + "'.");
            }
        }
        return problems;
    }

    inline RunRecord run_planner(const std::string &planner, const ProblemDefinition &problem, std::uint64_t seed,
                                 const Termination &termination, const AbitConfig &abit_config,
                                 const RrtConfig &rrt_config)
    {
        if (planner == "abit")
        {
            AbitConfig config = abit_config;
            config.seed = seed;
            AbitStar abit(problem, config);
            return abit.solve(termination);
        }
        RrtConfig config = rrt_config;
        config.seed = seed;
        if (planner == "rrtconnect")
        {
            return rrt_connect(problem, config, termination);
        }
        if (planner == "rrtstar")
        {
            return rrt_star(problem, config, termination);
        }
        throw std::invalid_argument("unknown planner '" + planner + "'.");
    }

    struct SuiteResults
    {
        nlohmann::json suite;
        std::vector<RunRecord> records;
    };

    inline nlohmann::json abit_config_to_json(const AbitConfig &config)
    {
        return {{"m", config.rgg.batch_size},
                {"eta", config.rgg.eta},
                {"pruning", config.pruning},
                {"searches_per_batch", config.searches_per_batch},
                {"infl_schedule", config.inflation_schedule},
                {"trunc_schedule", config.truncation_schedule},
                {"seed", config.seed}};
    }

    /// Reads a planner configuration block; absent keys keep their defaults.
    inline AbitConfig abit_config_from_json(const nlohmann::json &j)
    {
        AbitConfig config;
        try
        {
            config.rgg.batch_size = j.value("m", config.rgg.batch_size);
            config.rgg.eta = j.value("eta", config.rgg.eta);
            config.pruning = j.value("pruning", config.pruning);
            config.searches_per_batch = j.value("searches_per_batch", config.searches_per_batch);
            config.inflation_schedule = j.value("infl_schedule", config.inflation_schedule);
            config.truncation_schedule = j.value("trunc_schedule", config.truncation_schedule);
            config.seed = j.value("seed", config.seed);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument(std::string("planner config: ") + e.what());
        }
        config.rgg.validate();
        (void)config.schedule();
        return config;
    }

    inline nlohmann::json suite_to_json(const SuiteDefinition &suite)
    {
        nlohmann::json j = {{"problem", suite.problem},
                            {"dimensions", suite.dimensions},
                            {"planners", suite.planners},
                            {"runs", suite.runs},
                            {"time", suite.time_budget},
                            {"seed", suite.base_seed},
                            {"instances", suite.instances},
                            {"abit", abit_config_to_json(suite.abit)},
                            {"rrt",
                             {{"range", suite.rrt.range}, {"goal_bias", suite.rrt.goal_bias}, {"eta", suite.rrt.eta}}}};
        if (suite.max_iterations)
        {
            j["iterations"] = *suite.max_iterations;
        }
        return j;
    }

    /// Runs every (problem, planner, run) trial, optionally on several threads. Records are
    /// ordered by problem, then planner, then seed, independent of scheduling.
    inline SuiteResults run_suite(const SuiteDefinition &suite,
                                  const std::function<void(const RunRecord &)> &on_record = {})
    {
        suite.validate();
        const auto problems = suite_problems(suite);

        struct Trial
        {
            std::size_t problem;
            std::string planner;
            std::uint64_t seed;
        };
        std::vector<Trial> trials;
        for (std::size_t p = 0; p < problems.size(); ++p)
        {
            for (const auto &planner : suite.planners)
            {
                for (std::size_t r = 0; r < suite.runs; ++r)
                {
                    trials.push_back({p, planner, suite.base_seed + r});
                }
            }
        }

        SuiteResults results;
        results.suite = suite_to_json(suite);
        results.records.resize(trials.size());
        Termination termination{suite.time_budget, suite.max_iterations};

        std::atomic<std::size_t> next{0};
        std::mutex report;
        auto worker = [&]()
        {
            while (true)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= trials.size())
                {
                    return;
                }
                const Trial &trial = trials[i];
                RunRecord record = run_planner(trial.planner, problems[trial.problem], trial.seed, termination,
                                               suite.abit, suite.rrt);
                record.problem = problems[trial.problem].id;
                if (!suite.keep_paths)
                {
                    record.final_path.reset();
                }
                results.records[i] = std::move(record);
                if (on_record)
                {
                    std::lock_guard lock(report);
                    on_record(results.records[i]);
                }
            }
        };

        std::size_t threads = suite.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : suite.threads;
        threads = std::min(threads, trials.size());
        if (threads <= 1)
        {
            worker();
        }
        else
        {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < threads; ++t)
            {
                pool.emplace_back(worker);
            }
            for (auto &thread : pool)
            {
                thread.join();
            }
        }
        return results;
    }

    inline nlohmann::json record_to_json(const RunRecord &record)
    {
        nlohmann::json events = nlohmann::json::array();
        for (const auto &e : record.events)
        {
            events.push_back({e.time, e.cost});
        }
        nlohmann::json j = {{"planner", record.planner},
                            {"problem", record.problem},
                            {"seed", record.seed},
                            {"success", record.success},
                            {"events", std::move(events)}};
        if (record.final_path)
        {
            nlohmann::json path = nlohmann::json::array();
            for (const auto &x : *record.final_path)
            {
                path.push_back(detail::state_to_json(x));
            }
            j["path"] = std::move(path);
        }
        return j;
    }

    inline RunRecord record_from_json(const nlohmann::json &j)
    {
        RunRecord record;
        record.planner = j.at("planner").get<std::string>();
        record.problem = j.at("problem").get<std::string>();
        record.seed = j.at("seed").get<std::uint64_t>();
        record.success = j.at("success").get<bool>();
        for (const auto &e : j.at("events"))
        {
            record.events.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
        }
        if (j.contains("path"))
        {
            std::vector<State> path;
            for (const auto &x : j.at("path"))
            {
                path.emplace_back(x.get<std::vector<double>>());
            }
            record.final_path = std::move(path);
        }
        if (record.success != !record.events.empty())
        {
            throw std::invalid_argument("results file: success flag disagrees with the event list.");
        }
        return record;
    }

    inline nlohmann::json results_to_json(const SuiteResults &results)
    {
        nlohmann::json records = nlohmann::json::array();
        for (const auto &record : results.records)
        {
            records.push_back(record_to_json(record));
        }
        return {{"suite", results.suite}, {"records", std::move(records)}};
    }

    inline SuiteResults results_from_json(const nlohmann::json &j)
    {
        try
        {
            SuiteResults results;
            results.suite = j.at("suite");
            for (const auto &r : j.at("records"))
            {
                results.records.push_back(record_from_json(r));
            }
            return results;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument(std::string("results file: ") + e.what());
        }
    }

    inline void save_results(const SuiteResults &results, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
        {
            throw std::runtime_error("cannot write results file '" + path + "'.");
        }
        out << results_to_json(results).dump(1) << '\n';
        if (!out)
        {
            throw std::runtime_error("failed writing results file '" + path + "'.");
        }
    }

    inline SuiteResults load_results(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
        {
            throw std::runtime_error("cannot open results file '" + path + "'.");
        }
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument("results file '" + path + "': " + e.what());
        }
        return results_from_json(j);
    }

    /// One row per event: planner,problem,seed,t,cost.
    inline std::string results_to_csv(const SuiteResults &results)
    {
        std::ostringstream out;
        out << std::setprecision(std::numeric_limits<double>::max_digits10);
        out << "planner,problem,seed,t,cost\n";
        for (const auto &record : results.records)
        {
            for (const auto &e : record.events)
            {
                out << record.planner << ',' << record.problem << ',' << record.seed << ',' << e.time << ','
                    << e.cost << '\n';
            }
        }
        return out.str();
    }

    inline void save_csv(const SuiteResults &results, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
        {
            throw std::runtime_error("cannot write CSV file '" + path + "'.");
        }
        out << results_to_csv(results);
    }

    /// Records of one (problem, planner) group, in file order.
    inline std::vector<RunRecord> select_records(const std::vector<RunRecord> &records, const std::string &problem,
                                                 const std::string &planner)
    {
        std::vector<RunRecord> out;
        for (const auto &r : records)
        {
            if (r.problem == problem && r.planner == planner)
            {
                out.push_back(r);
            }
        }
        return out;
    }
}  // namespace abit
