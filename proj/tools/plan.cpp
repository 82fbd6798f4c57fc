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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abit/abit.hpp"

namespace
{
    std::vector<std::string> split(const std::string &list)
    {
        std::vector<std::string> out;
        std::stringstream in(list);
        std::string item;
        while (std::getline(in, item, ','))
        {
            if (!item.empty())
            {
                out.push_back(item);
            }
        }
        return out;
    }

    nlohmann::json finite_or_null(double x)
    {
        return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
    }

    abit::ProblemDefinition make_problem(const std::string &kind, std::size_t n, std::uint64_t seed)
    {
        if (kind.rfind("file:", 0) == 0)
        {
            return abit::load_problem(kind.substr(5));
        }
        if (kind == "wall_gap")
        {
            return abit::make_wall_gap(n);
        }
        if (kind == "empty")
        {
            return abit::make_empty(n);
        }
        if (kind == "random_rects")
        {
            abit::RandomSource rng(seed);
            return abit::make_random_rectangles(n, abit::RandomRectanglesConfig{}, rng);
        }
        throw std::invalid_argument("unknown problem '" + kind + "'.");
    }

    nlohmann::json stats_json(const abit::SuiteResults &results, std::size_t points, double level)
    {
        double budget = results.suite.value("time", 1.0);
        const auto grid = abit::log_time_grid(std::min(1e-3, budget), budget, points);
        std::vector<std::pair<std::string, std::string>> groups;
        for (const auto &r : results.records)
        {
            const std::pair key{r.problem, r.planner};
            if (std::find(groups.begin(), groups.end(), key) == groups.end())
            {
                groups.push_back(key);
            }
        }
        nlohmann::json out = nlohmann::json::array();
        for (const auto &[problem, planner] : groups)
        {
            const auto records = abit::select_records(results.records, problem, planner);
            nlohmann::json success = nlohmann::json::array();
            for (const auto &p : abit::success_curve(records, grid))
            {
                success.push_back({p.time, p.fraction});
            }
            nlohmann::json cost = nlohmann::json::array();
            for (const auto &p : abit::cost_over_time(records, grid, level))
            {
                cost.push_back({p.time, finite_or_null(p.median), finite_or_null(p.ci_lower),
                                finite_or_null(p.ci_upper)});
            }
            std::vector<double> initial_times;
            std::vector<double> initial_costs;
            for (const auto &r : records)
            {
                initial_times.push_back(r.initial_time());
                initial_costs.push_back(r.events.empty() ? abit::kInfiniteCost : r.events.front().cost);
            }
            const auto t0 = abit::median_ci(initial_times, level);
            const auto c0 = abit::median_ci(initial_costs, level);
            out.push_back({{"problem", problem},
                           {"planner", planner},
                           {"runs", records.size()},
                           {"success", success},
                           {"cost", cost},
                           {"initial", {{"time", finite_or_null(t0.median)}, {"cost", finite_or_null(c0.median)}}}});
        }
        return out;
    }
}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"ABIT* planner and benchmark tool"};
    app.require_subcommand(1);

    // bench
    abit::SuiteDefinition suite;
    std::string problem = "wall_gap";
    std::vector<std::size_t> dims{2};
    std::string planners = "abit";
    std::string out_path;
    std::string csv_path;
    std::string pruning = "off";
    std::string config_path;
    std::uint64_t iterations = 0;
    auto *bench = app.add_subcommand("bench", "Run a benchmark suite and write a results file");
    bench->add_option("--problem", problem, "wall_gap | random_rects | empty | file:<path>")->capture_default_str();
    bench->add_option("--dim", dims, "State dimension(s)")->delimiter(',')->capture_default_str();
    bench->add_option("--planner", planners, "Comma-separated planners: abit, rrtconnect, rrtstar")
        ->capture_default_str();
    bench->add_option("--runs", suite.runs, "Runs per planner and problem")->capture_default_str();
    bench->add_option("--time", suite.time_budget, "Time budget per run [s]")->capture_default_str();
    bench->add_option("--seed", suite.base_seed, "Base seed; run i uses seed + i")->capture_default_str();
    bench->add_option("--out", out_path, "Results JSON path")->required();
    bench->add_option("--csv", csv_path, "Optional CSV export path");
    bench->add_option("--instances", suite.instances, "Random-rectangle worlds per dimension")
        ->capture_default_str();
    bench->add_option("--pruning", pruning, "on | off")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
    bench->add_option("--iterations", iterations, "Iteration cap per run (0 = none)");
    bench->add_option("--threads", suite.threads, "Worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--config", config_path, "Planner configuration JSON");
    bench->add_flag("--paths", suite.keep_paths, "Store final paths in the results file");

    // solve
    std::string solve_problem = "wall_gap";
    std::size_t solve_dim = 2;
    std::string solve_planner = "abit";
    double solve_time = 1.0;
    std::uint64_t solve_seed = 0;
    auto *solve = app.add_subcommand("solve", "Run one planner once and print the result as JSON");
    solve->add_option("--problem", solve_problem)->capture_default_str();
    solve->add_option("--dim", solve_dim)->capture_default_str();
    solve->add_option("--planner", solve_planner)->capture_default_str();
    solve->add_option("--time", solve_time)->capture_default_str();
    solve->add_option("--seed", solve_seed)->capture_default_str();

    // generate
    std::string gen_problem = "random_rects";
    std::size_t gen_dim = 2;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto *generate = app.add_subcommand("generate", "Write a problem file");
    generate->add_option("--problem", gen_problem)->capture_default_str();
    generate->add_option("--dim", gen_dim)->capture_default_str();
    generate->add_option("--seed", gen_seed)->capture_default_str();
    generate->add_option("--out", gen_out)->required();

    // stats
    std::string stats_in;
    std::string stats_out;
    std::size_t points = 200;
    double level = 0.99;
    auto *stats = app.add_subcommand("stats", "Success and median-cost curves from a results file");
    stats->add_option("--in", stats_in)->required();
    stats->add_option("--out", stats_out, "Output JSON (stdout if omitted)");
    stats->add_option("--points", points)->capture_default_str();
    stats->add_option("--level", level)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*bench)
        {
            suite.problem = problem;
            suite.dimensions = dims;
            suite.planners = split(planners);
            if (!config_path.empty())
            {
                std::ifstream in(config_path);
                if (!in)
                {
                    throw std::runtime_error("cannot open config '" + config_path + "'.");
                }
                suite.abit = abit::abit_config_from_json(nlohmann::json::parse(in));
            }
            suite.abit.pruning = pruning == "on";
            if (iterations > 0)
            {
                suite.max_iterations = iterations;
            }
            const auto results = abit::run_suite(suite,
                                                 [](const abit::RunRecord &r)
                                                 {
                                                     std::cerr << r.problem << ' ' << r.planner << " seed "
                                                               << r.seed << ": "
                                                               << (r.success ? std::to_string(r.final_cost())
                                                                             : std::string("no solution"))
                                                               << '\n';
                                                 });
            abit::save_results(results, out_path);
            if (!csv_path.empty())
            {
                abit::save_csv(results, csv_path);
            }
        }
        else if (*solve)
        {
            const auto p = make_problem(solve_problem, solve_dim, solve_seed);
            abit::SuiteResults results;
            results.records.push_back(
                abit::run_planner(solve_planner, p, solve_seed, abit::Termination{solve_time, std::nullopt},
                                  abit::AbitConfig{}, abit::RrtConfig{}));
            results.records.back().problem = p.id;
            std::cout << abit::record_to_json(results.records.back()).dump(1) << '\n';
        }
        else if (*generate)
        {
            abit::save_problem(make_problem(gen_problem, gen_dim, gen_seed), gen_out);
        }
        else if (*stats)
        {
            const auto j = stats_json(abit::load_results(stats_in), points, level);
            if (stats_out.empty())
            {
                std::cout << j.dump(1) << '\n';
            }
            else
            {
                std::ofstream(stats_out) << j.dump(1) << '\n';
            }
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
