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

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abit/world.hpp"

namespace abit
{
    namespace detail
    {
        inline State state_from_json(const nlohmann::json &j, std::size_t dimension, const char *what)
        {
            if (!j.is_array())
            {
                throw std::invalid_argument(std::string("problem file: '") + what + "' must be an array.");
            }
            auto coords = j.get<std::vector<double>>();
            if (coords.size() != dimension)
            {
                throw std::invalid_argument(std::string("problem file: '") + what + "' has wrong dimension.");
            }
            return State(std::move(coords));
        }

        inline nlohmann::json state_to_json(const State &x)
        {
            return nlohmann::json(std::vector<double>(x.coords().begin(), x.coords().end()));
        }

        inline Box box_from_json(const nlohmann::json &j, std::size_t dimension)
        {
            return {state_from_json(j.at("lower"), dimension, "lower"),
                    state_from_json(j.at("upper"), dimension, "upper")};
        }

        inline nlohmann::json box_to_json(const Box &box)
        {
            return {{"lower", state_to_json(box.lower)}, {"upper", state_to_json(box.upper)}};
        }
    }  // namespace detail

    inline nlohmann::json problem_to_json(const ProblemDefinition &problem)
    {
        nlohmann::json obstacles = nlohmann::json::array();
        for (const auto &box : problem.world.obstacles())
        {
            obstacles.push_back(detail::box_to_json(box));
        }
        nlohmann::json goals = nlohmann::json::array();
        for (const auto &goal : problem.goals)
        {
            goals.push_back(detail::state_to_json(goal));
        }
        return {{"dimension", problem.dimension()},
                {"bounds", detail::box_to_json(problem.world.bounds())},
                {"obstacles", std::move(obstacles)},
                {"start", detail::state_to_json(problem.start)},
                {"goals", std::move(goals)}};
    }

    /// Parses and validates a problem. Throws std::invalid_argument on schema violations or
    /// invalid start/goal states.
    inline ProblemDefinition problem_from_json(const nlohmann::json &j, std::string id = "file")
    {
        try
        {
            const auto n = j.at("dimension").get<std::size_t>();
            if (n == 0)
            {
                throw std::invalid_argument("problem file: dimension must be positive.");
            }
            std::vector<Box> obstacles;
            for (const auto &o : j.value("obstacles", nlohmann::json::array()))
            {
                obstacles.push_back(detail::box_from_json(o, n));
            }
            ProblemDefinition problem;
            problem.id = std::move(id);
            problem.world = World(detail::box_from_json(j.at("bounds"), n), std::move(obstacles));
            problem.start = detail::state_from_json(j.at("start"), n, "start");
            for (const auto &g : j.at("goals"))
            {
                problem.goals.push_back(detail::state_from_json(g, n, "goals"));
            }
            problem.validate();
            return problem;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument(std::string("problem file: ") + e.what());
        }
    }

    inline ProblemDefinition load_problem(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
        {
            throw std::runtime_error("cannot open problem file '" + path + "'.");
        }
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument("problem file '" + path + "': " + e.what());
        }
        return problem_from_json(j, "file:" + path);
    }

    inline void save_problem(const ProblemDefinition &problem, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
        {
            throw std::runtime_error("cannot write problem file '" + path + "'.");
        }
        out << problem_to_json(problem).dump(2) << '\n';
    }
}  // namespace abit
