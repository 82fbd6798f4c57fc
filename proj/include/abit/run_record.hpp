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

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abit/state.hpp"

namespace abit
{
    /// A strictly improved solution reported by an anytime planner.
    struct SolutionEvent
    {
        double elapsed{0.0};
        Cost cost{kInfiniteCost};
        std::vector<State> path;
    };

    struct CostEvent
    {
        double time{0.0};
        Cost cost{kInfiniteCost};

        friend bool operator==(const CostEvent &, const CostEvent &) = default;
    };

    /// Outcome of a single planner run: the time-sorted, strictly improving solution costs.
    struct RunRecord
    {
        std::string planner;
        std::string problem;
        std::uint64_t seed{0};
        bool success{false};
        std::vector<CostEvent> events;
        std::optional<std::vector<State>> final_path;

        void add(const SolutionEvent &event)
        {
            events.push_back({event.elapsed, event.cost});
            final_path = event.path;
            success = true;
        }

        [[nodiscard]] Cost final_cost() const noexcept
        {
            return events.empty() ? kInfiniteCost : events.back().cost;
        }

        [[nodiscard]] double initial_time() const noexcept
        {
            return events.empty() ? std::numeric_limits<double>::infinity() : events.front().time;
        }

        /// Best cost reported at or before time t.
        [[nodiscard]] Cost cost_at(double t) const noexcept
        {
            Cost best = kInfiniteCost;
            for (const auto &e : events)
            {
                if (e.time > t)
                {
                    break;
                }
                best = e.cost;
            }
            return best;
        }

        friend bool operator==(const RunRecord &, const RunRecord &) = default;
    };

    /// Stopping rule for a planner run. The wall-clock budget is checked between iterations.
    struct Termination
    {
        double time_budget{1.0};
        std::optional<std::uint64_t> max_iterations;
    };

    class Stopwatch
    {
    public:
        Stopwatch() : start_(std::chrono::steady_clock::now())
        {
        }

        void reset()
        {
            start_ = std::chrono::steady_clock::now();
        }

        [[nodiscard]] double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_;
    };

    inline Cost path_length(const std::vector<State> &path)
    {
        Cost total = 0.0;
        for (std::size_t i = 1; i < path.size(); ++i)
        {
            total += distance(path[i - 1], path[i]);
        }
        return total;
    }
}  // namespace abit
