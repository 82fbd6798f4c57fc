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
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abit/box.hpp"
#include "abit/random.hpp"
#include "abit/state.hpp"

namespace abit
{
    /// Bounded space with closed axis-aligned box obstacles.
    class World
    {
    public:
        World() = default;

        World(Box bounds, std::vector<Box> obstacles) : bounds_(std::move(bounds)), obstacles_(std::move(obstacles))
        {
            for (std::size_t i = 0; i < bounds_.dimension(); ++i)
            {
                if (!(bounds_.lower[i] < bounds_.upper[i]))
                {
                    throw std::invalid_argument("World: bounds are degenerate.");
                }
            }
            for (const auto &obstacle : obstacles_)
            {
                require_same_dimension(obstacle.dimension(), bounds_.dimension(), "World obstacle");
                if (!bounds_.intersects(obstacle))
                {
                    throw std::invalid_argument("World: obstacle lies entirely outside the bounds.");
                }
            }
        }

        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return bounds_.dimension();
        }
        [[nodiscard]] const Box &bounds() const noexcept
        {
            return bounds_;
        }
        [[nodiscard]] const std::vector<Box> &obstacles() const noexcept
        {
            return obstacles_;
        }

        /// Inside the bounds and outside every obstacle. Obstacle boundaries are in collision.
        [[nodiscard]] bool is_state_valid(std::span<const double> x) const
        {
            require_same_dimension(x.size(), dimension(), "is_state_valid");
            if (!bounds_.contains(x))
            {
                return false;
            }
            return std::none_of(obstacles_.begin(), obstacles_.end(),
                                [&](const Box &box) { return box.contains(x); });
        }

        [[nodiscard]] bool is_state_valid(const State &x) const
        {
            return is_state_valid(x.coords());
        }

        /// Exact check of the closed segment [a, b]. The bounds are convex, so it suffices
        /// that both endpoints are inside them.
        [[nodiscard]] bool is_segment_valid(std::span<const double> a, std::span<const double> b) const
        {
            require_same_dimension(a.size(), dimension(), "is_segment_valid");
            require_same_dimension(b.size(), dimension(), "is_segment_valid");
            if (!bounds_.contains(a) || !bounds_.contains(b))
            {
                return false;
            }
            return std::none_of(obstacles_.begin(), obstacles_.end(),
                                [&](const Box &box) { return box.intersects_segment(a, b); });
        }

        [[nodiscard]] bool is_segment_valid(const State &a, const State &b) const
        {
            return is_segment_valid(a.coords(), b.coords());
        }

        /// True edge cost for the path-length objective: the Euclidean length when the
        /// segment is collision free, infinity otherwise.
        [[nodiscard]] Cost edge_cost(std::span<const double> a, std::span<const double> b) const
        {
            return is_segment_valid(a, b) ? distance(a, b) : kInfiniteCost;
        }

        [[nodiscard]] Cost edge_cost(const State &a, const State &b) const
        {
            return edge_cost(a.coords(), b.coords());
        }

        friend bool operator==(const World &, const World &) = default;

    private:
        Box bounds_;
        std::vector<Box> obstacles_;
    };

    struct ProblemDefinition
    {
        std::string id;
        World world;
        State start;
        std::vector<State> goals;

        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return world.dimension();
        }

        /// Throws if the start or any goal is invalid or the dimensions disagree.
        void validate() const
        {
            require_same_dimension(start.dimension(), dimension(), "ProblemDefinition start");
            if (!world.is_state_valid(start))
            {
                throw std::invalid_argument("ProblemDefinition: start state is invalid.");
            }
            if (goals.empty())
            {
                throw std::invalid_argument("ProblemDefinition: at least one goal is required.");
            }
            for (const auto &goal : goals)
            {
                require_same_dimension(goal.dimension(), dimension(), "ProblemDefinition goal");
                if (!world.is_state_valid(goal))
                {
                    throw std::invalid_argument("ProblemDefinition: goal state is invalid.");
                }
            }
        }

        /// Straight-line lower bound on the cost of any solution.
        [[nodiscard]] Cost min_cost() const
        {
            Cost best = kInfiniteCost;
            for (const auto &goal : goals)
            {
                best = std::min(best, distance(start, goal));
            }
            return best;
        }
    };

    /// Euclidean admissible estimates for the path-length objective.
    class Heuristics
    {
    public:
        Heuristics() = default;

        explicit Heuristics(const ProblemDefinition &problem) : start_(problem.start), goals_(problem.goals)
        {
        }

        /// Cost-to-come estimate.
        [[nodiscard]] Cost g_hat(std::span<const double> x) const noexcept
        {
            return distance(start_.coords(), x);
        }

        /// Cost-to-go estimate (to the nearest goal).
        [[nodiscard]] Cost h_hat(std::span<const double> x) const noexcept
        {
            Cost best = kInfiniteCost;
            for (const auto &goal : goals_)
            {
                best = std::min(best, distance(x, goal.coords()));
            }
            return best;
        }

        [[nodiscard]] Cost c_hat(std::span<const double> a, std::span<const double> b) const noexcept
        {
            return distance(a, b);
        }

        [[nodiscard]] Cost f_hat(std::span<const double> x) const noexcept
        {
            return g_hat(x) + h_hat(x);
        }

    private:
        State start_;
        std::vector<State> goals_;
    };

    namespace detail
    {
        inline State axis_point(std::size_t n, double first)
        {
            State x(n);
            x[0] = first;
            return x;
        }
    }  // namespace detail

    /// Wall with a narrow gap in [-1, 1]^n. The wall occupies x1 in [-0.125, 0.125] and
    /// x2 in [-1, 0.7] except for the gap x2 in (0.33, 0.36); it spans the full extent of
    /// every further dimension.
    inline ProblemDefinition make_wall_gap(std::size_t n)
    {
        if (n < 2)
        {
            throw std::invalid_argument("make_wall_gap: dimension must be at least 2.");
        }
        const Box bounds = Box::cube(n, -1.0, 1.0);

        auto wall_piece = [&](double x2_lo, double x2_hi)
        {
            State lo = bounds.lower;
            State hi = bounds.upper;
            lo[0] = -0.125;
            hi[0] = 0.125;
            lo[1] = x2_lo;
            hi[1] = x2_hi;
            return Box(std::move(lo), std::move(hi));
        };

        ProblemDefinition problem;
        problem.id = "wall_gap_" + std::to_string(n) + "d";
        problem.world = World(bounds, {wall_piece(-1.0, 0.33), wall_piece(0.36, 0.7)});
        problem.start = detail::axis_point(n, -0.5);
        problem.goals = {detail::axis_point(n, 0.5)};
        problem.validate();
        return problem;
    }

    struct RandomRectanglesConfig
    {
        std::size_t count{20};
        double width_min{0.15};
        double width_max{0.5};
        std::size_t max_attempts_per_box{10000};
    };

    /// Randomly placed axis-aligned boxes in [-1, 1]^n. Boxes that would cover the start or
    /// the goal are redrawn.
    inline ProblemDefinition make_random_rectangles(std::size_t n, const RandomRectanglesConfig &config,
                                                    RandomSource &rng)
    {
        if (n < 1)
        {
            throw std::invalid_argument("make_random_rectangles: dimension must be at least 1.");
        }
        if (!(config.width_min > 0.0) || config.width_min > config.width_max)
        {
            throw std::invalid_argument("make_random_rectangles: need 0 < width_min <= width_max.");
        }
        const Box bounds = Box::cube(n, -1.0, 1.0);
        const State start = detail::axis_point(n, -0.5);
        const State goal = detail::axis_point(n, 0.5);

        std::vector<Box> obstacles;
        obstacles.reserve(config.count);
        for (std::size_t k = 0; k < config.count; ++k)
        {
            bool placed = false;
            for (std::size_t attempt = 0; attempt < config.max_attempts_per_box && !placed; ++attempt)
            {
                State lo(n);
                State hi(n);
                for (std::size_t i = 0; i < n; ++i)
                {
                    const double centre = rng.uniform(bounds.lower[i], bounds.upper[i]);
                    const double half = 0.5 * rng.uniform(config.width_min, config.width_max);
                    lo[i] = centre - half;
                    hi[i] = centre + half;
                }
                Box box(std::move(lo), std::move(hi));
                if (box.contains(start.coords()) || box.contains(goal.coords()))
                {
                    continue;
                }
                obstacles.push_back(std::move(box));
                placed = true;
            }
            if (!placed)
            {
                throw std::runtime_error("make_random_rectangles: could not place obstacle " + std::to_string(k) +
                                         " without covering the start or goal.");
            }
        }

        ProblemDefinition problem;
        problem.id = "random_rects_" + std::to_string(n) + "d_s" + std::to_string(rng.seed());
        problem.world = World(bounds, std::move(obstacles));
        problem.start = start;
        problem.goals = {goal};
        problem.validate();
        return problem;
    }

    inline ProblemDefinition make_random_rectangles(std::size_t n, std::size_t count,
                                                    std::pair<double, double> width_range, RandomSource &rng)
    {
        RandomRectanglesConfig config;
        config.count = count;
        config.width_min = width_range.first;
        config.width_max = width_range.second;
        return make_random_rectangles(n, config, rng);
    }

    /// Obstacle-free [-1, 1]^n with the usual start and goal.
    inline ProblemDefinition make_empty(std::size_t n)
    {
        ProblemDefinition problem;
        problem.id = "empty_" + std::to_string(n) + "d";
        problem.world = World(Box::cube(n, -1.0, 1.0), {});
        problem.start = detail::axis_point(n, -0.5);
        problem.goals = {detail::axis_point(n, 0.5)};
        problem.validate();
        return problem;
    }
}  // namespace abit
