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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "abit/informed.hpp"
#include "abit/neighbor_index.hpp"
#include "abit/random.hpp"
#include "abit/rgg.hpp"
#include "abit/run_record.hpp"
#include "abit/world.hpp"

namespace abit
{
    struct RrtConfig
    {
        /// Maximum edge length; zero selects a default from the dimension.
        double range{0.0};
        double goal_bias{0.05};
        /// Rewiring radius constant (RRT* only).
        double eta{1.1};
        std::uint64_t seed{0};

        /// 0.5 up to R^4 and 1.25 from R^8, interpolated linearly in between.
        [[nodiscard]] double range_for(std::size_t n) const
        {
            if (range > 0.0)
            {
                return range;
            }
            if (n <= 4)
            {
                return 0.5;
            }
            if (n >= 8)
            {
                return 1.25;
            }
            return 0.5 + (1.25 - 0.5) * (static_cast<double>(n) - 4.0) / 4.0;
        }
    };

    namespace detail
    {
        inline State steer(std::span<const double> from, std::span<const double> to, double range)
        {
            const double d = distance(from, to);
            State x(to);
            if (d > range)
            {
                for (std::size_t i = 0; i < from.size(); ++i)
                {
                    x[i] = from[i] + (to[i] - from[i]) * (range / d);
                }
            }
            return x;
        }

        /// Tree with parent links and costs, indexed for neighbour queries.
        struct GrowingTree
        {
            explicit GrowingTree(std::size_t dimension) : store(dimension), index(store)
            {
            }

            StateId add(const State &x, StateId parent, Cost cost)
            {
                const StateId id = store.add(x);
                index.insert(id);
                parents.push_back(parent);
                costs.push_back(cost);
                children.emplace_back();
                if (parent != kNoState)
                {
                    children[parent].push_back(id);
                }
                return id;
            }

            [[nodiscard]] std::vector<State> path_to(StateId id) const
            {
                std::vector<State> path;
                for (StateId v = id; v != kNoState; v = parents[v])
                {
                    path.push_back(store.state(v));
                }
                std::reverse(path.begin(), path.end());
                return path;
            }

            StateStore store;
            NeighborIndex index;
            std::vector<StateId> parents;
            std::vector<Cost> costs;
            std::vector<std::vector<StateId>> children;
        };
    }  // namespace detail

    /// Bidirectional RRT with greedy connection. Stops at its first solution.
    inline RunRecord rrt_connect(const ProblemDefinition &problem, const RrtConfig &config,
                                 const Termination &termination)
    {
        problem.validate();
        if (problem.goals.size() != 1)
        {
            throw std::invalid_argument("rrt_connect: exactly one goal state is required.");
        }
        RunRecord record;
        record.planner = "rrtconnect";
        record.problem = problem.id;
        record.seed = config.seed;

        const std::size_t n = problem.dimension();
        const double range = config.range_for(n);
        const World &world = problem.world;
        RandomSource rng(config.seed);
        Stopwatch clock;

        detail::GrowingTree start_tree(n);
        detail::GrowingTree goal_tree(n);
        start_tree.add(problem.start, kNoState, 0.0);
        goal_tree.add(problem.goals.front(), kNoState, 0.0);

        enum class Extend
        {
            Trapped,
            Advanced,
            Reached
        };
        auto extend = [&](detail::GrowingTree &tree, std::span<const double> target, StateId &added)
        {
            const StateId near = tree.index.nearest(target);
            const auto from = tree.store[near];
            const double d = distance(from, target);
            if (d == 0.0)
            {
                added = near;
                return Extend::Reached;
            }
            State x = detail::steer(from, target, range);
            if (!world.is_segment_valid(from, x.coords()))
            {
                return Extend::Trapped;
            }
            added = tree.add(x, near, tree.costs[near] + distance(from, x.coords()));
            return d <= range ? Extend::Reached : Extend::Advanced;
        };

        detail::GrowingTree *a = &start_tree;
        detail::GrowingTree *b = &goal_tree;
        std::uint64_t iterations = 0;
        while (clock.seconds() < termination.time_budget)
        {
            if (termination.max_iterations && iterations >= *termination.max_iterations)
            {
                break;
            }
            ++iterations;
            const State target = sample_uniform(world.bounds(), rng);
            StateId added_a = kNoState;
            if (extend(*a, target.coords(), added_a) != Extend::Trapped)
            {
                const State bridge = a->store.state(added_a);
                StateId added_b = kNoState;
                Extend status;
                do
                {
                    status = extend(*b, bridge.coords(), added_b);
                } while (status == Extend::Advanced);

                if (status == Extend::Reached)
                {
                    auto from_a = a->path_to(added_a);
                    auto from_b = b->path_to(added_b);
                    if (a == &goal_tree)
                    {
                        std::swap(from_a, from_b);
                    }
                    // Both halves end at the shared bridge state.
                    from_b.pop_back();
                    std::reverse(from_b.begin(), from_b.end());
                    from_a.insert(from_a.end(), from_b.begin(), from_b.end());
                    SolutionEvent event;
                    event.elapsed = clock.seconds();
                    event.path = std::move(from_a);
                    event.cost = path_length(event.path);
                    record.add(event);
                    return record;
                }
            }
            std::swap(a, b);
        }
        return record;
    }

    /// RRT* with goal biasing and radius-based rewiring over the whole (uninformed) space.
    inline RunRecord rrt_star(const ProblemDefinition &problem, const RrtConfig &config,
                              const Termination &termination,
                              const std::function<void(const SolutionEvent &)> &on_event = {})
    {
        problem.validate();
        RunRecord record;
        record.planner = "rrtstar";
        record.problem = problem.id;
        record.seed = config.seed;

        const std::size_t n = problem.dimension();
        const double range = config.range_for(n);
        const World &world = problem.world;
        const double measure = world.bounds().measure();
        const Cost c_min = problem.min_cost();
        RandomSource rng(config.seed);
        Stopwatch clock;

        detail::GrowingTree tree(n);
        tree.add(problem.start, kNoState, 0.0);
        std::vector<StateId> goal_vertex(problem.goals.size(), kNoState);
        Cost best = kInfiniteCost;

        std::vector<StateId> neighbors;
        std::vector<StateId> stack;
        std::uint64_t iterations = 0;
        while (clock.seconds() < termination.time_budget)
        {
            if (termination.max_iterations && iterations >= *termination.max_iterations)
            {
                break;
            }
            ++iterations;

            std::size_t goal_index = problem.goals.size();
            State target(n);
            if (rng.uniform01() < config.goal_bias)
            {
                goal_index = static_cast<std::size_t>(rng.uniform_index(problem.goals.size()));
                target = problem.goals[goal_index];
            }
            else
            {
                target = sample_uniform(world.bounds(), rng);
            }

            const StateId near = tree.index.nearest(target.coords());
            const auto near_x = tree.store[near];
            const double d = distance(near_x, target.coords());
            if (d == 0.0)
            {
                continue;
            }
            const State x = detail::steer(near_x, target.coords(), range);
            if (!world.is_state_valid(x) || !world.is_segment_valid(near_x, x.coords()))
            {
                continue;
            }
            const bool reaches_goal = goal_index < problem.goals.size() && d <= range;

            const std::size_t card = tree.store.size() + 1;
            const double radius = std::min(range, connection_radius(std::max<std::size_t>(card, 2), measure, n,
                                                                    config.eta));
            tree.index.radius_query(x.coords(), radius, neighbors);

            StateId parent = near;
            Cost cost = tree.costs[near] + distance(near_x, x.coords());
            // Cheapest valid parent: visit candidates by tentative cost and stop at the first
            // collision-free one.
            std::vector<std::pair<Cost, StateId>> candidates;
            candidates.reserve(neighbors.size());
            for (StateId v : neighbors)
            {
                candidates.emplace_back(tree.costs[v] + distance(tree.store[v], x.coords()), v);
            }
            std::sort(candidates.begin(), candidates.end());
            for (const auto &[candidate_cost, v] : candidates)
            {
                if (!(candidate_cost < cost))
                {
                    break;
                }
                if (world.is_segment_valid(tree.store[v], x.coords()))
                {
                    cost = candidate_cost;
                    parent = v;
                    break;
                }
            }

            const StateId id = tree.add(x, parent, cost);
            if (reaches_goal && goal_vertex[goal_index] == kNoState)
            {
                goal_vertex[goal_index] = id;
            }

            for (StateId v : neighbors)
            {
                if (v == parent)
                {
                    continue;
                }
                const Cost through = cost + distance(x.coords(), tree.store[v]);
                if (through < tree.costs[v] && world.is_segment_valid(x.coords(), tree.store[v]))
                {
                    auto &siblings = tree.children[tree.parents[v]];
                    siblings.erase(std::remove(siblings.begin(), siblings.end(), v), siblings.end());
                    tree.parents[v] = id;
                    tree.children[id].push_back(v);
                    tree.costs[v] = through;
                    stack.assign(tree.children[v].begin(), tree.children[v].end());
                    while (!stack.empty())
                    {
                        const StateId w = stack.back();
                        stack.pop_back();
                        tree.costs[w] =
                            tree.costs[tree.parents[w]] + distance(tree.store[tree.parents[w]], tree.store[w]);
                        stack.insert(stack.end(), tree.children[w].begin(), tree.children[w].end());
                    }
                }
            }

            Cost current = kInfiniteCost;
            StateId current_goal = kNoState;
            for (StateId g : goal_vertex)
            {
                if (g != kNoState && tree.costs[g] < current)
                {
                    current = tree.costs[g];
                    current_goal = g;
                }
            }
            if (current < best)
            {
                best = current;
                SolutionEvent event;
                event.elapsed = clock.seconds();
                event.cost = current;
                event.path = tree.path_to(current_goal);
                record.add(event);
                if (on_event)
                {
                    on_event(event);
                }
                if (best <= c_min)
                {
                    break;
                }
            }
        }
        return record;
    }
}  // namespace abit
