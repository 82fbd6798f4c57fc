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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abit/edge_queue.hpp"
#include "abit/neighbor_index.hpp"
#include "abit/policies.hpp"
#include "abit/random.hpp"
#include "abit/rgg.hpp"
#include "abit/run_record.hpp"
#include "abit/search_tree.hpp"
#include "abit/state.hpp"
#include "abit/world.hpp"

namespace abit
{
    struct AbitConfig
    {
        RggConfig rgg{};
        bool pruning{false};
        std::size_t searches_per_batch{2};
        std::string inflation_schedule{"paper-default"};
        std::string truncation_schedule{"paper-default"};
        std::uint64_t seed{0};

        [[nodiscard]] PolicySchedule schedule() const
        {
            if (searches_per_batch < 1)
            {
                throw std::invalid_argument("AbitConfig: searches_per_batch must be at least 1.");
            }
            return {PolicySchedule::parse(inflation_schedule, true), PolicySchedule::parse(truncation_schedule, false),
                    searches_per_batch};
        }
    };

    /// Candidate edge produced by expand().
    struct Edge
    {
        StateId parent;
        StateId child;

        friend bool operator==(const Edge &, const Edge &) = default;
    };

    /// Whether an edge whose admissible solution estimate is `estimate` may still be processed
    /// by a search truncated with factor `truncation` while the best solution costs c_best.
    inline bool within_truncation(double truncation, Cost estimate, Cost c_best) noexcept
    {
        return inflate(truncation, estimate) <= c_best;
    }

    /// Everything the search carries between iterations.
    struct PlannerState
    {
        explicit PlannerState(std::size_t dimension) : store(dimension), index(store)
        {
        }

        StateStore store;
        SearchTree tree;
        SampleSet samples;
        EdgeQueue queue;
        NeighborIndex index;

        std::vector<StateId> goal_ids;
        std::vector<char> is_goal;

        std::vector<char> closed;
        std::vector<StateId> closed_list;
        std::vector<char> inconsistent;
        std::vector<StateId> inconsistent_list;

        double inflation{kInfiniteCost};
        double truncation{kInfiniteCost};
        bool search_finished{false};
        std::size_t searches_this_batch{0};
        std::size_t batches{0};
        double radius{kInfiniteCost};
        std::size_t q{0};

        Cost best_cost{kInfiniteCost};
        StateId best_goal{kNoState};

        [[nodiscard]] bool is_closed(StateId id) const noexcept
        {
            return id < closed.size() && closed[id] != 0;
        }

        [[nodiscard]] bool is_inconsistent(StateId id) const noexcept
        {
            return id < inconsistent.size() && inconsistent[id] != 0;
        }
    };

    /// Anytime planner that searches an increasingly dense, informed random geometric graph
    /// with an inflated, truncated and lazily collision-checked edge-queue search, repairing
    /// earlier searches through the set of inconsistent vertices.
    class AbitStar
    {
    public:
        using EventCallback = std::function<void(const SolutionEvent &)>;

        AbitStar(ProblemDefinition problem, AbitConfig config)
          : problem_(std::move(problem))
          , config_(std::move(config))
          , schedule_(config_.schedule())
          , heuristics_(problem_)
          , rng_(config_.seed)
          , state_(problem_.dimension())
        {
            problem_.validate();
            config_.rgg.validate();
            c_min_ = problem_.min_cost();
            initialize();
        }

        [[nodiscard]] const PlannerState &state() const noexcept
        {
            return state_;
        }

        [[nodiscard]] const ProblemDefinition &problem() const noexcept
        {
            return problem_;
        }

        [[nodiscard]] const AbitConfig &config() const noexcept
        {
            return config_;
        }

        [[nodiscard]] Cost best_cost() const noexcept
        {
            return state_.best_cost;
        }

        [[nodiscard]] std::uint64_t iterations() const noexcept
        {
            return iterations_;
        }

        [[nodiscard]] std::uint64_t collision_checks() const noexcept
        {
            return collision_checks_;
        }

        /// Queue entry taken by the most recent iterate(); empty if the queue was exhausted.
        [[nodiscard]] const std::optional<QueueEntry> &last_popped() const noexcept
        {
            return last_popped_;
        }

        [[nodiscard]] Cost g_hat(StateId id) const noexcept
        {
            return g_hat_[id];
        }

        [[nodiscard]] Cost h_hat(StateId id) const noexcept
        {
            return h_hat_[id];
        }

        /// Edges leaving each source: its tree edges, plus every edge to a state of the graph
        /// within `radius` that could both improve the current solution and improve the
        /// child's cost-to-come, according to the admissible estimates.
        [[nodiscard]] std::vector<Edge> expand(std::span<const StateId> sources, double radius) const
        {
            std::vector<Edge> out;
            std::vector<StateId> neighbors;
            for (StateId parent : sources)
            {
                if (!state_.tree.contains(parent))
                {
                    continue;
                }
                for (StateId child : state_.tree.children(parent))
                {
                    out.push_back({parent, child});
                }

                if (std::isinf(radius))
                {
                    neighbors = state_.tree.vertices();
                    neighbors.insert(neighbors.end(), state_.samples.ids().begin(), state_.samples.ids().end());
                    std::erase(neighbors, parent);
                }
                else
                {
                    state_.index.radius_query(state_.store[parent], radius, neighbors, parent);
                }

                const Cost g_hat_parent = g_hat_[parent];
                for (StateId child : neighbors)
                {
                    if (state_.tree.parent(child) == parent)
                    {
                        continue;
                    }
                    const Cost c_hat = heuristics_.c_hat(state_.store[parent], state_.store[child]);
                    if (g_hat_parent + c_hat + h_hat_[child] <= state_.best_cost &&
                        g_hat_parent + c_hat <= state_.tree.g(child))
                    {
                        out.push_back({parent, child});
                    }
                }
            }
            return out;
        }

        /// One pass of the search loop: pops the best edge and processes it. Returns an event
        /// when the best solution strictly improved.
        std::optional<SolutionEvent> iterate()
        {
            ++iterations_;
            auto &tree = state_.tree;
            const auto entry = state_.queue.pop_best(
                [&](const QueueEntry &e) { return tree.contains(e.parent) && e.key2 == tree.g(e.parent); });

            last_popped_ = entry;
            if (!entry)
            {
                mark_search_finished();
                return std::nullopt;
            }
            const StateId parent = entry->parent;
            const StateId child = entry->child;
            std::erase(pending_[parent], child);

            if (tree.has_edge(parent, child))
            {
                expand_or_mark_inconsistent(child);
                return std::nullopt;
            }

            const Cost g_parent = tree.g(parent);
            const Cost c_hat = entry->c_hat;
            if (!within_truncation(state_.truncation, g_parent + c_hat + h_hat_[child], state_.best_cost))
            {
                mark_search_finished();
                return std::nullopt;
            }
            if (!(g_parent + c_hat < tree.g(child)))
            {
                return std::nullopt;
            }
            const Cost cost = true_cost(parent, child);
            if (!(g_parent + cost + h_hat_[child] < state_.best_cost) || !(g_parent + cost < tree.g(child)))
            {
                return std::nullopt;
            }

            if (!tree.contains(child))
            {
                state_.samples.erase(child);
            }
            changed_.clear();
            tree.connect(parent, child, cost, changed_);
            bool goal_changed = false;
            for (StateId v : changed_)
            {
                requeue_pending(v);
                goal_changed = goal_changed || state_.is_goal[v] != 0;
            }
            expand_or_mark_inconsistent(child);

            if (goal_changed)
            {
                return update_best_solution();
            }
            return std::nullopt;
        }

        [[nodiscard]] bool update_approximation_needed() const noexcept
        {
            return state_.searches_this_batch >= schedule_.searches_per_batch;
        }

        /// Factors for the next search, given the number of searches already completed on
        /// the current RGG.
        [[nodiscard]] std::pair<double, double> next_factors() const
        {
            const std::size_t search = update_approximation_needed() ? 0 : state_.searches_this_batch;
            return {schedule_.inflation(search, state_.q), schedule_.truncation(search, state_.q)};
        }

        /// Starts the next search once the previous one is finished: either densifies the RGG
        /// and restarts the queue from the start state, or re-expands the inconsistent vertices.
        void update()
        {
            auto &s = state_;
            if (update_approximation_needed())
            {
                if (config_.pruning)
                {
                    prune(s.tree, s.samples, s.store, heuristics_, s.best_cost);
                }
                const auto added =
                    add_batch(s.samples, s.store, s.tree, problem_, s.goal_ids, s.best_cost, config_.rgg, rng_);
                grow_caches();
                (void)added;
                s.q = s.tree.size() + s.samples.size();
                s.radius = connection_radius(s.q, InformedRegion(problem_, s.best_cost).measure(),
                                             problem_.dimension(), config_.rgg.eta);
                rebuild_index();
                s.searches_this_batch = 0;
                ++s.batches;

                s.queue.clear();
                for (auto &children : pending_)
                {
                    children.clear();
                }
                set_factors();
                const StateId start = s.tree.root();
                enqueue(expand(std::span<const StateId>(&start, 1), s.radius));
            }
            else
            {
                set_factors();
                const std::vector<StateId> sources = s.inconsistent_list;
                enqueue(expand(sources, s.radius));
            }
            for (StateId v : s.closed_list)
            {
                s.closed[v] = 0;
            }
            s.closed_list.clear();
            for (StateId v : s.inconsistent_list)
            {
                s.inconsistent[v] = 0;
            }
            s.inconsistent_list.clear();
            s.search_finished = false;
        }

        /// Either one search iteration or, if the search is finished, the update step.
        std::optional<SolutionEvent> step()
        {
            if (state_.search_finished)
            {
                update();
                return std::nullopt;
            }
            return iterate();
        }

        /// Runs until the budget is exhausted or a solution matching the straight-line lower
        /// bound is found.
        RunRecord solve(const Termination &termination, const EventCallback &on_event = {})
        {
            RunRecord record;
            record.planner = "abit";
            record.problem = problem_.id;
            record.seed = config_.seed;
            stopwatch_.reset();
            std::uint64_t steps = 0;
            while (stopwatch_.seconds() < termination.time_budget)
            {
                if (termination.max_iterations && steps >= *termination.max_iterations)
                {
                    break;
                }
                ++steps;
                if (auto event = step())
                {
                    record.add(*event);
                    if (on_event)
                    {
                        on_event(*event);
                    }
                }
                if (state_.best_cost <= c_min_)
                {
                    break;
                }
            }
            return record;
        }

        [[nodiscard]] std::vector<State> best_path() const
        {
            std::vector<State> path;
            for (StateId v : state_.tree.path_to(state_.best_goal))
            {
                path.push_back(state_.store.state(v));
            }
            return path;
        }

    private:
        void initialize()
        {
            auto &s = state_;
            const StateId start = s.store.add(problem_.start);
            s.tree.set_root(start);
            for (const auto &goal : problem_.goals)
            {
                const StateId id = s.store.add(goal);
                s.goal_ids.push_back(id);
                s.samples.insert(id);
            }
            grow_caches();
            s.q = s.tree.size() + s.samples.size();
            s.inflation = kInfiniteCost;
            s.truncation = kInfiniteCost;
            s.queue.set_inflation(s.inflation);
            s.radius = kInfiniteCost;
            // The initial graph counts as fully searched once its single search ends.
            s.searches_this_batch = schedule_.searches_per_batch - 1;
            enqueue(expand(std::span<const StateId>(&start, 1), kInfiniteCost));
        }

        void grow_caches()
        {
            auto &s = state_;
            const std::size_t count = s.store.size();
            for (std::size_t id = g_hat_.size(); id < count; ++id)
            {
                const auto x = s.store[static_cast<StateId>(id)];
                g_hat_.push_back(heuristics_.g_hat(x));
                h_hat_.push_back(heuristics_.h_hat(x));
            }
            s.tree.ensure(count - 1);
            s.closed.resize(count, 0);
            s.inconsistent.resize(count, 0);
            s.is_goal.resize(count, 0);
            for (StateId goal : s.goal_ids)
            {
                s.is_goal[goal] = 1;
            }
            pending_.resize(count);
        }

        void rebuild_index()
        {
            auto ids = state_.tree.vertices();
            ids.insert(ids.end(), state_.samples.ids().begin(), state_.samples.ids().end());
            state_.index.build(std::move(ids));
        }

        void set_factors()
        {
            const auto [inflation, truncation] = next_factors();
            state_.inflation = inflation;
            state_.truncation = truncation;
            state_.queue.set_inflation(inflation);
        }

        void enqueue(const std::vector<Edge> &edges)
        {
            for (const Edge &edge : edges)
            {
                auto &pending = pending_[edge.parent];
                if (std::find(pending.begin(), pending.end(), edge.child) != pending.end())
                {
                    continue;
                }
                pending.push_back(edge.child);
                push_entry(edge.parent, edge.child);
            }
        }

        void push_entry(StateId parent, StateId child)
        {
            state_.queue.push(parent, child, state_.tree.g(parent),
                              heuristics_.c_hat(state_.store[parent], state_.store[child]), h_hat_[child]);
        }

        /// A vertex's cost-to-come dropped: its queued outgoing edges need current keys.
        void requeue_pending(StateId v)
        {
            for (StateId child : pending_[v])
            {
                push_entry(v, child);
            }
        }

        void expand_or_mark_inconsistent(StateId v)
        {
            auto &s = state_;
            if (s.closed[v] != 0)
            {
                if (s.inconsistent[v] == 0)
                {
                    s.inconsistent[v] = 1;
                    s.inconsistent_list.push_back(v);
                }
                return;
            }
            enqueue(expand(std::span<const StateId>(&v, 1), s.radius));
            s.closed[v] = 1;
            s.closed_list.push_back(v);
        }

        void mark_search_finished()
        {
            state_.search_finished = true;
            ++state_.searches_this_batch;
        }

        Cost true_cost(StateId a, StateId b)
        {
            const std::uint64_t key = a < b ? (static_cast<std::uint64_t>(a) << 32) | b
                                            : (static_cast<std::uint64_t>(b) << 32) | a;
            const auto it = edge_cache_.find(key);
            if (it != edge_cache_.end())
            {
                return it->second;
            }
            ++collision_checks_;
            const Cost cost = problem_.world.edge_cost(state_.store[a], state_.store[b]);
            edge_cache_.emplace(key, cost);
            return cost;
        }

        std::optional<SolutionEvent> update_best_solution()
        {
            auto &s = state_;
            Cost best = kInfiniteCost;
            StateId best_goal = kNoState;
            for (StateId goal : s.goal_ids)
            {
                if (s.tree.g(goal) < best)
                {
                    best = s.tree.g(goal);
                    best_goal = goal;
                }
            }
            if (!(best < s.best_cost))
            {
                return std::nullopt;
            }
            s.best_cost = best;
            s.best_goal = best_goal;
            SolutionEvent event;
            event.elapsed = stopwatch_.seconds();
            event.cost = best;
            event.path = best_path();
            return event;
        }

        ProblemDefinition problem_;
        AbitConfig config_;
        PolicySchedule schedule_;
        Heuristics heuristics_;
        RandomSource rng_;
        PlannerState state_;
        Cost c_min_{0.0};

        std::vector<Cost> g_hat_;
        std::vector<Cost> h_hat_;
        std::vector<std::vector<StateId>> pending_;
        std::vector<StateId> changed_;
        std::unordered_map<std::uint64_t, Cost> edge_cache_;
        std::uint64_t iterations_{0};
        std::optional<QueueEntry> last_popped_;
        std::uint64_t collision_checks_{0};
        Stopwatch stopwatch_;
    };
}  // namespace abit
