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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "abit/informed.hpp"
#include "abit/search_tree.hpp"
#include "abit/state.hpp"
#include "abit/world.hpp"

namespace abit
{
    /// States sampled into the graph that are not (yet) vertices of the search tree.
    class SampleSet
    {
    public:
        [[nodiscard]] bool contains(StateId id) const noexcept
        {
            return id < position_.size() && position_[id] != kAbsent;
        }

        [[nodiscard]] std::size_t size() const noexcept
        {
            return ids_.size();
        }

        [[nodiscard]] bool empty() const noexcept
        {
            return ids_.empty();
        }

        /// Insertion order is not preserved across erase().
        [[nodiscard]] const std::vector<StateId> &ids() const noexcept
        {
            return ids_;
        }

        void insert(StateId id)
        {
            if (id >= position_.size())
            {
                position_.resize(static_cast<std::size_t>(id) + 1, kAbsent);
            }
            if (position_[id] != kAbsent)
            {
                return;
            }
            position_[id] = ids_.size();
            ids_.push_back(id);
        }

        void erase(StateId id)
        {
            if (!contains(id))
            {
                return;
            }
            const std::size_t pos = position_[id];
            const StateId last = ids_.back();
            ids_[pos] = last;
            position_[last] = pos;
            ids_.pop_back();
            position_[id] = kAbsent;
        }

    private:
        static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

        std::vector<StateId> ids_;
        std::vector<std::size_t> position_;
    };

    struct RggConfig
    {
        /// Samples per batch.
        std::size_t batch_size{100};
        /// Radius tuning constant; must exceed one.
        double eta{1.1};

        void validate() const
        {
            if (batch_size < 1)
            {
                throw std::invalid_argument("RggConfig: batch size must be at least 1.");
            }
            if (!(eta > 1.0))
            {
                throw std::invalid_argument("RggConfig: eta must be greater than 1.");
            }
        }
    };

    /// r(q) = eta * (2 (1 + 1/n) (measure / zeta_n) (log q / q))^(1/n).
    inline double connection_radius(std::size_t q, double measure, std::size_t n, double eta)
    {
        if (q < 2)
        {
            throw std::invalid_argument("connection_radius: need at least two states.");
        }
        if (n == 0)
        {
            throw std::invalid_argument("connection_radius: dimension must be positive.");
        }
        const double dn = static_cast<double>(n);
        const double dq = static_cast<double>(q);
        const double base = 2.0 * (1.0 + 1.0 / dn) * (measure / unit_ball_measure(n)) * (std::log(dq) / dq);
        return eta * std::pow(base, 1.0 / dn);
    }

    inline double connection_radius(std::size_t q, const InformedSet &set, const RggConfig &config)
    {
        return connection_radius(q, informed_measure(set), set.dimension(), config.eta);
    }

    /// Informed-set view of a (possibly multi-goal) problem at solution cost c_best.
    class InformedRegion
    {
    public:
        InformedRegion(const ProblemDefinition &problem, Cost c_best)
        {
            sets_.reserve(problem.goals.size());
            for (const auto &goal : problem.goals)
            {
                sets_.emplace_back(problem.start, goal, problem.world.bounds(),
                                   std::max(c_best, distance(problem.start, goal)));
            }
            c_best_ = c_best;
            bounds_ = problem.world.bounds();
        }

        /// Box measure without a solution; otherwise the summed hyperspheroid measures clamped
        /// to the box (exact for a single goal, an upper bound for several).
        [[nodiscard]] double measure() const
        {
            if (sets_.size() == 1)
            {
                return informed_measure(sets_.front());
            }
            if (std::isinf(c_best_))
            {
                return bounds_.measure();
            }
            double total = 0.0;
            for (const auto &set : sets_)
            {
                total += informed_measure(set);
            }
            return std::min(total, bounds_.measure());
        }

        [[nodiscard]] bool contains(std::span<const double> x) const
        {
            for (const auto &set : sets_)
            {
                if (set.contains(x))
                {
                    return true;
                }
            }
            return false;
        }

        State sample(RandomSource &rng) const
        {
            if (sets_.size() == 1)
            {
                return sample_informed(sets_.front(), rng);
            }
            // Union of spheroids: rejection from the bounds stays uniform.
            while (true)
            {
                State x = sample_uniform(bounds_, rng);
                if (std::isinf(c_best_) || contains(x.coords()))
                {
                    return x;
                }
            }
        }

    private:
        std::vector<InformedSet> sets_;
        Box bounds_;
        Cost c_best_{kInfiniteCost};
    };

    /// Adds `config.batch_size` valid informed samples to the store and the sample set, and
    /// re-inserts goals that are neither vertices nor samples but could still improve the
    /// solution. Returns the ids added.
    inline std::vector<StateId> add_batch(SampleSet &samples, StateStore &store, const SearchTree &tree,
                                          const ProblemDefinition &problem, const std::vector<StateId> &goal_ids,
                                          Cost c_best, const RggConfig &config, RandomSource &rng)
    {
        std::vector<StateId> added;
        added.reserve(config.batch_size + goal_ids.size());
        const Heuristics heuristics(problem);
        for (StateId goal : goal_ids)
        {
            if (!tree.contains(goal) && !samples.contains(goal) && heuristics.f_hat(store[goal]) < c_best)
            {
                samples.insert(goal);
                added.push_back(goal);
            }
        }

        const InformedRegion region(problem, c_best);
        std::size_t count = 0;
        while (count < config.batch_size)
        {
            State x = region.sample(rng);
            if (!problem.world.is_state_valid(x))
            {
                continue;
            }
            const StateId id = store.add(x);
            samples.insert(id);
            added.push_back(id);
            ++count;
        }
        return added;
    }

    struct PruneResult
    {
        /// Samples and vertices discarded from the graph.
        std::vector<StateId> removed;
        /// Vertices moved back into the sample set.
        std::vector<StateId> demoted;
    };

    /// Removes states that cannot improve a solution of cost c_best.
    ///
    /// Samples with f_hat >= c_best are dropped; vertices with f_hat > c_best are dropped
    /// together with their edges. Surviving descendants of a dropped vertex are demoted to
    /// samples (or dropped when f_hat >= c_best), so every remaining non-root vertex keeps a
    /// path to the root.
    inline PruneResult prune(SearchTree &tree, SampleSet &samples, const StateStore &store,
                             const Heuristics &heuristics, Cost c_best)
    {
        PruneResult result;
        if (std::isinf(c_best))
        {
            return result;
        }

        std::vector<StateId> doomed_samples;
        for (StateId id : samples.ids())
        {
            if (heuristics.f_hat(store[id]) >= c_best)
            {
                doomed_samples.push_back(id);
            }
        }
        for (StateId id : doomed_samples)
        {
            samples.erase(id);
            result.removed.push_back(id);
        }

        std::vector<char> doomed(tree.capacity(), 0);
        const auto vertices = tree.vertices();
        for (StateId v : vertices)
        {
            if (v != tree.root() && heuristics.f_hat(store[v]) > c_best)
            {
                doomed[v] = 1;
            }
        }

        std::vector<StateId> pruned;
        for (StateId v : vertices)
        {
            if (doomed[v] != 0 && tree.contains(v) && (tree.parent(v) == kNoState || doomed[tree.parent(v)] == 0))
            {
                tree.remove_subtree(v, pruned);
            }
        }
        for (StateId v : pruned)
        {
            if (doomed[v] != 0 || heuristics.f_hat(store[v]) >= c_best)
            {
                result.removed.push_back(v);
            }
            else
            {
                samples.insert(v);
                result.demoted.push_back(v);
            }
        }
        return result;
    }
}  // namespace abit
