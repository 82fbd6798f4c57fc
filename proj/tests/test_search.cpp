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
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "abit/abit_star.hpp"
#include "abit/edge_queue.hpp"
#include "abit/policies.hpp"
#include "abit/random.hpp"
#include "abit/search_tree.hpp"
#include "abit/world.hpp"

using namespace abit;

namespace
{
    Cost root_walk_cost(const SearchTree &tree, StateId v)
    {
        Cost total = 0.0;
        for (; v != tree.root(); v = tree.parent(v))
        {
            total += tree.parent_edge_cost(v);
        }
        return total;
    }

    // Runs the planner until the current search is finished (or the step budget runs out).
    void finish_search(AbitStar &planner, int max_steps = 1000000)
    {
        for (int i = 0; i < max_steps && !planner.state().search_finished; ++i)
        {
            planner.iterate();
        }
    }
}  // namespace

TEST(EdgeQueue, PopsSmallestKey)
{
    EdgeQueue queue;
    queue.set_inflation(1.0);
    queue.push(1, 2, 1.0, 1.0, 1.0);  // key1 3.0
    queue.push(3, 4, 1.0, 0.5, 1.0);  // key1 2.5
    const auto best = queue.pop_best();
    ASSERT_TRUE(best);
    EXPECT_EQ(best->parent, 3u);
    EXPECT_DOUBLE_EQ(best->key1, 2.5);
}

TEST(EdgeQueue, TieBreaksOnCostToCome)
{
    EdgeQueue queue;
    queue.set_inflation(1.0);
    queue.push(1, 2, 1.0, 1.0, 0.5);  // (2.5, 1.0)
    queue.push(3, 4, 0.5, 1.5, 0.5);  // (2.5, 0.5)
    const auto best = queue.pop_best();
    ASSERT_TRUE(best);
    EXPECT_DOUBLE_EQ(best->key1, 2.5);
    EXPECT_DOUBLE_EQ(best->key2, 0.5);
    EXPECT_EQ(best->child, 4u);
}

TEST(EdgeQueue, InflationMultipliesHeuristicOnly)
{
    EdgeQueue queue;
    queue.set_inflation(3.0);
    queue.push(0, 1, 1.0, 2.0, 0.5);
    EXPECT_DOUBLE_EQ(queue.entries().front().key1, 1.0 + 2.0 + 1.5);
    queue.set_inflation(kInfiniteCost);
    queue.push(0, 2, 1.0, 2.0, 0.0);
    // An infinite factor on a zero heuristic contributes nothing.
    const auto best = queue.pop_best();
    ASSERT_TRUE(best);
    EXPECT_EQ(best->child, 2u);
    EXPECT_DOUBLE_EQ(best->key1, 3.0);
    EXPECT_TRUE(std::isinf(queue.pop_best()->key1));
    EXPECT_FALSE(queue.pop_best());
}

TEST(EdgeQueue, MatchesLinearScanOver10kEntries)
{
    // Random pushes, parent cost-to-come decreases (stale entries), and inflation changes;
    // every pop must equal the best current entry found by scanning a shadow list.
    RandomSource rng(99);
    EdgeQueue queue;
    queue.set_inflation(2.0);
    std::vector<Cost> g(200);
    for (auto &v : g)
    {
        v = rng.uniform(0.0, 5.0);
    }
    struct Shadow
    {
        StateId parent;
        StateId child;
        Cost key2;
        Cost c_hat;
        Cost h_hat;
        std::uint64_t order;
    };
    std::vector<Shadow> shadow;
    std::uint64_t order = 0;
    auto push = [&](StateId p, StateId c)
    {
        const Cost c_hat = rng.uniform(0.0, 1.0);
        const Cost h_hat = rng.uniform(0.0, 3.0);
        queue.push(p, c, g[p], c_hat, h_hat);
        shadow.push_back({p, c, g[p], c_hat, h_hat, order++});
    };
    for (int i = 0; i < 10000; ++i)
    {
        push(static_cast<StateId>(rng.uniform_index(g.size())), static_cast<StateId>(rng.uniform_index(1000)));
    }
    auto current = [&](StateId p, Cost key2) { return key2 == g[p]; };

    int pops = 0;
    while (!shadow.empty())
    {
        const double action = rng.uniform01();
        if (action < 0.1)
        {
            const auto p = static_cast<StateId>(rng.uniform_index(g.size()));
            g[p] -= rng.uniform(0.0, 0.5);
            // The owner re-pushes the parent's edges with the new cost-to-come.
            std::vector<Shadow> fresh;
            for (const auto &s : shadow)
            {
                if (s.parent == p && s.key2 != g[p])
                {
                    fresh.push_back(s);
                }
            }
            for (const auto &s : fresh)
            {
                queue.push(p, s.child, g[p], s.c_hat, s.h_hat);
                shadow.push_back({p, s.child, g[p], s.c_hat, s.h_hat, order++});
            }
        }
        else if (action < 0.12)
        {
            queue.set_inflation(rng.uniform(1.0, 3.0));
        }

        std::erase_if(shadow, [&](const Shadow &s) { return !current(s.parent, s.key2); });
        if (shadow.empty())
        {
            break;
        }
        const double eps = queue.inflation();
        const auto best = std::min_element(shadow.begin(), shadow.end(),
                                           [&](const Shadow &a, const Shadow &b)
                                           {
                                               const Cost ka = a.key2 + a.c_hat + eps * a.h_hat;
                                               const Cost kb = b.key2 + b.c_hat + eps * b.h_hat;
                                               if (ka != kb)
                                               {
                                                   return ka < kb;
                                               }
                                               if (a.key2 != b.key2)
                                               {
                                                   return a.key2 < b.key2;
                                               }
                                               return a.order < b.order;
                                           });
        const auto popped = queue.pop_best([&](const QueueEntry &e) { return current(e.parent, e.key2); });
        ASSERT_TRUE(popped);
        ASSERT_EQ(popped->parent, best->parent);
        ASSERT_EQ(popped->child, best->child);
        ASSERT_EQ(popped->key2, best->key2);
        ASSERT_DOUBLE_EQ(popped->key1, best->key2 + best->c_hat + eps * best->h_hat);
        shadow.erase(best);
        ++pops;
    }
    EXPECT_GE(pops, 10000);
}

TEST(SearchTree, RewireCascadesThroughSubtree)
{
    // Child c with g = 5.0 is rewired to a parent giving g = 4.2; every descendant drops by 0.8.
    SearchTree tree;
    std::vector<StateId> changed;
    tree.set_root(0);
    tree.ensure(10);
    tree.connect(0, 1, 3.0, changed);
    tree.connect(1, 2, 2.0, changed);  // g(2) = 5.0
    tree.connect(2, 3, 1.0, changed);
    tree.connect(2, 4, 0.5, changed);
    tree.connect(3, 5, 0.25, changed);
    tree.connect(0, 6, 4.0, changed);
    const std::map<StateId, Cost> before{{3, tree.g(3)}, {4, tree.g(4)}, {5, tree.g(5)}};
    ASSERT_DOUBLE_EQ(tree.g(2), 5.0);

    changed.clear();
    tree.connect(6, 2, 0.2, changed);
    EXPECT_DOUBLE_EQ(tree.g(2), 4.2);
    EXPECT_FALSE(tree.has_edge(1, 2));
    EXPECT_TRUE(tree.has_edge(6, 2));
    EXPECT_TRUE(tree.children(1).empty());
    for (const auto &[v, g] : before)
    {
        EXPECT_NEAR(tree.g(v), g - 0.8, 1e-12);
    }
    for (StateId v : tree.vertices())
    {
        EXPECT_NEAR(tree.g(v), root_walk_cost(tree, v), 1e-12);
    }
    std::sort(changed.begin(), changed.end());
    EXPECT_EQ(changed, (std::vector<StateId>{2, 3, 4, 5}));
}

TEST(SearchTree, RemoveSubtreeAndPaths)
{
    SearchTree tree;
    std::vector<StateId> changed;
    tree.set_root(0);
    tree.ensure(5);
    tree.connect(0, 1, 1.0, changed);
    tree.connect(1, 2, 1.0, changed);
    tree.connect(2, 3, 1.0, changed);
    tree.connect(0, 4, 1.0, changed);
    EXPECT_EQ(tree.path_to(3), (std::vector<StateId>{0, 1, 2, 3}));
    std::vector<StateId> removed;
    tree.remove_subtree(1, removed);
    std::sort(removed.begin(), removed.end());
    EXPECT_EQ(removed, (std::vector<StateId>{1, 2, 3}));
    EXPECT_EQ(tree.size(), 2u);
    EXPECT_TRUE(std::isinf(tree.g(2)));
    EXPECT_TRUE(tree.path_to(3).empty());
    EXPECT_THROW(tree.remove(0), std::logic_error);
    EXPECT_THROW(tree.connect(3, 5, 1.0, changed), std::logic_error);
}

TEST(Truncation, Examples)
{
    EXPECT_TRUE(within_truncation(1.25, 8.0, 10.0));
    EXPECT_FALSE(within_truncation(1.25, 8.1, 10.0));
    EXPECT_TRUE(within_truncation(kInfiniteCost, 3.0, kInfiniteCost));
    EXPECT_FALSE(within_truncation(kInfiniteCost, 3.0, 10.0));
    EXPECT_FALSE(within_truncation(1.0, kInfiniteCost, 10.0));
}

TEST(Policies, DefaultSchedule)
{
    const auto schedule = PolicySchedule::default_schedule();
    EXPECT_EQ(schedule.inflation(0, 100), 1e6);
    EXPECT_DOUBLE_EQ(schedule.inflation(1, 100), 1.1);
    EXPECT_DOUBLE_EQ(schedule.truncation(0, 100), 1.05);
    EXPECT_DOUBLE_EQ(schedule.truncation(1, 100), 1.05);
    const std::size_t huge = 1000000000000ULL;
    EXPECT_NEAR(schedule.inflation(1, huge) * schedule.truncation(1, huge), 1.0, 1e-10);
    EXPECT_EQ(PolicySchedule::parse("unit", true)(0, 5), 1.0);
    EXPECT_EQ(PolicySchedule::parse("constant:2.5", false)(3, 5), 2.5);
    EXPECT_THROW(PolicySchedule::parse("constant:0.5", true), std::invalid_argument);
    EXPECT_THROW(PolicySchedule::parse("constant:x", true), std::invalid_argument);
    EXPECT_THROW(PolicySchedule::parse("greedy", true), std::invalid_argument);
}

TEST(Abit, InitialSearchFromStartWithInfiniteRadius)
{
    AbitStar planner(make_wall_gap(2), AbitConfig{});
    const auto &s = planner.state();
    EXPECT_EQ(s.tree.size(), 1u);
    EXPECT_EQ(s.samples.size(), 1u);
    EXPECT_EQ(s.q, 2u);
    EXPECT_TRUE(std::isinf(s.radius));
    EXPECT_TRUE(std::isinf(s.inflation));
    EXPECT_TRUE(std::isinf(s.truncation));
    EXPECT_EQ(s.queue.size(), 1u);
    // The direct edge is blocked by the wall, so the initial search ends empty-handed.
    finish_search(planner);
    EXPECT_EQ(s.tree.size(), 1u);
    EXPECT_TRUE(std::isinf(planner.best_cost()));
}

TEST(Abit, ObstacleFreeFirstSolutionIsTheStraightLine)
{
    AbitStar planner(make_empty(2), AbitConfig{});
    const auto record = planner.solve(Termination{1.0, std::nullopt});
    ASSERT_TRUE(record.success);
    EXPECT_NEAR(record.events.front().cost, 1.0, 1e-3);
    EXPECT_EQ(record.events.size(), 1u);
}

TEST(Abit, UpdateSchedulingAndFactors)
{
    // m = 98 makes q = |V| + |X_u| = 1 + 1 + 98 = 100 on the first batch of the wall gap.
    AbitConfig config;
    config.rgg.batch_size = 98;
    AbitStar planner(make_wall_gap(2), config);
    const auto &s = planner.state();

    finish_search(planner);
    ASSERT_TRUE(s.search_finished);
    EXPECT_TRUE(planner.update_approximation_needed());
    planner.update();
    EXPECT_EQ(s.batches, 1u);
    EXPECT_EQ(s.q, 100u);
    EXPECT_NEAR(s.radius, connection_radius(100, 4.0, 2, 1.1), 1e-15);
    EXPECT_EQ(s.inflation, 1e6);
    EXPECT_DOUBLE_EQ(s.truncation, 1.05);

    finish_search(planner);
    ASSERT_TRUE(s.search_finished);
    EXPECT_EQ(s.searches_this_batch, 1u);
    EXPECT_FALSE(planner.update_approximation_needed());
    const std::size_t vertices = s.tree.size() + s.samples.size();
    planner.update();
    EXPECT_EQ(s.batches, 1u);
    EXPECT_EQ(s.tree.size() + s.samples.size(), vertices);
    EXPECT_DOUBLE_EQ(s.inflation, 1.1);
    EXPECT_DOUBLE_EQ(s.truncation, 1.05);
    EXPECT_TRUE(s.closed_list.empty());
    EXPECT_TRUE(s.inconsistent_list.empty());

    finish_search(planner);
    EXPECT_TRUE(planner.update_approximation_needed());
    planner.update();
    EXPECT_EQ(s.batches, 2u);
}

TEST(Abit, SingleSearchPerBatchAlwaysResamples)
{
    AbitConfig config;
    config.searches_per_batch = 1;
    AbitStar planner(make_wall_gap(2), config);
    for (int batch = 1; batch <= 4; ++batch)
    {
        finish_search(planner);
        EXPECT_TRUE(planner.update_approximation_needed());
        planner.update();
        EXPECT_EQ(planner.state().batches, static_cast<std::size_t>(batch));
    }
}

TEST(Abit, ExpandOfIsolatedSourceIsEmpty)
{
    AbitStar planner(make_wall_gap(2), AbitConfig{});
    finish_search(planner);
    planner.update();
    const StateId start = planner.state().tree.root();
    ASSERT_TRUE(planner.state().tree.children(start).empty());
    EXPECT_TRUE(planner.expand(std::span<const StateId>(&start, 1), 1e-9).empty());
}

TEST(Abit, ExpandFilters)
{
    // Run a while, then compare expand() on every vertex with a direct evaluation of its
    // definition over all graph states.
    AbitStar planner(make_wall_gap(2), AbitConfig{});
    for (int i = 0; i < 3000; ++i)
    {
        planner.step();
    }
    const auto &s = planner.state();
    ASSERT_LT(planner.best_cost(), kInfiniteCost);
    const Heuristics h(planner.problem());
    std::vector<StateId> all = s.tree.vertices();
    all.insert(all.end(), s.samples.ids().begin(), s.samples.ids().end());
    for (StateId p : s.tree.vertices())
    {
        auto got = planner.expand(std::span<const StateId>(&p, 1), s.radius);
        std::vector<StateId> expected(s.tree.children(p).begin(), s.tree.children(p).end());
        for (StateId c : all)
        {
            if (c == p || s.tree.parent(c) == p || distance(s.store[p], s.store[c]) > s.radius)
            {
                continue;
            }
            const Cost g_hat = h.g_hat(s.store[p]);
            const Cost c_hat = h.c_hat(s.store[p], s.store[c]);
            if (g_hat + c_hat + h.h_hat(s.store[c]) <= planner.best_cost() && g_hat + c_hat <= s.tree.g(c))
            {
                expected.push_back(c);
            }
        }
        std::vector<StateId> got_children;
        for (const auto &e : got)
        {
            EXPECT_EQ(e.parent, p);
            got_children.push_back(e.child);
        }
        std::sort(got_children.begin(), got_children.end());
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(got_children, expected);
    }
}

TEST(Abit, SolveIsDeterministicPerSeed)
{
    AbitConfig config;
    config.seed = 5;
    AbitStar a(make_wall_gap(2), config);
    AbitStar b(make_wall_gap(2), config);
    const Termination budget{100.0, 20000};
    const auto ra = a.solve(budget);
    const auto rb = b.solve(budget);
    ASSERT_EQ(ra.events.size(), rb.events.size());
    for (std::size_t i = 0; i < ra.events.size(); ++i)
    {
        EXPECT_EQ(ra.events[i].cost, rb.events[i].cost);
    }
    EXPECT_EQ(ra.final_path, rb.final_path);
    config.seed = 6;
    AbitStar c(make_wall_gap(2), config);
    EXPECT_NE(c.solve(budget).final_cost(), ra.final_cost());
}

TEST(Abit, EventsImproveStrictlyAndPathsAreValid)
{
    AbitConfig config;
    config.seed = 3;
    AbitStar planner(make_wall_gap(2), config);
    std::vector<SolutionEvent> events;
    const auto record = planner.solve(Termination{100.0, 30000}, [&](const SolutionEvent &e) { events.push_back(e); });
    ASSERT_GE(events.size(), 2u);
    for (std::size_t i = 0; i < events.size(); ++i)
    {
        const auto &e = events[i];
        EXPECT_EQ(e.path.front(), planner.problem().start);
        EXPECT_EQ(e.path.back(), planner.problem().goals.front());
        EXPECT_NEAR(path_length(e.path), e.cost, 1e-9);
        EXPECT_GE(e.cost, 1.2490495483208028 - 1e-9);
        for (std::size_t k = 1; k < e.path.size(); ++k)
        {
            EXPECT_TRUE(planner.problem().world.is_segment_valid(e.path[k - 1], e.path[k]));
        }
        if (i > 0)
        {
            EXPECT_LT(e.cost, events[i - 1].cost);
            EXPECT_GE(e.elapsed, events[i - 1].elapsed);
        }
    }
    EXPECT_EQ(record.events.size(), events.size());
}

TEST(Abit, PruningKeepsPlannerConsistent)
{
    AbitConfig config;
    config.pruning = true;
    config.seed = 8;
    AbitStar planner(make_wall_gap(2), config);
    const auto record = planner.solve(Termination{100.0, 30000});
    ASSERT_TRUE(record.success);
    const auto &s = planner.state();
    for (StateId v : s.tree.vertices())
    {
        EXPECT_NEAR(s.tree.g(v), root_walk_cost(s.tree, v), 1e-9);
    }
    EXPECT_LT(record.final_cost(), 1.3);
}

TEST(Abit, MultipleGoals)
{
    auto problem = make_wall_gap(2);
    problem.goals.push_back(State{-0.5, 0.6});
    AbitStar planner(problem, AbitConfig{});
    const auto record = planner.solve(Termination{100.0, 5000});
    ASSERT_TRUE(record.success);
    // The second goal is directly visible from the start.
    EXPECT_NEAR(record.final_cost(), 0.6, 1e-12);
}
