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
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "abit/abit_star.hpp"
#include "abit/neighbor_index.hpp"
#include "abit/world.hpp"

namespace abit
{
    /// Weighted directed graph with a start node and goal nodes.
    struct ExplicitGraph
    {
        struct Arc
        {
            std::size_t to;
            Cost weight;
        };

        std::vector<State> nodes;
        std::vector<std::vector<Arc>> arcs;
        std::size_t start{0};
        std::vector<std::size_t> goals;

        std::size_t add_node(State x)
        {
            nodes.push_back(std::move(x));
            arcs.emplace_back();
            return nodes.size() - 1;
        }

        void add_arc(std::size_t from, std::size_t to, Cost weight)
        {
            arcs[from].push_back({to, weight});
        }

        void add_edge(std::size_t a, std::size_t b, Cost weight)
        {
            add_arc(a, b, weight);
            add_arc(b, a, weight);
        }

        [[nodiscard]] bool has_arc(std::size_t from, std::size_t to) const
        {
            return std::any_of(arcs[from].begin(), arcs[from].end(), [&](const Arc &a) { return a.to == to; });
        }

        [[nodiscard]] std::size_t arc_count() const
        {
            std::size_t total = 0;
            for (const auto &list : arcs)
            {
                total += list.size();
            }
            return total;
        }
    };

    struct ShortestPath
    {
        Cost cost{kInfiniteCost};
        std::vector<std::size_t> nodes;
    };

    /// Dijkstra from the start to the cheapest goal; infinite cost when no goal is reachable.
    inline ShortestPath graph_shortest_path(const ExplicitGraph &graph)
    {
        ShortestPath result;
        const std::size_t count = graph.nodes.size();
        if (count == 0)
        {
            return result;
        }
        std::vector<Cost> dist(count, kInfiniteCost);
        std::vector<std::size_t> prev(count, count);
        std::vector<char> done(count, 0);
        using Item = std::pair<Cost, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
        dist[graph.start] = 0.0;
        open.emplace(0.0, graph.start);
        while (!open.empty())
        {
            const auto [d, u] = open.top();
            open.pop();
            if (done[u] != 0)
            {
                continue;
            }
            done[u] = 1;
            for (const auto &arc : graph.arcs[u])
            {
                const Cost candidate = d + arc.weight;
                if (candidate < dist[arc.to])
                {
                    dist[arc.to] = candidate;
                    prev[arc.to] = u;
                    open.emplace(candidate, arc.to);
                }
            }
        }

        std::size_t best = count;
        for (std::size_t goal : graph.goals)
        {
            if (dist[goal] < result.cost)
            {
                result.cost = dist[goal];
                best = goal;
            }
        }
        if (best == count)
        {
            return result;
        }
        for (std::size_t v = best; v != count; v = prev[v])
        {
            result.nodes.push_back(v);
            if (v == graph.start)
            {
                break;
            }
        }
        std::reverse(result.nodes.begin(), result.nodes.end());
        return result;
    }

    /// The graph an ABIT* search sees at this moment: every state of the tree and the sample
    /// set, joined by every collision-free pair within the current connection radius and by
    /// the current tree edges. Weights are collision-checked here, independently of the
    /// planner's edge cache.
    inline ExplicitGraph snapshot_rgg(const AbitStar &planner)
    {
        const PlannerState &s = planner.state();
        const ProblemDefinition &problem = planner.problem();

        std::vector<StateId> ids = s.tree.vertices();
        ids.insert(ids.end(), s.samples.ids().begin(), s.samples.ids().end());
        std::sort(ids.begin(), ids.end());

        ExplicitGraph graph;
        std::vector<std::size_t> node_of(s.store.size(), static_cast<std::size_t>(-1));
        for (StateId id : ids)
        {
            node_of[id] = graph.add_node(s.store.state(id));
        }
        graph.start = node_of[s.tree.root()];
        for (StateId goal : s.goal_ids)
        {
            if (node_of[goal] != static_cast<std::size_t>(-1))
            {
                graph.goals.push_back(node_of[goal]);
            }
        }

        StateStore local(problem.dimension());
        for (StateId id : ids)
        {
            local.add(s.store[id]);
        }
        NeighborIndex index(local);
        std::vector<StateId> all(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i)
        {
            all[i] = static_cast<StateId>(i);
        }
        index.build(all);

        std::vector<StateId> neighbors;
        for (std::size_t i = 0; i < ids.size(); ++i)
        {
            if (std::isinf(s.radius))
            {
                neighbors = all;
                std::erase(neighbors, static_cast<StateId>(i));
            }
            else
            {
                index.radius_query(local[static_cast<StateId>(i)], s.radius, neighbors, static_cast<StateId>(i));
            }
            for (StateId j : neighbors)
            {
                const Cost w = problem.world.edge_cost(local[static_cast<StateId>(i)], local[j]);
                if (!std::isinf(w))
                {
                    graph.add_arc(i, j, w);
                }
            }
        }

        for (StateId id : s.tree.vertices())
        {
            const StateId parent = s.tree.parent(id);
            if (parent == kNoState)
            {
                continue;
            }
            const std::size_t a = node_of[parent];
            const std::size_t b = node_of[id];
            if (!graph.has_arc(a, b))
            {
                const Cost w = problem.world.edge_cost(s.store[parent], s.store[id]);
                graph.add_edge(a, b, w);
            }
        }
        return graph;
    }
}  // namespace abit
