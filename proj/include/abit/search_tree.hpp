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
#include <stdexcept>
#include <vector>

#include "abit/state.hpp"

namespace abit
{
    /// Rooted tree over StateStore ids with parent links and exact cost-to-come labels.
    ///
    /// Invariant: for every edge (p, c), g(c) == g(p) + edge_cost(c). Changing a vertex's
    /// parent cascades the new cost-to-come through its subtree.
    class SearchTree
    {
    public:
        SearchTree() = default;

        void set_root(StateId root)
        {
            ensure(root);
            root_ = root;
            in_tree_[root] = 1;
            g_[root] = 0.0;
            parent_[root] = kNoState;
            edge_cost_[root] = 0.0;
            size_ = 1;
        }

        /// Makes room for ids up to `count - 1`.
        void ensure(std::size_t id)
        {
            if (id >= parent_.size())
            {
                const std::size_t count = id + 1;
                parent_.resize(count, kNoState);
                g_.resize(count, kInfiniteCost);
                edge_cost_.resize(count, kInfiniteCost);
                children_.resize(count);
                in_tree_.resize(count, 0);
            }
        }

        [[nodiscard]] StateId root() const noexcept
        {
            return root_;
        }

        [[nodiscard]] bool contains(StateId id) const noexcept
        {
            return id < in_tree_.size() && in_tree_[id] != 0;
        }

        /// Cost-to-come through the tree; infinite for states that are not vertices.
        [[nodiscard]] Cost g(StateId id) const noexcept
        {
            return contains(id) ? g_[id] : kInfiniteCost;
        }

        [[nodiscard]] StateId parent(StateId id) const noexcept
        {
            return contains(id) ? parent_[id] : kNoState;
        }

        /// Cost of the edge from parent(id) to id.
        [[nodiscard]] Cost parent_edge_cost(StateId id) const noexcept
        {
            return edge_cost_[id];
        }

        [[nodiscard]] const std::vector<StateId> &children(StateId id) const noexcept
        {
            return children_[id];
        }

        [[nodiscard]] bool has_edge(StateId parent, StateId child) const noexcept
        {
            return contains(child) && parent_[child] == parent;
        }

        [[nodiscard]] std::size_t size() const noexcept
        {
            return size_;
        }

        [[nodiscard]] std::size_t capacity() const noexcept
        {
            return in_tree_.size();
        }

        /// All vertex ids in ascending order.
        [[nodiscard]] std::vector<StateId> vertices() const
        {
            std::vector<StateId> out;
            out.reserve(size_);
            for (std::size_t i = 0; i < in_tree_.size(); ++i)
            {
                if (in_tree_[i] != 0)
                {
                    out.push_back(static_cast<StateId>(i));
                }
            }
            return out;
        }

        /// Adds the edge (parent, child). A child already in the tree is rewired, which removes
        /// its previous parent edge. Every vertex whose cost-to-come changed (the child and its
        /// descendants) is appended to `changed`.
        void connect(StateId parent, StateId child, Cost cost, std::vector<StateId> &changed)
        {
            if (!contains(parent))
            {
                throw std::logic_error("SearchTree::connect: parent is not a vertex.");
            }
            ensure(child);
            if (contains(child))
            {
                detach_from_parent(child);
            }
            else
            {
                in_tree_[child] = 1;
                ++size_;
            }
            parent_[child] = parent;
            edge_cost_[child] = cost;
            children_[parent].push_back(child);
            g_[child] = g_[parent] + cost;
            changed.push_back(child);
            cascade(child, changed);
        }

        /// Removes a vertex from the tree. Its children must have been removed or detached first.
        void remove(StateId id)
        {
            if (!contains(id))
            {
                return;
            }
            if (id == root_)
            {
                throw std::logic_error("SearchTree::remove: cannot remove the root.");
            }
            detach_from_parent(id);
            in_tree_[id] = 0;
            parent_[id] = kNoState;
            g_[id] = kInfiniteCost;
            edge_cost_[id] = kInfiniteCost;
            children_[id].clear();
            --size_;
        }

        /// Removes `id` and its whole subtree, appending the removed ids to `removed`.
        void remove_subtree(StateId id, std::vector<StateId> &removed)
        {
            if (!contains(id))
            {
                return;
            }
            std::vector<StateId> stack{id};
            std::vector<StateId> order;
            while (!stack.empty())
            {
                const StateId v = stack.back();
                stack.pop_back();
                order.push_back(v);
                for (StateId c : children_[v])
                {
                    stack.push_back(c);
                }
            }
            // Leaves first so that remove() never sees children.
            for (auto it = order.rbegin(); it != order.rend(); ++it)
            {
                children_[*it].clear();
                remove(*it);
                removed.push_back(*it);
            }
        }

        /// Path from the root to `id`, inclusive. Empty when `id` is not a vertex.
        [[nodiscard]] std::vector<StateId> path_to(StateId id) const
        {
            std::vector<StateId> path;
            if (!contains(id))
            {
                return path;
            }
            for (StateId v = id; v != kNoState; v = parent_[v])
            {
                path.push_back(v);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }

    private:
        void detach_from_parent(StateId child)
        {
            const StateId old = parent_[child];
            if (old == kNoState)
            {
                return;
            }
            auto &siblings = children_[old];
            siblings.erase(std::remove(siblings.begin(), siblings.end(), child), siblings.end());
            parent_[child] = kNoState;
        }

        void cascade(StateId from, std::vector<StateId> &changed)
        {
            std::vector<StateId> stack(children_[from].begin(), children_[from].end());
            while (!stack.empty())
            {
                const StateId v = stack.back();
                stack.pop_back();
                g_[v] = g_[parent_[v]] + edge_cost_[v];
                changed.push_back(v);
                for (StateId c : children_[v])
                {
                    stack.push_back(c);
                }
            }
        }

        StateId root_{kNoState};
        std::vector<StateId> parent_;
        std::vector<Cost> g_;
        std::vector<Cost> edge_cost_;
        std::vector<std::vector<StateId>> children_;
        std::vector<char> in_tree_;
        std::size_t size_{0};
    };
}  // namespace abit
