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
#include <limits>
#include <span>
#include <vector>

#include "abit/state.hpp"

namespace abit
{
    /// k-d tree over ids of a StateStore.
    ///
    /// build() creates a balanced tree in one go; insert() appends without rebalancing, which
    /// is adequate for the uniformly random insertion order of the tree-growing planners.
    /// The store must outlive the index.
    class NeighborIndex
    {
    public:
        explicit NeighborIndex(const StateStore &store) : store_(&store)
        {
        }

        void clear()
        {
            nodes_.clear();
            root_ = kNil;
        }

        [[nodiscard]] std::size_t size() const noexcept
        {
            return nodes_.size();
        }

        void build(std::vector<StateId> ids)
        {
            clear();
            nodes_.reserve(ids.size());
            root_ = build_range(ids, 0, ids.size(), 0);
        }

        void insert(StateId id)
        {
            const auto x = (*store_)[id];
            const std::size_t n = store_->dimension();
            const auto fresh = static_cast<std::uint32_t>(nodes_.size());
            if (root_ == kNil)
            {
                nodes_.push_back({id, 0, kNil, kNil});
                root_ = fresh;
                return;
            }
            std::uint32_t current = root_;
            while (true)
            {
                Node &node = nodes_[current];
                const double split = (*store_)[node.id][node.axis];
                std::uint32_t &next = x[node.axis] < split ? node.left : node.right;
                if (next == kNil)
                {
                    next = fresh;
                    nodes_.push_back({id, static_cast<std::uint32_t>((node.axis + 1) % n), kNil, kNil});
                    return;
                }
                current = next;
            }
        }

        /// Ids within Euclidean distance `radius` of `x`, excluding `exclude`.
        void radius_query(std::span<const double> x, double radius, std::vector<StateId> &out,
                          StateId exclude = kNoState) const
        {
            out.clear();
            if (root_ == kNil || radius < 0.0)
            {
                return;
            }
            radius_recurse(root_, x, radius, exclude, out);
        }

        [[nodiscard]] std::vector<StateId> radius_query(std::span<const double> x, double radius,
                                                        StateId exclude = kNoState) const
        {
            std::vector<StateId> out;
            radius_query(x, radius, out, exclude);
            return out;
        }

        /// Nearest indexed id to `x`, or kNoState when empty.
        [[nodiscard]] StateId nearest(std::span<const double> x) const
        {
            StateId best = kNoState;
            double best_sq = std::numeric_limits<double>::infinity();
            if (root_ != kNil)
            {
                nearest_recurse(root_, x, best, best_sq);
            }
            return best;
        }

    private:
        static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

        struct Node
        {
            StateId id;
            std::uint32_t axis;
            std::uint32_t left;
            std::uint32_t right;
        };

        std::uint32_t build_range(std::vector<StateId> &ids, std::size_t begin, std::size_t end, std::size_t depth)
        {
            if (begin >= end)
            {
                return kNil;
            }
            const std::size_t n = store_->dimension();
            const auto axis = static_cast<std::uint32_t>(depth % n);
            const std::size_t mid = begin + (end - begin) / 2;
            std::nth_element(ids.begin() + static_cast<std::ptrdiff_t>(begin),
                             ids.begin() + static_cast<std::ptrdiff_t>(mid),
                             ids.begin() + static_cast<std::ptrdiff_t>(end), [&](StateId a, StateId b)
                             { return (*store_)[a][axis] < (*store_)[b][axis]; });
            const auto index = static_cast<std::uint32_t>(nodes_.size());
            nodes_.push_back({ids[mid], axis, kNil, kNil});
            const std::uint32_t left = build_range(ids, begin, mid, depth + 1);
            const std::uint32_t right = build_range(ids, mid + 1, end, depth + 1);
            nodes_[index].left = left;
            nodes_[index].right = right;
            return index;
        }

        void radius_recurse(std::uint32_t index, std::span<const double> x, double radius, StateId exclude,
                            std::vector<StateId> &out) const
        {
            const Node &node = nodes_[index];
            const auto p = (*store_)[node.id];
            if (node.id != exclude && distance(x, p) <= radius)
            {
                out.push_back(node.id);
            }
            const double diff = x[node.axis] - p[node.axis];
            if (node.left != kNil && diff <= radius)
            {
                radius_recurse(node.left, x, radius, exclude, out);
            }
            if (node.right != kNil && -diff <= radius)
            {
                radius_recurse(node.right, x, radius, exclude, out);
            }
        }

        void nearest_recurse(std::uint32_t index, std::span<const double> x, StateId &best, double &best_sq) const
        {
            const Node &node = nodes_[index];
            const auto p = (*store_)[node.id];
            const double d_sq = squared_distance(x, p);
            if (d_sq < best_sq)
            {
                best_sq = d_sq;
                best = node.id;
            }
            const double diff = x[node.axis] - p[node.axis];
            const std::uint32_t first = diff < 0.0 ? node.left : node.right;
            const std::uint32_t second = diff < 0.0 ? node.right : node.left;
            if (first != kNil)
            {
                nearest_recurse(first, x, best, best_sq);
            }
            if (second != kNil && diff * diff <= best_sq)
            {
                nearest_recurse(second, x, best, best_sq);
            }
        }

        const StateStore *store_;
        std::vector<Node> nodes_;
        std::uint32_t root_{kNil};
    };
}  // namespace abit
