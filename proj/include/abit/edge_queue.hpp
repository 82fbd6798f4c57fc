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
#include <cstdint>
#include <optional>
#include <vector>

#include "abit/state.hpp"

namespace abit
{
    /// factor * value with the convention infinity * 0 == 0.
    inline double inflate(double factor, double value) noexcept
    {
        return value == 0.0 ? 0.0 : factor * value;
    }

    /// Candidate edge in the edge queue.
    struct QueueEntry
    {
        StateId parent{kNoState};
        StateId child{kNoState};
        /// g(parent) + c_hat(parent, child) + inflation * h_hat(child)
        Cost key1{kInfiniteCost};
        /// g(parent) at insertion time.
        Cost key2{kInfiniteCost};
        Cost c_hat{kInfiniteCost};
        Cost h_hat{kInfiniteCost};
        std::uint64_t sequence{0};

        /// Admissible estimate of the cost of a solution through this edge.
        [[nodiscard]] Cost uninflated() const noexcept
        {
            return key2 + c_hat + h_hat;
        }
    };

    /// Lexicographic (key1, key2) order with FIFO tie-breaking.
    inline bool better(const QueueEntry &a, const QueueEntry &b) noexcept
    {
        if (a.key1 != b.key1)
        {
            return a.key1 < b.key1;
        }
        if (a.key2 != b.key2)
        {
            return a.key2 < b.key2;
        }
        return a.sequence < b.sequence;
    }

    /// Binary-heap edge queue keyed on inflated potential solution cost, then cost-to-come.
    ///
    /// Entries are never updated in place. When a parent's cost-to-come improves the owner
    /// pushes a fresh entry; superseded ones are recognised at pop time by a key2 that no
    /// longer equals the parent's current cost-to-come.
    class EdgeQueue
    {
    public:
        [[nodiscard]] bool empty() const noexcept
        {
            return heap_.empty();
        }

        [[nodiscard]] std::size_t size() const noexcept
        {
            return heap_.size();
        }

        [[nodiscard]] double inflation() const noexcept
        {
            return inflation_;
        }

        void clear()
        {
            heap_.clear();
        }

        void push(StateId parent, StateId child, Cost g_parent, Cost c_hat, Cost h_hat)
        {
            QueueEntry entry;
            entry.parent = parent;
            entry.child = child;
            entry.key2 = g_parent;
            entry.c_hat = c_hat;
            entry.h_hat = h_hat;
            entry.key1 = g_parent + c_hat + inflate(inflation_, h_hat);
            entry.sequence = next_sequence_++;
            heap_.push_back(entry);
            std::push_heap(heap_.begin(), heap_.end(), worse);
        }

        /// Changes the inflation factor and re-sorts every entry under it.
        void set_inflation(double inflation)
        {
            inflation_ = inflation;
            for (auto &entry : heap_)
            {
                entry.key1 = entry.key2 + entry.c_hat + inflate(inflation_, entry.h_hat);
            }
            std::make_heap(heap_.begin(), heap_.end(), worse);
        }

        /// Removes and returns the best entry for which `is_current(entry)` holds, discarding
        /// superseded entries on the way. An empty result stands for the minimum of an empty
        /// set, i.e. an infinite key.
        template <typename IsCurrent>
        std::optional<QueueEntry> pop_best(IsCurrent &&is_current)
        {
            while (!heap_.empty())
            {
                std::pop_heap(heap_.begin(), heap_.end(), worse);
                QueueEntry entry = heap_.back();
                heap_.pop_back();
                if (is_current(entry))
                {
                    return entry;
                }
            }
            return std::nullopt;
        }

        std::optional<QueueEntry> pop_best()
        {
            return pop_best([](const QueueEntry &) { return true; });
        }

        [[nodiscard]] const std::vector<QueueEntry> &entries() const noexcept
        {
            return heap_;
        }

    private:
        static bool worse(const QueueEntry &a, const QueueEntry &b) noexcept
        {
            return better(b, a);
        }

        std::vector<QueueEntry> heap_;
        double inflation_{1.0};
        std::uint64_t next_sequence_{0};
    };
}  // namespace abit
