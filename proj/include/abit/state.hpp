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
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abit
{
    using Cost = double;

    inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::infinity();

    /// Index of a state inside a StateStore.
    using StateId = std::uint32_t;

    inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

    /// A point in the n-dimensional problem space. The dimension is fixed at construction.
    class State
    {
    public:
        State() = default;

        explicit State(std::size_t dimension) : coords_(dimension, 0.0)
        {
        }

        explicit State(std::vector<double> coords) : coords_(std::move(coords))
        {
            check_finite();
        }

        State(std::initializer_list<double> coords) : coords_(coords)
        {
            check_finite();
        }

        explicit State(std::span<const double> coords) : coords_(coords.begin(), coords.end())
        {
            check_finite();
        }

        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return coords_.size();
        }

        double &operator[](std::size_t i)
        {
            return coords_[i];
        }

        double operator[](std::size_t i) const
        {
            return coords_[i];
        }

        [[nodiscard]] std::span<const double> coords() const noexcept
        {
            return coords_;
        }

        [[nodiscard]] std::span<double> coords() noexcept
        {
            return coords_;
        }

        friend bool operator==(const State &, const State &) = default;

    private:
        void check_finite() const
        {
            for (double c : coords_)
            {
                if (!std::isfinite(c))
                {
                    throw std::invalid_argument("State coordinates must be finite.");
                }
            }
        }

        std::vector<double> coords_;
    };

    inline void require_same_dimension(std::size_t a, std::size_t b, const char *what)
    {
        if (a != b)
        {
            throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                        std::to_string(b) + ").");
        }
    }

    inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            const double d = a[i] - b[i];
            sum += d * d;
        }
        return sum;
    }

    inline double distance(std::span<const double> a, std::span<const double> b) noexcept
    {
        return std::sqrt(squared_distance(a, b));
    }

    inline double distance(const State &a, const State &b) noexcept
    {
        return distance(a.coords(), b.coords());
    }

    inline double norm(std::span<const double> v) noexcept
    {
        double sum = 0.0;
        for (double x : v)
        {
            sum += x * x;
        }
        return std::sqrt(sum);
    }

    /// Flat, append-only storage for the states a planner works with. Ids are stable.
    class StateStore
    {
    public:
        explicit StateStore(std::size_t dimension = 0) : dimension_(dimension)
        {
        }

        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return dimension_;
        }

        [[nodiscard]] std::size_t size() const noexcept
        {
            return dimension_ == 0 ? 0 : data_.size() / dimension_;
        }

        StateId add(std::span<const double> coords)
        {
            require_same_dimension(coords.size(), dimension_, "StateStore::add");
            const auto id = static_cast<StateId>(size());
            data_.insert(data_.end(), coords.begin(), coords.end());
            return id;
        }

        StateId add(const State &state)
        {
            return add(state.coords());
        }

        [[nodiscard]] std::span<const double> operator[](StateId id) const noexcept
        {
            return {data_.data() + static_cast<std::size_t>(id) * dimension_, dimension_};
        }

        [[nodiscard]] State state(StateId id) const
        {
            return State((*this)[id]);
        }

        void reserve(std::size_t count)
        {
            data_.reserve(count * dimension_);
        }

    private:
        std::size_t dimension_;
        std::vector<double> data_;
    };
}  // namespace abit
