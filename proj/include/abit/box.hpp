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

#include <cstddef>
#include <algorithm>
#include <span>
#include <stdexcept>

#include "abit/state.hpp"

namespace abit
{
    /// Closed axis-aligned hyperrectangle.
    struct Box
    {
        State lower;
        State upper;

        Box() = default;

        Box(State lo, State hi) : lower(std::move(lo)), upper(std::move(hi))
        {
            require_same_dimension(lower.dimension(), upper.dimension(), "Box");
            for (std::size_t i = 0; i < lower.dimension(); ++i)
            {
                if (lower[i] > upper[i])
                {
                    throw std::invalid_argument("Box: lower bound exceeds upper bound on axis " +
                                                std::to_string(i) + ".");
                }
            }
        }

        /// The hypercube [lo, hi]^n.
        static Box cube(std::size_t dimension, double lo, double hi)
        {
            State l(dimension);
            State u(dimension);
            for (std::size_t i = 0; i < dimension; ++i)
            {
                l[i] = lo;
                u[i] = hi;
            }
            return {std::move(l), std::move(u)};
        }

        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return lower.dimension();
        }

        [[nodiscard]] double measure() const noexcept
        {
            double volume = 1.0;
            for (std::size_t i = 0; i < dimension(); ++i)
            {
                volume *= upper[i] - lower[i];
            }
            return volume;
        }

        [[nodiscard]] bool contains(std::span<const double> x) const noexcept
        {
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                if (x[i] < lower[i] || x[i] > upper[i])
                {
                    return false;
                }
            }
            return true;
        }

        [[nodiscard]] bool intersects(const Box &other) const noexcept
        {
            for (std::size_t i = 0; i < dimension(); ++i)
            {
                if (other.upper[i] < lower[i] || other.lower[i] > upper[i])
                {
                    return false;
                }
            }
            return true;
        }

        /// Exact test of whether the closed segment [a, b] touches this box (slab method).
        [[nodiscard]] bool intersects_segment(std::span<const double> a, std::span<const double> b) const noexcept
        {
            double t_enter = 0.0;
            double t_exit = 1.0;
            for (std::size_t i = 0; i < a.size(); ++i)
            {
                const double d = b[i] - a[i];
                if (d == 0.0)
                {
                    if (a[i] < lower[i] || a[i] > upper[i])
                    {
                        return false;
                    }
                    continue;
                }
                double t0 = (lower[i] - a[i]) / d;
                double t1 = (upper[i] - a[i]) / d;
                if (t0 > t1)
                {
                    std::swap(t0, t1);
                }
                t_enter = std::max(t_enter, t0);
                t_exit = std::min(t_exit, t1);
                if (t_enter > t_exit)
                {
                    return false;
                }
            }
            return true;
        }

        friend bool operator==(const Box &, const Box &) = default;
    };
}  // namespace abit
