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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "abit/box.hpp"
#include "abit/random.hpp"
#include "abit/state.hpp"

namespace abit
{
    /// Lebesgue measure of the unit n-ball.
    inline double unit_ball_measure(std::size_t n)
    {
        const double half = static_cast<double>(n) / 2.0;
        return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
    }

    /// Uniform sample from the unit n-ball: a normalised Gaussian direction scaled by U^(1/n).
    inline State sample_unit_ball(std::size_t n, RandomSource &rng)
    {
        if (n == 0)
        {
            throw std::invalid_argument("sample_unit_ball: dimension must be at least 1.");
        }
        State x(n);
        double length = 0.0;
        do
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                x[i] = rng.normal();
            }
            length = norm(x.coords());
        } while (length == 0.0);

        const double radius = std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
        {
            x[i] = x[i] / length * radius;
        }
        // Rounding can push a radius-one draw a few ulps outside the ball.
        while (norm(x.coords()) > 1.0)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                x[i] *= 1.0 - 0x1.0p-52;
            }
        }
        return x;
    }

    /// Measure of the prolate hyperspheroid {x : |x - a| + |x - b| <= c_best} with |a - b| = c_min.
    inline double phs_measure(double c_min, double c_best, std::size_t n)
    {
        if (!(c_min >= 0.0) || !(c_best >= c_min))
        {
            throw std::domain_error("phs_measure: requires c_best >= c_min >= 0.");
        }
        if (std::isinf(c_best))
        {
            return kInfiniteCost;
        }
        const double transverse = std::sqrt(c_best * c_best - c_min * c_min) / 2.0;
        return unit_ball_measure(n) * (c_best / 2.0) * std::pow(transverse, static_cast<double>(n) - 1.0);
    }

    /// The set of states that could lie on a path from start to goal cheaper than c_best,
    /// clipped to the problem bounds.
    class InformedSet
    {
    public:
        InformedSet(State start, State goal, Box bounds, Cost c_best = kInfiniteCost)
          : start_(std::move(start)), goal_(std::move(goal)), bounds_(std::move(bounds))
        {
            require_same_dimension(start_.dimension(), goal_.dimension(), "InformedSet");
            require_same_dimension(start_.dimension(), bounds_.dimension(), "InformedSet");
            c_min_ = distance(start_, goal_);
            compute_rotation();
            set_best_cost(c_best);
        }

        void set_best_cost(Cost c_best)
        {
            if (c_best < c_min_)
            {
                throw std::domain_error("InformedSet: solution cost below the straight-line lower bound.");
            }
            c_best_ = c_best;
        }

        [[nodiscard]] const State &start() const noexcept
        {
            return start_;
        }
        [[nodiscard]] const State &goal() const noexcept
        {
            return goal_;
        }
        [[nodiscard]] const Box &bounds() const noexcept
        {
            return bounds_;
        }
        [[nodiscard]] Cost c_min() const noexcept
        {
            return c_min_;
        }
        [[nodiscard]] Cost c_best() const noexcept
        {
            return c_best_;
        }
        [[nodiscard]] std::size_t dimension() const noexcept
        {
            return start_.dimension();
        }

        [[nodiscard]] bool contains(std::span<const double> x) const noexcept
        {
            if (!bounds_.contains(x))
            {
                return false;
            }
            return distance(start_.coords(), x) + distance(x, goal_.coords()) <= c_best_;
        }

        /// Maps a point of the unit ball into the hyperspheroid: scale, rotate onto the
        /// start-goal axis, translate to the centre.
        [[nodiscard]] State from_unit_ball(const State &ball) const
        {
            const std::size_t n = dimension();
            const double major = c_best_ / 2.0;
            const double minor = std::sqrt(c_best_ * c_best_ - c_min_ * c_min_) / 2.0;

            std::vector<double> scaled(n);
            scaled[0] = major * ball[0];
            for (std::size_t i = 1; i < n; ++i)
            {
                scaled[i] = minor * ball[i];
            }

            State x(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                double sum = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                {
                    sum += rotation_[i * n + j] * scaled[j];
                }
                x[i] = 0.5 * (start_[i] + goal_[i]) + sum;
            }
            return x;
        }

        /// Row-major rotation whose first column is the unit start-goal direction.
        [[nodiscard]] const std::vector<double> &rotation() const noexcept
        {
            return rotation_;
        }

    private:
        // Householder reflection H = I - 2 v v^T / v^T v with v = e1 - a maps e1 onto the unit
        // axis a. H is orthogonal and symmetric, so its first column is a and the remaining
        // columns complete an orthonormal basis deterministically.
        void compute_rotation()
        {
            const std::size_t n = dimension();
            rotation_.assign(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
            {
                rotation_[i * n + i] = 1.0;
            }
            if (c_min_ == 0.0)
            {
                return;
            }
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                v[i] = -(goal_[i] - start_[i]) / c_min_;
            }
            v[0] += 1.0;
            double vv = 0.0;
            for (double x : v)
            {
                vv += x * x;
            }
            if (vv < 1e-24)
            {
                return;
            }
            for (std::size_t i = 0; i < n; ++i)
            {
                for (std::size_t j = 0; j < n; ++j)
                {
                    rotation_[i * n + j] -= 2.0 * v[i] * v[j] / vv;
                }
            }
        }

        State start_;
        State goal_;
        Box bounds_;
        Cost c_min_{0.0};
        Cost c_best_{kInfiniteCost};
        std::vector<double> rotation_;
    };

    /// Measure of the informed set: the box measure before a solution exists, otherwise the
    /// hyperspheroid measure clamped to the box measure.
    inline double informed_measure(const InformedSet &set)
    {
        const double box = set.bounds().measure();
        if (std::isinf(set.c_best()))
        {
            return box;
        }
        return std::min(phs_measure(set.c_min(), set.c_best(), set.dimension()), box);
    }

    inline State sample_uniform(const Box &box, RandomSource &rng)
    {
        State x(box.dimension());
        for (std::size_t i = 0; i < box.dimension(); ++i)
        {
            x[i] = rng.uniform(box.lower[i], box.upper[i]);
        }
        return x;
    }

    /// Uniform sample from the informed set intersected with the bounds.
    ///
    /// Draws from whichever of the box and the hyperspheroid is smaller and rejects against
    /// the other; both routes are uniform over the intersection. A degenerate set
    /// (c_best == c_min > 0) yields a uniform point on the start-goal segment.
    inline State sample_informed(const InformedSet &set, RandomSource &rng)
    {
        const std::size_t n = set.dimension();
        if (std::isinf(set.c_best()))
        {
            return sample_uniform(set.bounds(), rng);
        }
        if (set.c_best() == set.c_min() && set.c_min() > 0.0)
        {
            const double t = rng.uniform01();
            State x(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                x[i] = set.start()[i] + t * (set.goal()[i] - set.start()[i]);
            }
            return x;
        }

        const double phs = phs_measure(set.c_min(), set.c_best(), n);
        if (phs < set.bounds().measure())
        {
            while (true)
            {
                State x = set.from_unit_ball(sample_unit_ball(n, rng));
                if (set.contains(x.coords()))
                {
                    return x;
                }
            }
        }
        while (true)
        {
            State x = sample_uniform(set.bounds(), rng);
            if (set.contains(x.coords()))
            {
                return x;
            }
        }
    }
}  // namespace abit
