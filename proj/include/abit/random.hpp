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
#include <cstdint>
#include <numbers>
#include <limits>
#include <random>

namespace abit
{
    /// Seeded random source used throughout the library.
    ///
    /// The engine is std::mt19937_64, whose output sequence is fixed by the C++ standard. The
    /// conversions to real-valued variates are implemented here rather than with the
    /// <random> distributions, whose algorithms are implementation-defined, so that a seed
    /// produces the same numbers on every platform and standard library.
    class RandomSource
    {
    public:
        explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed)
        {
        }

        [[nodiscard]] std::uint64_t seed() const noexcept
        {
            return seed_;
        }

        std::uint64_t next_u64()
        {
            return engine_();
        }

        /// Uniform in [0, 1), 53 bits of resolution.
        double uniform01()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double lower, double upper)
        {
            return lower + (upper - lower) * uniform01();
        }

        /// Uniform integer in [0, bound).
        std::uint64_t uniform_index(std::uint64_t bound)
        {
            // Rejection keeps the result unbiased.
            const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                        std::numeric_limits<std::uint64_t>::max() % bound;
            std::uint64_t x;
            do
            {
                x = engine_();
            } while (x >= limit);
            return x % bound;
        }

        /// Standard normal variate (Box-Muller, second value cached).
        double normal()
        {
            if (has_spare_)
            {
                has_spare_ = false;
                return spare_;
            }
            double u1;
            do
            {
                u1 = uniform01();
            } while (u1 <= 0.0);
            const double u2 = uniform01();
            const double radius = std::sqrt(-2.0 * std::log(u1));
            const double angle = 2.0 * std::numbers::pi * u2;
            spare_ = radius * std::sin(angle);
            has_spare_ = true;
            return radius * std::cos(angle);
        }

    private:
        std::uint64_t seed_;
        std::mt19937_64 engine_;
        double spare_{0.0};
        bool has_spare_{false};
    };
}  // namespace abit
