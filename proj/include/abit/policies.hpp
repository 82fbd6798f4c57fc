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
#include <functional>
#include <stdexcept>
#include <string>

namespace abit
{
    /// Inflation and truncation factors for each search of an RGG, and how many searches each
    /// RGG receives before it is densified.
    struct PolicySchedule
    {
        /// (index of the search within the current batch, q) -> factor >= 1
        using Factor = std::function<double(std::size_t, std::size_t)>;

        Factor inflation;
        Factor truncation;
        std::size_t searches_per_batch{2};

        /// First search of a batch with inflation 1e6, later ones with 1 + 10/q; truncation
        /// 1 + 5/q throughout.
        static PolicySchedule default_schedule(std::size_t searches_per_batch = 2)
        {
            return {default_inflation(), default_truncation(), searches_per_batch};
        }

        static Factor default_inflation()
        {
            return [](std::size_t search, std::size_t q)
            { return search == 0 ? 1e6 : 1.0 + 10.0 / static_cast<double>(q); };
        }

        static Factor default_truncation()
        {
            return [](std::size_t, std::size_t q) { return 1.0 + 5.0 / static_cast<double>(q); };
        }

        static Factor constant(double value)
        {
            if (!(value >= 1.0))
            {
                throw std::invalid_argument("PolicySchedule: factors must be at least 1.");
            }
            return [value](std::size_t, std::size_t) { return value; };
        }

        /// "paper-default", "unit", or "constant:<value>".
        static Factor parse(const std::string &name, bool for_inflation)
        {
            if (name == "paper-default")
            {
                return for_inflation ? default_inflation() : default_truncation();
            }
            if (name == "unit")
            {
                return constant(1.0);
            }
            const std::string prefix = "constant:";
            if (name.rfind(prefix, 0) == 0)
            {
                try
                {
                    return constant(std::stod(name.substr(prefix.size())));
                }
                catch (const std::logic_error &)
                {
                    throw std::invalid_argument("PolicySchedule: bad constant in '" + name + "'.");
                }
            }
            throw std::invalid_argument("PolicySchedule: unknown schedule '" + name + "'.");
        }
    };
}  // namespace abit
