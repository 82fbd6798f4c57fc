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
#include <stdexcept>
#include <utility>
#include <vector>

#include "abit/run_record.hpp"

namespace abit
{
    /// Median with a nonparametric confidence interval built from order statistics.
    struct MedianCi
    {
        double lower{kInfiniteCost};
        double median{kInfiniteCost};
        double upper{kInfiniteCost};
        /// 1-based order-statistic indices of the interval endpoints.
        std::size_t lower_index{0};
        std::size_t upper_index{0};
    };

    /// P(B <= k) for B ~ Binomial(n, 1/2), k = -1 .. n (index k + 1).
    inline std::vector<double> binomial_half_cdf(std::size_t n)
    {
        std::vector<double> cdf(n + 2, 0.0);
        const double log_half_n = static_cast<double>(n) * std::log(0.5);
        double running = 0.0;
        for (std::size_t k = 0; k <= n; ++k)
        {
            const double log_pmf = std::lgamma(static_cast<double>(n) + 1.0) -
                                   std::lgamma(static_cast<double>(k) + 1.0) -
                                   std::lgamma(static_cast<double>(n - k) + 1.0) + log_half_n;
            running += std::exp(log_pmf);
            cdf[k + 1] = running;
        }
        return cdf;
    }

    /// Order-statistic indices (l, u), 1-based, of the narrowest interval [X_(l), X_(u)] whose
    /// coverage of the median, sum_{i=l}^{u-1} C(N, i) / 2^N, reaches `level`. Ties in width go
    /// to the larger coverage, then to the smaller l. When no interval reaches the level, the
    /// extremes (1, N) are returned.
    inline std::pair<std::size_t, std::size_t> median_ci_indices(std::size_t count, double level)
    {
        if (count == 0)
        {
            throw std::invalid_argument("median_ci: empty sample.");
        }
        if (count == 1)
        {
            return {1, 1};
        }
        const auto cdf = binomial_half_cdf(count);
        // coverage(l, u) = P(l <= B <= u - 1) = cdf[u] - cdf[l]
        auto coverage = [&](std::size_t l, std::size_t u) { return cdf[u] - cdf[l]; };
        for (std::size_t width = 1; width < count; ++width)
        {
            std::size_t best_l = 0;
            double best_coverage = -1.0;
            for (std::size_t l = 1; l + width <= count; ++l)
            {
                const double c = coverage(l, l + width);
                if (c >= level && c > best_coverage + 1e-12)
                {
                    best_coverage = c;
                    best_l = l;
                }
            }
            if (best_l != 0)
            {
                return {best_l, best_l + width};
            }
        }
        return {1, count};
    }

    /// Median (lower of the two middle values for even counts) and its confidence interval.
    /// Infinite values are ordinary, largest, order statistics.
    inline MedianCi median_ci(std::vector<double> samples, double level = 0.99)
    {
        if (samples.empty())
        {
            throw std::invalid_argument("median_ci: empty sample.");
        }
        std::sort(samples.begin(), samples.end());
        const std::size_t n = samples.size();
        const auto [l, u] = median_ci_indices(n, level);
        MedianCi result;
        result.median = samples[(n - 1) / 2];
        result.lower = samples[l - 1];
        result.upper = samples[u - 1];
        result.lower_index = l;
        result.upper_index = u;
        return result;
    }

    /// n points spaced evenly in log-time from `first` to `last`.
    inline std::vector<double> log_time_grid(double first, double last, std::size_t n = 200)
    {
        if (!(first > 0.0) || !(last >= first) || n == 0)
        {
            throw std::invalid_argument("log_time_grid: need 0 < first <= last and n > 0.");
        }
        std::vector<double> grid(n);
        if (n == 1)
        {
            grid[0] = last;
            return grid;
        }
        const double a = std::log(first);
        const double b = std::log(last);
        for (std::size_t i = 0; i < n; ++i)
        {
            grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
        grid.front() = first;
        grid.back() = last;
        return grid;
    }

    struct SuccessPoint
    {
        double time;
        double fraction;
    };

    /// Fraction of runs with a first solution at or before each grid time.
    inline std::vector<SuccessPoint> success_curve(const std::vector<RunRecord> &records,
                                                   const std::vector<double> &grid)
    {
        std::vector<double> first_times;
        first_times.reserve(records.size());
        for (const auto &record : records)
        {
            first_times.push_back(record.initial_time());
        }
        std::sort(first_times.begin(), first_times.end());
        std::vector<SuccessPoint> curve;
        curve.reserve(grid.size());
        for (double t : grid)
        {
            const auto solved = std::upper_bound(first_times.begin(), first_times.end(), t) - first_times.begin();
            const double fraction = records.empty() ? 0.0 : static_cast<double>(solved) /
                                                                static_cast<double>(records.size());
            curve.push_back({t, fraction});
        }
        return curve;
    }

    struct CostPoint
    {
        double time;
        double median;
        double ci_lower;
        double ci_upper;
    };

    /// Median best-so-far cost (with its confidence interval) across runs at each grid time.
    /// Runs without a solution yet count as infinite cost.
    inline std::vector<CostPoint> cost_over_time(const std::vector<RunRecord> &records,
                                                 const std::vector<double> &grid, double level = 0.99)
    {
        std::vector<CostPoint> curve;
        if (records.empty())
        {
            return curve;
        }
        curve.reserve(grid.size());
        std::vector<double> costs(records.size());
        for (double t : grid)
        {
            for (std::size_t i = 0; i < records.size(); ++i)
            {
                costs[i] = records[i].cost_at(t);
            }
            const MedianCi m = median_ci(costs, level);
            curve.push_back({t, m.median, m.lower, m.upper});
        }
        return curve;
    }
}  // namespace abit
