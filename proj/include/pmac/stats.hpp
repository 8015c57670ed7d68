#pragma once

#include <cmath>
#include <cstdint>

namespace pmac {

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson score interval for a binomial proportion; behaves sensibly at
/// small or zero counts where the normal approximation collapses.
inline Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.959964) {
    if (trials <= 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double margin = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    Interval ci;
    ci.low = center - margin;
    ci.high = center + margin;
    if (ci.low < 0.0) ci.low = 0.0;
    if (ci.high > 1.0) ci.high = 1.0;
    return ci;
}

}  // namespace pmac
