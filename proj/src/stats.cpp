#include "botlint/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace botlint {

namespace {

// pairs won by a (ties half), via a sorted copy of b
double count_wins(std::span<const double> a, std::span<const double> b) {
    std::vector<double> sorted_b(b.begin(), b.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    double wins = 0;
    for (double value : a) {
        auto lower = std::lower_bound(sorted_b.begin(), sorted_b.end(), value);
        auto upper = std::upper_bound(sorted_b.begin(), sorted_b.end(), value);
        wins += static_cast<double>(lower - sorted_b.begin());
        wins += 0.5 * static_cast<double>(upper - lower);
    }
    return wins;
}

} // namespace

double vargha_delaney_a12(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw EmptySampleError();
    return count_wins(a, b) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw EmptySampleError();
    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;

    // combined sample with midranks
    std::vector<std::pair<double, int>> all; // (value, 0 = a / 1 = b)
    all.reserve(a.size() + b.size());
    for (double v : a)
        all.emplace_back(v, 0);
    for (double v : b)
        all.emplace_back(v, 1);
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    double rank_sum_a = 0;
    double tie_term = 0; // sum of t^3 - t over tie groups
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].first == all[i].first)
            ++j;
        double t = static_cast<double>(j - i);
        double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (all[k].second == 0)
                rank_sum_a += midrank;
        tie_term += t * t * t - t;
        i = j;
    }

    double u = rank_sum_a - n1 * (n1 + 1) / 2.0;

    // dual route: the same U must come out of direct pair counting
    double wins = count_wins(a, b);
    if (std::abs(u - wins) > 1e-9 * std::max(1.0, std::abs(u)))
        throw std::logic_error("rank-sum U disagrees with pair counting");

    double mean = n1 * n2 / 2.0;
    double variance = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)));
    MannWhitneyResult result;
    result.u = u;
    if (variance <= 0) {
        result.p_value = 1.0; // all observations tied
        return result;
    }
    double z = (std::abs(u - mean) - 0.5) / std::sqrt(variance);
    if (z < 0)
        z = 0;
    result.p_value = std::erfc(z / std::sqrt(2.0));
    if (result.p_value > 1.0)
        result.p_value = 1.0;
    return result;
}

} // namespace botlint
