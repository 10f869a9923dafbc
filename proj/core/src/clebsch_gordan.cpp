#include "spinfloq/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace spinfloq {

namespace {

// log n! table, grown on demand; sized for 4N at the spin counts in use
double log_factorial(int n) {
    static std::vector<double> table{0.0};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() + std::log(static_cast<double>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

// integer half of a doubled (even) quantum-number combination
int half(int doubled) { return doubled / 2; }

}  // namespace

double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2,
                      int twice_cap_j, int twice_cap_m) {
    if (twice_j1 < 0 || twice_j2 < 0 || twice_cap_j < 0)
        throw std::invalid_argument("clebsch_gordan: negative angular momentum");
    // selection rules: coefficient is zero, not an error
    if (twice_m1 + twice_m2 != twice_cap_m) return 0.0;
    if (std::abs(twice_m1) > twice_j1 || std::abs(twice_m2) > twice_j2 ||
        std::abs(twice_cap_m) > twice_cap_j)
        return 0.0;
    if ((twice_j1 + twice_m1) % 2 != 0 || (twice_j2 + twice_m2) % 2 != 0 ||
        (twice_cap_j + twice_cap_m) % 2 != 0)
        return 0.0;
    if (twice_cap_j < std::abs(twice_j1 - twice_j2) || twice_cap_j > twice_j1 + twice_j2)
        return 0.0;
    if ((twice_j1 + twice_j2 + twice_cap_j) % 2 != 0) return 0.0;

    const double log_prefactor =
        0.5 * (std::log(twice_cap_j + 1.0) +
               log_factorial(half(twice_j1 + twice_j2 - twice_cap_j)) +
               log_factorial(half(twice_j1 - twice_j2 + twice_cap_j)) +
               log_factorial(half(-twice_j1 + twice_j2 + twice_cap_j)) -
               log_factorial(half(twice_j1 + twice_j2 + twice_cap_j) + 1) +
               log_factorial(half(twice_j1 + twice_m1)) +
               log_factorial(half(twice_j1 - twice_m1)) +
               log_factorial(half(twice_j2 + twice_m2)) +
               log_factorial(half(twice_j2 - twice_m2)) +
               log_factorial(half(twice_cap_j + twice_cap_m)) +
               log_factorial(half(twice_cap_j - twice_cap_m)));

    const int k_min = std::max({0, half(twice_j2 - twice_cap_j - twice_m1),
                                half(twice_j1 + twice_m2 - twice_cap_j)});
    const int k_max = std::min({half(twice_j1 + twice_j2 - twice_cap_j),
                                half(twice_j1 - twice_m1), half(twice_j2 + twice_m2)});
    if (k_min > k_max) return 0.0;

    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const double log_term =
            log_factorial(k) + log_factorial(half(twice_j1 + twice_j2 - twice_cap_j) - k) +
            log_factorial(half(twice_j1 - twice_m1) - k) +
            log_factorial(half(twice_j2 + twice_m2) - k) +
            log_factorial(half(twice_cap_j - twice_j2 + twice_m1) + k) +
            log_factorial(half(twice_cap_j - twice_j1 - twice_m2) + k);
        const double term = std::exp(log_prefactor - log_term);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace spinfloq
