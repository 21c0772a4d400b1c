#pragma once

#include "catalan/bigint.hpp"
#include "catalan/error.hpp"

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

namespace catalan {

// Coefficients of a truncated power series; coefficients[k] multiplies z^k.
struct series_prefix {
    std::vector<big_int> coefficients;

    bool operator==(const series_prefix&) const = default;
};

// Exact binomial coefficient; zero when b > a.
inline big_int binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    big_int result = 1;
    // Each partial product is itself a binomial coefficient, so every
    // division below is exact.
    for (std::uint64_t i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

// C_n = binom(2n, n) / (n + 1).
inline big_int catalan_closed(std::uint64_t n) {
    big_int quotient;
    big_int remainder;
    boost::multiprecision::divide_qr(binomial(2 * n, n), big_int(n + 1), quotient, remainder);
    detail::check(remainder == 0, "catalan_closed: binom(2n, n) not divisible by n + 1");
    return quotient;
}

namespace detail {

// C_0..C_k grown on demand by the convolution recurrence. Shared across
// callers, so every access holds the lock.
struct convolution_memo {
    std::mutex mutex;
    std::vector<big_int> values{big_int(1)};

    big_int get(std::uint64_t n) {
        std::lock_guard lock(mutex);
        while (values.size() <= n) {
            // C_{k+1} = sum_{i=0..k} C_i C_{k-i}
            const std::size_t k = values.size() - 1;
            big_int next = 0;
            for (std::size_t i = 0; i <= k; ++i) next += values[i] * values[k - i];
            values.push_back(std::move(next));
        }
        return values[n];
    }
};

inline convolution_memo& convolution_table() {
    static convolution_memo memo;
    return memo;
}

} // namespace detail

// C_{n+1} = C_0 C_n + C_1 C_{n-1} + ... + C_n C_0 with C_0 = 1.
inline big_int catalan_convolution(std::uint64_t n) { return detail::convolution_table().get(n); }

// (k + 2) C_{k+1} = (4k + 2) C_k, iterated from C_0 = 1.
inline big_int catalan_linear(std::uint64_t n) {
    big_int value = 1;
    big_int quotient;
    big_int remainder;
    for (std::uint64_t k = 0; k < n; ++k) {
        boost::multiprecision::divide_qr(value * (4 * k + 2), big_int(k + 2), quotient, remainder);
        detail::check(remainder == 0, "catalan_linear: non-exact division in the linear recurrence");
        value = quotient;
    }
    return value;
}

namespace detail {

// [z^k] (1 + z C^2), using coefficients 0..k-1 of C.
inline big_int fixed_point_coefficient(const std::vector<big_int>& c, std::size_t k) {
    if (k == 0) return 1;
    big_int sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += c[i] * c[k - 1 - i];
    return sum;
}

} // namespace detail

// First `limit` coefficients of the power series C with C(0) = 1 and
// z C^2 = C - 1, as the fixed point of C <- 1 + z C^2 (truncated).
//
// Starting from C = 1, each application of the map settles exactly one more
// coefficient, and coefficient k of the image depends only on coefficients
// below k. The iterate is therefore kept truncated to its settled prefix, and
// each step appends the newly settled coefficient. A final full application
// of the map must leave the prefix unchanged.
inline series_prefix catalan_series(std::size_t limit) {
    if (limit == 0) throw range_error("catalan_series: limit must be positive");

    std::vector<big_int> iterate{big_int(1)};
    iterate.reserve(limit);
    while (iterate.size() < limit) {
        iterate.push_back(detail::fixed_point_coefficient(iterate, iterate.size()));
    }
    for (std::size_t k = 0; k < limit; ++k) {
        detail::check(detail::fixed_point_coefficient(iterate, k) == iterate[k],
                      "catalan_series: prefix is not a fixed point of C = 1 + z C^2");
    }
    return series_prefix{std::move(iterate)};
}

} // namespace catalan
