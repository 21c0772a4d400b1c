#pragma once

#include "catalan/bigint.hpp"
#include "catalan/counting.hpp"
#include "catalan/error.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

class catalan_sequence;

namespace detail {
catalan_sequence trusted_sequence(std::string bits);
} // namespace detail

// A binary word of length 2n with n zeros and n ones in which no prefix holds
// more ones than zeros. Only obtainable through validate(), so every instance
// satisfies the invariant.
//
// Text form: the symbols as characters '0' and '1', no separators.
class catalan_sequence {
public:
    // The empty sequence (semilength 0).
    catalan_sequence() = default;

    std::size_t size() const noexcept { return bits_.size(); }
    std::size_t semilength() const noexcept { return bits_.size() / 2; }
    bool empty() const noexcept { return bits_.empty(); }

    // Symbol at 0-based index i: false for 0, true for 1.
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    const std::string& str() const noexcept { return bits_; }

    friend bool operator==(const catalan_sequence&, const catalan_sequence&) = default;
    // Lexicographic with 0 < 1.
    friend std::strong_ordering operator<=>(const catalan_sequence& a, const catalan_sequence& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    explicit catalan_sequence(std::string bits) : bits_(std::move(bits)) {}

    friend catalan_sequence validate(std::string_view);
    friend catalan_sequence detail::trusted_sequence(std::string);

    std::string bits_;
};

// Checks both Catalan conditions. Throws sequence_error on the first fault:
// a symbol other than '0'/'1', odd length, the first prefix (1-based) with
// more ones than zeros, or unequal totals.
inline catalan_sequence validate(std::string_view bits) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw sequence_error(sequence_fault::bad_symbol, i + 1,
                                 "invalid symbol at position " + std::to_string(i + 1));
        }
    }
    if (bits.size() % 2 != 0) {
        throw sequence_error(sequence_fault::odd_length, 0,
                             "odd length " + std::to_string(bits.size()));
    }
    long balance = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        balance += bits[i] == '0' ? 1 : -1;
        if (balance < 0) {
            throw sequence_error(sequence_fault::prefix_violation, i + 1,
                                 "prefix violation at position " + std::to_string(i + 1));
        }
    }
    if (balance != 0) {
        throw sequence_error(sequence_fault::count_mismatch, 0,
                             "count mismatch: " + std::to_string(balance) + " more 0s than 1s");
    }
    return catalan_sequence(std::string(bits));
}

// Wraps bits that an encoder produced. Re-validates: encoders are expected to
// emit only Catalan sequences, so a failure is an internal error.
inline catalan_sequence detail::trusted_sequence(std::string bits) {
    try {
        return validate(bits);
    } catch (const sequence_error& e) {
        throw internal_error(std::string("encoder produced an invalid sequence: ") + e.what());
    }
}

// Altitude profile: entry i is (#0 - #1) over the first i symbols, so the
// result has 2n + 1 entries, starts and ends at 0 and never goes negative.
inline std::vector<std::size_t> altitude_profile(const catalan_sequence& s) {
    std::vector<std::size_t> heights;
    heights.reserve(s.size() + 1);
    std::size_t h = 0;
    heights.push_back(h);
    for (std::size_t i = 0; i < s.size(); ++i) {
        h = s[i] ? h - 1 : h + 1;
        heights.push_back(h);
    }
    return heights;
}

inline constexpr std::size_t default_enumeration_cap = 16;

// All sequences of semilength n in ascending lexicographic order.
inline std::vector<catalan_sequence> enumerate(std::size_t n,
                                               std::size_t cap = default_enumeration_cap) {
    if (n > cap) {
        throw range_error("enumerate: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
    std::vector<catalan_sequence> out;
    out.reserve(static_cast<std::size_t>(catalan_closed(n)));

    // Depth-first over the prefix tree, trying 0 before 1.
    std::string word(2 * n, '0');
    struct frame {
        std::size_t zeros;
        std::size_t ones;
    };
    std::vector<std::pair<frame, char>> stack;
    stack.push_back({{0, 0}, '\0'});
    while (!stack.empty()) {
        auto [f, placed] = stack.back();
        stack.pop_back();
        const std::size_t pos = f.zeros + f.ones;
        if (pos > 0) word[pos - 1] = placed;
        if (pos == 2 * n) {
            out.push_back(detail::trusted_sequence(word));
            continue;
        }
        // Pushed in reverse so the 0-branch is explored first.
        if (f.ones < f.zeros) stack.push_back({{f.zeros, f.ones + 1}, '1'});
        if (f.zeros < n) stack.push_back({{f.zeros + 1, f.ones}, '0'});
    }
    return out;
}

namespace detail {

// completions[r][h]: number of ways to finish a sequence with r symbols left
// from altitude h, never dipping below 0 and ending at 0 (ballot numbers).
class ballot_table {
public:
    explicit ballot_table(std::size_t n) : completions_(2 * n + 1) {
        const std::size_t width = n + 2;
        for (auto& row : completions_) row.assign(width, big_int(0));
        completions_[0][0] = 1;
        for (std::size_t r = 1; r <= 2 * n; ++r) {
            for (std::size_t h = 0; h + 1 < width; ++h) {
                big_int ways = completions_[r - 1][h + 1];
                if (h > 0) ways += completions_[r - 1][h - 1];
                completions_[r][h] = std::move(ways);
            }
        }
    }

    const big_int& completions(std::size_t remaining, std::size_t height) const {
        static const big_int zero = 0;
        if (height >= completions_[remaining].size()) return zero;
        return completions_[remaining][height];
    }

private:
    std::vector<std::vector<big_int>> completions_;
};

} // namespace detail

// 0-based position of s within enumerate(s.semilength()).
inline big_int rank(const catalan_sequence& s) {
    const detail::ballot_table table(s.semilength());
    big_int result = 0;
    std::size_t h = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t remaining = s.size() - i - 1;
        if (s[i]) {
            // Every sequence with 0 here (same prefix) sorts earlier.
            result += table.completions(remaining, h + 1);
            --h;
        } else {
            ++h;
        }
    }
    return result;
}

// k-th sequence (0-based) of enumerate(n). Throws range_error when k >= C_n.
inline catalan_sequence unrank(std::size_t n, const big_int& k) {
    const detail::ballot_table table(n);
    if (k < 0 || k >= table.completions(2 * n, 0)) {
        throw range_error("unrank: index " + to_decimal(k) + " out of range for n = " +
                          std::to_string(n));
    }
    big_int rest = k;
    std::string word;
    word.reserve(2 * n);
    std::size_t h = 0;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const std::size_t remaining = 2 * n - i - 1;
        const big_int& with_zero = table.completions(remaining, h + 1);
        if (rest < with_zero) {
            word.push_back('0');
            ++h;
        } else {
            rest -= with_zero;
            word.push_back('1');
            --h;
        }
    }
    return detail::trusted_sequence(std::move(word));
}

// unrank(n, U) with U uniform on [0, C_n), drawn from a 64-bit Mersenne
// Twister seeded with `seed`. Deterministic per (n, seed).
inline catalan_sequence random_uniform(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    boost::random::uniform_int_distribution<big_int> pick(big_int(0), catalan_closed(n) - 1);
    return unrank(n, pick(engine));
}

} // namespace catalan
