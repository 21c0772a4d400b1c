#pragma once

#include "catalan/error.hpp"
#include "catalan/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// Monotone path from (0,0) to (n,n) using unit steps H (horizontal) and V
// (vertical) that never crosses the diagonal: every prefix has #V <= #H.
// Touching the diagonal is allowed.
class grid_path {
public:
    enum class step : std::uint8_t { horizontal, vertical };

    grid_path() = default;

    // Throws parse_error on characters other than 'H'/'V' and
    // invariant_error when the path is unbalanced or crosses the diagonal.
    static grid_path parse(std::string_view text) {
        std::vector<step> steps;
        steps.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == 'H') {
                steps.push_back(step::horizontal);
            } else if (text[i] == 'V') {
                steps.push_back(step::vertical);
            } else {
                throw parse_error(parse_fault::syntax, i + 1,
                                  std::string("path: unexpected character '") + text[i] +
                                      "' at position " + std::to_string(i + 1));
            }
        }
        return grid_path(std::move(steps));
    }

    explicit grid_path(std::vector<step> steps) : steps_(std::move(steps)) {
        long lead = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            lead += steps_[i] == step::horizontal ? 1 : -1;
            if (lead < 0) {
                throw invariant_error("path crosses the diagonal at step " + std::to_string(i + 1));
            }
        }
        if (lead != 0) throw invariant_error("path does not end at (n, n)");
    }

    std::span<const step> steps() const noexcept { return steps_; }
    std::size_t grid_size() const noexcept { return steps_.size() / 2; }

    std::string str() const {
        std::string out;
        out.reserve(steps_.size());
        for (step s : steps_) out.push_back(s == step::horizontal ? 'H' : 'V');
        return out;
    }

    bool operator==(const grid_path&) const = default;

private:
    std::vector<step> steps_;
};

// H -> 0, V -> 1.
inline catalan_sequence encode_path(const grid_path& p) {
    std::string bits;
    bits.reserve(p.steps().size());
    for (auto s : p.steps()) bits.push_back(s == grid_path::step::horizontal ? '0' : '1');
    return detail::trusted_sequence(std::move(bits));
}

inline grid_path decode_path(const catalan_sequence& s) {
    std::vector<grid_path::step> steps;
    steps.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        steps.push_back(s[i] ? grid_path::step::vertical : grid_path::step::horizontal);
    }
    return grid_path(std::move(steps));
}

// (x_1, ..., x_2n) over {+1, -1} with nonnegative partial sums and total 0.
// Read as an election count (+1 for the first candidate) this is a ballot
// in which the first candidate is never behind.
//
// Text form: '+' and '-' characters, e.g. "++-+--".
class pm_sequence {
public:
    pm_sequence() = default;

    pm_sequence(std::initializer_list<int> values) : pm_sequence(std::vector<int>(values)) {}

    explicit pm_sequence(const std::vector<int>& values) {
        values_.reserve(values.size());
        long sum = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] != 1 && values[i] != -1) {
                throw invariant_error("pm: entry " + std::to_string(i + 1) + " is not +1 or -1");
            }
            sum += values[i];
            if (sum < 0) {
                throw invariant_error("pm: partial sum negative at position " +
                                      std::to_string(i + 1));
            }
            values_.push_back(static_cast<std::int8_t>(values[i]));
        }
        if (sum != 0) throw invariant_error("pm: total is not zero");
    }

    static pm_sequence parse(std::string_view text) {
        std::vector<int> values;
        values.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '+') {
                values.push_back(1);
            } else if (text[i] == '-') {
                values.push_back(-1);
            } else {
                throw parse_error(parse_fault::syntax, i + 1,
                                  std::string("pm: unexpected character '") + text[i] +
                                      "' at position " + std::to_string(i + 1));
            }
        }
        return pm_sequence(values);
    }

    std::span<const std::int8_t> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::string str() const {
        std::string out;
        out.reserve(values_.size());
        for (auto v : values_) out.push_back(v > 0 ? '+' : '-');
        return out;
    }

    bool operator==(const pm_sequence&) const = default;

private:
    std::vector<std::int8_t> values_;
};

// +1 -> 0, -1 -> 1.
inline catalan_sequence encode_pm(const pm_sequence& x) {
    std::string bits;
    bits.reserve(x.size());
    for (auto v : x.values()) bits.push_back(v > 0 ? '0' : '1');
    return detail::trusted_sequence(std::move(bits));
}

inline pm_sequence decode_pm(const catalan_sequence& s) {
    std::vector<int> values;
    values.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) values.push_back(s[i] ? -1 : 1);
    return pm_sequence(values);
}

} // namespace catalan
