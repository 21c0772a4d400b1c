#pragma once

#include "catalan/error.hpp"
#include "catalan/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

// Segment between circle points `first` < `second` (labels 1..2n).
struct chord {
    std::size_t first;
    std::size_t second;

    bool operator==(const chord&) const = default;
    auto operator<=>(const chord&) const = default;
};

// Non-crossing perfect matching of the points 1..2n on a circle, labelled
// clockwise. Chords are kept sorted by their smaller endpoint.
//
// Text form: comma-separated "i-j" pairs, e.g. "1-8,2-7,3-4,5-6".
class chord_diagram {
public:
    chord_diagram() = default;

    // Endpoints of each chord may be given in either order. Throws
    // invariant_error unless the chords form a non-crossing perfect matching.
    explicit chord_diagram(std::vector<chord> chords) : chords_(std::move(chords)) {
        const std::size_t points = 2 * chords_.size();
        std::vector<std::size_t> partner(points + 1, 0);
        for (chord& c : chords_) {
            if (c.first > c.second) std::swap(c.first, c.second);
            if (c.first < 1 || c.second > points || c.first == c.second) {
                throw invariant_error("chords: endpoint out of range 1.." + std::to_string(points));
            }
            if (partner[c.first] != 0 || partner[c.second] != 0) {
                throw invariant_error("chords: point used twice");
            }
            partner[c.first] = c.second;
            partner[c.second] = c.first;
        }
        std::sort(chords_.begin(), chords_.end());

        // Non-crossing iff chords close in reverse order of opening.
        std::vector<std::size_t> open;
        for (std::size_t p = 1; p <= points; ++p) {
            if (partner[p] > p) {
                open.push_back(p);
            } else {
                if (open.empty() || open.back() != partner[p]) {
                    throw invariant_error("chords: segments " + std::to_string(partner[p]) + "-" +
                                          std::to_string(p) + " cross another segment");
                }
                open.pop_back();
            }
        }
        for (const chord& c : chords_) {
            detail::check((c.second - c.first) % 2 == 1, "chords: non-crossing chord spans an even gap");
        }
    }

    static chord_diagram parse(std::string_view text) {
        std::vector<chord> chords;
        std::size_t pos = 0;
        auto fail = [&](std::size_t at, const char* what) {
            return parse_error(parse_fault::syntax, at + 1,
                               std::string("chords: ") + what + " at position " +
                                   std::to_string(at + 1));
        };
        auto number = [&]() {
            std::size_t value = 0;
            const char* begin = text.data() + pos;
            const char* end = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{} || ptr == begin) throw fail(pos, "expected a number");
            pos += static_cast<std::size_t>(ptr - begin);
            return value;
        };
        while (pos < text.size()) {
            const std::size_t i = number();
            if (pos >= text.size() || text[pos] != '-') throw fail(pos, "expected '-'");
            ++pos;
            const std::size_t j = number();
            chords.push_back({i, j});
            if (pos < text.size()) {
                if (text[pos] != ',') throw fail(pos, "expected ','");
                ++pos;
                if (pos == text.size()) throw fail(pos, "expected a number");
            }
        }
        return chord_diagram(std::move(chords));
    }

    std::size_t size() const noexcept { return chords_.size(); }
    std::span<const chord> chords() const noexcept { return chords_; }

    std::string str() const {
        std::string out;
        for (const chord& c : chords_) {
            if (!out.empty()) out.push_back(',');
            out += std::to_string(c.first) + "-" + std::to_string(c.second);
        }
        return out;
    }

    bool operator==(const chord_diagram&) const = default;

private:
    std::vector<chord> chords_;
};

// 0 at the smaller endpoint of each chord, 1 at the larger.
inline catalan_sequence encode_chords(const chord_diagram& d) {
    std::string bits(2 * d.size(), '0');
    for (const chord& c : d.chords()) bits[c.second - 1] = '1';
    return detail::trusted_sequence(std::move(bits));
}

// Repeatedly takes the leftmost adjacent "01" among the positions not yet
// used, records it as a chord on the original positions, and removes it.
inline chord_diagram decode_chords(const catalan_sequence& s) {
    const std::size_t len = s.size();
    // Doubly linked list over remaining positions, with sentinels 0 and len+1.
    std::vector<std::size_t> prev(len + 2);
    std::vector<std::size_t> next(len + 2);
    for (std::size_t p = 0; p <= len + 1; ++p) {
        prev[p] = p == 0 ? 0 : p - 1;
        next[p] = p + 1;
    }
    auto bit = [&](std::size_t p) { return s[p - 1]; };

    std::vector<chord> chords;
    chords.reserve(s.semilength());
    // No "01" starts to the left of `cursor`.
    std::size_t cursor = next[0];
    while (chords.size() < s.semilength()) {
        while (cursor <= len && !(next[cursor] <= len && !bit(cursor) && bit(next[cursor]))) {
            cursor = next[cursor];
        }
        detail::check(cursor <= len, "decode_chords: no 01 left in a nonempty remainder");
        const std::size_t zero = cursor;
        const std::size_t one = next[zero];
        chords.push_back({zero, one});
        const std::size_t before = prev[zero];
        const std::size_t after = next[one];
        next[before] = after;
        prev[after] = before;
        // Removing the pair only creates the new adjacency before/after.
        cursor = before == 0 ? next[0] : before;
    }
    return chord_diagram(std::move(chords));
}

} // namespace catalan
