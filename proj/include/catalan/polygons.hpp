#pragma once

#include "catalan/error.hpp"
#include "catalan/sequence.hpp"
#include "catalan/trees.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

struct diagonal {
    std::size_t from;
    std::size_t to;

    bool operator==(const diagonal&) const = default;
    auto operator<=>(const diagonal&) const = default;
};

// Triangulation of a convex m-gon with vertices 0..m-1 labelled clockwise.
// The side (0, m-1) is the marked root side. m = 2 is the degenerate polygon
// with no triangles.
//
// Text form: "m;a-b,c-d,..." with diagonals sorted ascending, e.g. "5;0-2,0-3".
class triangulation {
public:
    // The degenerate 2-gon.
    triangulation() = default;

    // Throws invariant_error unless `diagonals` triangulate the m-gon.
    triangulation(std::size_t sides, std::vector<diagonal> diagonals)
        : sides_(sides), diagonals_(std::move(diagonals)) {
        if (sides_ < 2) throw invariant_error("polygon: needs at least 2 sides");
        for (diagonal& d : diagonals_) {
            if (d.from > d.to) std::swap(d.from, d.to);
            if (d.to >= sides_ || d.to - d.from < 2 || (d.from == 0 && d.to == sides_ - 1)) {
                throw invariant_error("polygon: " + std::to_string(d.from) + "-" +
                                      std::to_string(d.to) + " is not a diagonal of a " +
                                      std::to_string(sides_) + "-gon");
            }
        }
        std::sort(diagonals_.begin(), diagonals_.end());
        if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
            throw invariant_error("polygon: repeated diagonal");
        }
        const std::size_t expected = sides_ >= 3 ? sides_ - 3 : 0;
        if (diagonals_.size() != expected) {
            throw invariant_error("polygon: a " + std::to_string(sides_) + "-gon needs " +
                                  std::to_string(expected) + " diagonals, got " +
                                  std::to_string(diagonals_.size()));
        }
        // Non-crossing: sorted by (from asc, to desc) the intervals must nest.
        std::vector<diagonal> order = diagonals_;
        std::sort(order.begin(), order.end(), [](const diagonal& a, const diagonal& b) {
            return a.from != b.from ? a.from < b.from : a.to > b.to;
        });
        std::vector<std::size_t> open_ends;
        for (const diagonal& d : order) {
            while (!open_ends.empty() && open_ends.back() <= d.from) open_ends.pop_back();
            if (!open_ends.empty() && d.to > open_ends.back()) {
                throw invariant_error("polygon: diagonal " + std::to_string(d.from) + "-" +
                                      std::to_string(d.to) + " crosses another diagonal");
            }
            open_ends.push_back(d.to);
        }
    }

    static triangulation parse(std::string_view text) {
        std::size_t pos = 0;
        auto fail = [&](std::size_t at, const char* what) {
            return parse_error(parse_fault::syntax, at + 1,
                               std::string("polygon: ") + what + " at position " +
                                   std::to_string(at + 1));
        };
        auto number = [&]() {
            std::size_t value = 0;
            const char* begin = text.data() + pos;
            auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
            if (ec != std::errc{} || ptr == begin) throw fail(pos, "expected a number");
            pos += static_cast<std::size_t>(ptr - begin);
            return value;
        };
        const std::size_t sides = number();
        if (pos >= text.size() || text[pos] != ';') throw fail(pos, "expected ';'");
        ++pos;
        std::vector<diagonal> diagonals;
        while (pos < text.size()) {
            const std::size_t a = number();
            if (pos >= text.size() || text[pos] != '-') throw fail(pos, "expected '-'");
            ++pos;
            const std::size_t b = number();
            diagonals.push_back({a, b});
            if (pos < text.size()) {
                if (text[pos] != ',') throw fail(pos, "expected ','");
                ++pos;
                if (pos == text.size()) throw fail(pos, "expected a number");
            }
        }
        return triangulation(sides, std::move(diagonals));
    }

    std::size_t sides() const noexcept { return sides_; }
    std::size_t triangle_count() const noexcept { return sides_ - 2; }
    std::span<const diagonal> diagonals() const noexcept { return diagonals_; }

    std::string str() const {
        std::string out = std::to_string(sides_) + ";";
        for (std::size_t i = 0; i < diagonals_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(diagonals_[i].from) + "-" + std::to_string(diagonals_[i].to);
        }
        return out;
    }

    bool operator==(const triangulation&) const = default;

private:
    std::size_t sides_ = 2;
    std::vector<diagonal> diagonals_;
};

// One node per triangle. The triangle (a, c, b) standing on base (a, b)
// becomes Node(region(a, c), region(c, b)); a bare side is Empty. The root
// stands on the marked side (0, m-1).
inline binary_tree dual_tree(const triangulation& tri) {
    const std::size_t m = tri.sides();
    if (m == 2) return binary_tree{};

    // Sorted neighbour lists over sides and diagonals.
    std::vector<std::vector<std::size_t>> adjacent(m);
    auto connect = [&](std::size_t a, std::size_t b) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    };
    for (std::size_t v = 0; v + 1 < m; ++v) connect(v, v + 1);
    connect(0, m - 1);
    for (const diagonal& d : tri.diagonals()) connect(d.from, d.to);
    for (auto& list : adjacent) std::sort(list.begin(), list.end());

    // The apex is both the last neighbour of a before b and the first
    // neighbour of b after a; anything else means no unique triangle.
    auto apex = [&](std::size_t a, std::size_t b) {
        const auto& na = adjacent[a];
        const auto& nb = adjacent[b];
        auto ia = std::lower_bound(na.begin(), na.end(), b);
        auto ib = std::upper_bound(nb.begin(), nb.end(), a);
        if (ia == na.begin() || ib == nb.end() || *std::prev(ia) <= a || *ib >= b ||
            *std::prev(ia) != *ib) {
            throw invariant_error("polygon: no unique triangle on base " + std::to_string(a) + "-" +
                                  std::to_string(b));
        }
        return *ib;
    };

    struct region {
        std::size_t a;
        std::size_t b;
        std::size_t parent;
        bool as_left;
    };
    std::vector<tree_links> links;
    links.reserve(m - 2);
    std::vector<region> stack{{0, m - 1, no_child, false}};
    while (!stack.empty()) {
        const region r = stack.back();
        stack.pop_back();
        if (r.b == r.a + 1) continue;
        const std::size_t c = apex(r.a, r.b);
        const std::size_t id = links.size();
        links.emplace_back();
        if (r.parent != no_child) (r.as_left ? links[r.parent].left : links[r.parent].right) = id;
        stack.push_back({c, r.b, id, false});
        stack.push_back({r.a, c, id, true});
    }
    if (links.size() != m - 2) throw invariant_error("polygon: triangle count mismatch");
    return binary_tree::from_links(links, 0);
}

// Inverse of dual_tree. A node on base (a, b) with a left subtree of k nodes
// has its apex at c = a + k + 1.
inline triangulation rebuild_triangulation(const binary_tree& t, std::size_t sides) {
    if (sides < 2 || t.node_count() != sides - 2) {
        throw invariant_error("polygon: a tree with " + std::to_string(t.node_count()) +
                              " nodes does not fit a " + std::to_string(sides) + "-gon");
    }
    if (t.empty()) return triangulation{};

    // Subtree sizes; children follow their parent in preorder.
    std::vector<std::size_t> size(t.node_count(), 1);
    for (std::size_t i = t.node_count(); i-- > 0;) {
        if (t.node(i).has_left()) size[i] += size[t.node(i).left];
        if (t.node(i).has_right()) size[i] += size[t.node(i).right];
    }

    std::vector<diagonal> diagonals;
    diagonals.reserve(sides - 3);
    struct region {
        std::size_t node;
        std::size_t a;
        std::size_t b;
    };
    std::vector<region> stack{{0, 0, sides - 1}};
    while (!stack.empty()) {
        const region r = stack.back();
        stack.pop_back();
        const tree_links& n = t.node(r.node);
        const std::size_t left_size = n.has_left() ? size[n.left] : 0;
        const std::size_t c = r.a + left_size + 1;
        if (c != r.a + 1) diagonals.push_back({r.a, c});
        if (c != r.b - 1) diagonals.push_back({c, r.b});
        if (n.has_left()) stack.push_back({n.left, r.a, c});
        if (n.has_right()) stack.push_back({n.right, c, r.b});
    }
    return triangulation(sides, std::move(diagonals));
}

inline catalan_sequence encode_polygon(const triangulation& tri) { return encode_tree(dual_tree(tri)); }

inline triangulation decode_polygon(const catalan_sequence& s) {
    return rebuild_triangulation(decode_tree(s), s.semilength() + 2);
}

} // namespace catalan
