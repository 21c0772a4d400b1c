#pragma once

#include "catalan/chords.hpp"
#include "catalan/error.hpp"
#include "catalan/expressions.hpp"
#include "catalan/lattice.hpp"
#include "catalan/polygons.hpp"
#include "catalan/sequence.hpp"
#include "catalan/trees.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// Every family of Catalan objects with a text form. All of them go through
// catalan_sequence, which makes any family convertible into any other.
enum class family { sequence, tree, path, pm, chords, mult, rpn, rpn_paper, polygon };

inline constexpr std::array all_families{family::sequence, family::tree,  family::path,
                                         family::pm,       family::chords, family::mult,
                                         family::rpn,      family::rpn_paper, family::polygon};

// Families whose decoder accepts every Catalan sequence.
inline constexpr bool is_total(family f) noexcept { return f != family::rpn_paper; }

inline std::string_view family_name(family f) noexcept {
    switch (f) {
    case family::sequence: return "sequence";
    case family::tree: return "tree";
    case family::path: return "path";
    case family::pm: return "pm";
    case family::chords: return "chords";
    case family::mult: return "mult";
    case family::rpn: return "rpn";
    case family::rpn_paper: return "rpn-paper";
    case family::polygon: return "polygon";
    }
    return "?";
}

// Accepts the canonical names plus the aliases ballot/votes (pm) and
// mountain (sequence).
inline std::optional<family> parse_family(std::string_view name) {
    for (family f : all_families) {
        if (family_name(f) == name) return f;
    }
    if (name == "ballot" || name == "votes") return family::pm;
    if (name == "mountain") return family::sequence;
    return std::nullopt;
}

inline catalan_sequence encode_family(family f, std::string_view text) {
    switch (f) {
    case family::sequence: return validate(text);
    case family::tree: return encode_tree(parse_tree(text));
    case family::path: return encode_path(grid_path::parse(text));
    case family::pm: return encode_pm(pm_sequence::parse(text));
    case family::chords: return encode_chords(chord_diagram::parse(text));
    case family::mult: return encode_expression(parse_mult(text));
    case family::rpn: return encode_expression(parse_rpn(text));
    case family::rpn_paper: return rpn_paper_encode(parse_rpn(text));
    case family::polygon: return encode_polygon(triangulation::parse(text));
    }
    throw internal_error("encode_family: unknown family");
}

// Throws not_in_image when `f` is partial and `s` lies outside its image.
inline std::string decode_family(family f, const catalan_sequence& s) {
    switch (f) {
    case family::sequence: return s.str();
    case family::tree: return render_tree(decode_tree(s));
    case family::path: return decode_path(s).str();
    case family::pm: return decode_pm(s).str();
    case family::chords: return decode_chords(s).str();
    case family::mult: return render_mult(decode_expression(s));
    case family::rpn: return render_rpn(decode_expression(s));
    case family::rpn_paper: return render_rpn(rpn_paper_decode(s));
    case family::polygon: return decode_polygon(s).str();
    }
    throw internal_error("decode_family: unknown family");
}

// Encode with `from`, decode with `to`. Semilength is preserved.
inline std::string transcode(family from, family to, std::string_view text) {
    return decode_family(to, encode_family(from, text));
}

// Mountain range drawing, highest row first. Step i occupies column i: a 0
// draws '/' on the row of the altitude before the step, a 1 draws '\' on the
// row of the altitude after it. Trailing blanks are trimmed.
inline std::vector<std::string> render_mountain(const catalan_sequence& s) {
    const std::vector<std::size_t> heights = altitude_profile(s);
    std::size_t top = 0;
    for (std::size_t h : heights) top = std::max(top, h);

    std::vector<std::string> rows(top, std::string(s.size(), ' '));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t row = s[i] ? heights[i + 1] : heights[i];
        rows[top - 1 - row][i] = s[i] ? '\\' : '/';
    }
    for (std::string& r : rows) r.erase(r.find_last_not_of(' ') + 1);
    return rows;
}

// Graphviz digraph; nodes v0, v1, ... in preorder and one labelled edge per
// child.
inline std::string render_dot(const binary_tree& t) {
    std::string out = "digraph tree {\n";
    for (std::size_t i = 0; i < t.node_count(); ++i) out += "  v" + std::to_string(i) + ";\n";
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const tree_links& n = t.node(i);
        if (n.has_left()) {
            out += "  v" + std::to_string(i) + " -> v" + std::to_string(n.left) + " [label=\"L\"];\n";
        }
        if (n.has_right()) {
            out += "  v" + std::to_string(i) + " -> v" + std::to_string(n.right) + " [label=\"R\"];\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace catalan
