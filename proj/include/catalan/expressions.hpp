#pragma once

#include "catalan/error.hpp"
#include "catalan/sequence.hpp"
#include "catalan/trees.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// Multiplication expressions and their postfix form share one abstract type,
// extended_tree: leaves are the factors 'a', internal nodes are '*'.

// Expr := "a" | "(" Expr "*" Expr ")"
inline extended_tree parse_mult(std::string_view text) {
    auto [links, root] = detail::parse_nested(text, detail::mult_syntax);
    return extended_tree::from_links(links, root);
}

inline std::string render_mult(const extended_tree& e) {
    return detail::render_nested(e.nodes(), 0, detail::mult_syntax);
}

// Postfix word over {'a', '*'}.
inline extended_tree parse_rpn(std::string_view text) {
    std::vector<tree_links> links;
    std::vector<std::size_t> operands;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const std::size_t id = links.size();
        if (text[i] == 'a') {
            links.emplace_back();
        } else if (text[i] == '*') {
            if (operands.size() < 2) {
                throw parse_error(parse_fault::stack_underflow, i + 1,
                                  "rpn: operator at position " + std::to_string(i + 1) +
                                      " lacks two operands");
            }
            const std::size_t right = operands.back();
            operands.pop_back();
            const std::size_t left = operands.back();
            operands.pop_back();
            links.push_back({left, right});
        } else {
            throw parse_error(parse_fault::syntax, i + 1,
                              std::string("rpn: unexpected character '") + text[i] +
                                  "' at position " + std::to_string(i + 1));
        }
        operands.push_back(id);
    }
    if (operands.empty()) throw parse_error(parse_fault::syntax, 1, "rpn: empty expression");
    if (operands.size() > 1) {
        throw parse_error(parse_fault::excess_operands, text.size(),
                          "rpn: " + std::to_string(operands.size()) + " values left on the stack");
    }
    return extended_tree::from_links(links, operands.back());
}

// Postorder: left, right, then '*' for each internal node.
inline std::string render_rpn(const extended_tree& e) {
    std::string out;
    out.reserve(e.size());
    std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (e.is_leaf(node)) {
            out.push_back('a');
        } else if (expanded) {
            out.push_back('*');
        } else {
            stack.push_back({node, true});
            stack.push_back({e.node(node).right, false});
            stack.push_back({e.node(node).left, false});
        }
    }
    return out;
}

// Total codec: drop the leaves, then encode the binary tree. An expression
// with n multiplications has semilength n.
inline catalan_sequence encode_expression(const extended_tree& e) {
    return encode_tree(strip_leaves(e));
}

inline extended_tree decode_expression(const catalan_sequence& s) {
    return extend_tree(decode_tree(s));
}

// Postfix word with each operand written as 0 and each operator as 1, plus a
// trailing 1. An expression with k operands has semilength k.
inline catalan_sequence rpn_paper_encode(const extended_tree& e) {
    std::string bits = render_rpn(e);
    for (char& c : bits) c = c == 'a' ? '0' : '1';
    bits.push_back('1');
    return detail::trusted_sequence(std::move(bits));
}

// Partial inverse of rpn_paper_encode. Only sequences of the form 0 u 1 with
// u a Catalan sequence lie in its image; anything else is not_in_image.
inline extended_tree rpn_paper_decode(const catalan_sequence& s) {
    if (s.empty()) throw not_in_image("rpn-paper: the empty sequence encodes no expression");
    std::string word = s.str();
    word.pop_back();
    for (char& c : word) c = c == '0' ? 'a' : '*';
    try {
        return parse_rpn(word);
    } catch (const parse_error& e) {
        throw not_in_image("rpn-paper: " + s.str() + " is not a postfix code (" + e.what() + ")");
    }
}

} // namespace catalan
