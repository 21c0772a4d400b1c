#pragma once

#include "catalan/error.hpp"
#include "catalan/sequence.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

inline constexpr std::size_t no_child = static_cast<std::size_t>(-1);

// Child links of one node. Indices refer to the owning tree's node array.
struct tree_links {
    std::size_t left = no_child;
    std::size_t right = no_child;

    bool has_left() const noexcept { return left != no_child; }
    bool has_right() const noexcept { return right != no_child; }

    bool operator==(const tree_links&) const = default;
};

namespace detail {

// Relabels the tree hanging from `root` so that node ids follow preorder
// (root = 0). Throws invariant_error if the links are not a tree or leave
// nodes unreachable.
inline std::vector<tree_links> to_preorder(std::span<const tree_links> links, std::size_t root) {
    std::vector<tree_links> out;
    if (root == no_child) {
        if (!links.empty()) throw invariant_error("tree links: nodes unreachable from an empty root");
        return out;
    }
    out.reserve(links.size());
    std::vector<bool> seen(links.size(), false);

    // (source node, output parent, attach as left child)
    struct task {
        std::size_t source;
        std::size_t parent;
        bool as_left;
    };
    std::vector<task> stack{{root, no_child, false}};
    while (!stack.empty()) {
        const task t = stack.back();
        stack.pop_back();
        if (t.source >= links.size() || seen[t.source]) {
            throw invariant_error("tree links: not a tree");
        }
        seen[t.source] = true;
        const std::size_t id = out.size();
        out.emplace_back();
        if (t.parent != no_child) {
            (t.as_left ? out[t.parent].left : out[t.parent].right) = id;
        }
        const tree_links& src = links[t.source];
        if (src.has_right()) stack.push_back({src.right, id, false});
        if (src.has_left()) stack.push_back({src.left, id, true});
    }
    if (out.size() != links.size()) throw invariant_error("tree links: unreachable nodes");
    return out;
}

// Copies `part` into `into`, shifting its ids by the current size of `into`.
inline std::size_t append_shifted(std::vector<tree_links>& into, std::span<const tree_links> part) {
    const std::size_t offset = into.size();
    for (tree_links n : part) {
        if (n.has_left()) n.left += offset;
        if (n.has_right()) n.right += offset;
        into.push_back(n);
    }
    return part.empty() ? no_child : offset;
}

} // namespace detail

// A binary tree shape: Empty, or Node(left, right). Nodes are stored in
// preorder, so two trees are equal exactly when their arrays are equal.
//
// Text form: Tree := "." | "(" Tree " " Tree ")".
class binary_tree {
public:
    // The empty tree.
    binary_tree() = default;

    static binary_tree single() { return join(binary_tree{}, binary_tree{}); }

    static binary_tree join(const binary_tree& left, const binary_tree& right) {
        binary_tree t;
        t.nodes_.reserve(1 + left.node_count() + right.node_count());
        t.nodes_.emplace_back();
        t.nodes_[0].left = detail::append_shifted(t.nodes_, left.nodes_);
        t.nodes_[0].right = detail::append_shifted(t.nodes_, right.nodes_);
        return t;
    }

    // Builds from arbitrary ids; `root` may be no_child for the empty tree.
    static binary_tree from_links(std::span<const tree_links> links, std::size_t root) {
        binary_tree t;
        t.nodes_ = detail::to_preorder(links, root);
        return t;
    }

    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    // Node i in preorder; the root is node 0.
    const tree_links& node(std::size_t i) const { return nodes_[i]; }
    std::span<const tree_links> nodes() const noexcept { return nodes_; }

    binary_tree left_subtree() const { return subtree(empty() ? no_child : nodes_[0].left); }
    binary_tree right_subtree() const { return subtree(empty() ? no_child : nodes_[0].right); }

    bool operator==(const binary_tree&) const = default;

private:
    binary_tree subtree(std::size_t root) const {
        binary_tree t;
        if (root == no_child) return t;
        // Preorder subtrees occupy a contiguous id range starting at root.
        std::size_t end = root;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            end = std::max(end, i);
            if (nodes_[i].has_left()) stack.push_back(nodes_[i].left);
            if (nodes_[i].has_right()) stack.push_back(nodes_[i].right);
        }
        for (std::size_t i = root; i <= end; ++i) {
            tree_links n = nodes_[i];
            if (n.has_left()) n.left -= root;
            if (n.has_right()) n.right -= root;
            t.nodes_.push_back(n);
        }
        return t;
    }

    std::vector<tree_links> nodes_;
};

inline std::size_t node_count(const binary_tree& t) noexcept { return t.node_count(); }

// A tree in which every node is either a leaf or has exactly two children.
// Leaves model operands and internal nodes binary operators. Never empty.
class extended_tree {
public:
    // A single leaf.
    extended_tree() : nodes_(1) {}

    static extended_tree leaf() { return extended_tree{}; }

    static extended_tree join(const extended_tree& left, const extended_tree& right) {
        extended_tree t;
        t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
        t.nodes_[0].left = detail::append_shifted(t.nodes_, left.nodes_);
        t.nodes_[0].right = detail::append_shifted(t.nodes_, right.nodes_);
        return t;
    }

    // Throws invariant_error when some node has exactly one child.
    static extended_tree from_links(std::span<const tree_links> links, std::size_t root) {
        if (root == no_child) throw invariant_error("extended tree: no root");
        extended_tree t;
        t.nodes_ = detail::to_preorder(links, root);
        for (const tree_links& n : t.nodes_) {
            if (n.has_left() != n.has_right()) {
                throw invariant_error("extended tree: node with a single child");
            }
        }
        return t;
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t internal_count() const noexcept { return (nodes_.size() - 1) / 2; }
    std::size_t leaf_count() const noexcept { return internal_count() + 1; }

    bool is_leaf(std::size_t i) const { return !nodes_[i].has_left(); }
    const tree_links& node(std::size_t i) const { return nodes_[i]; }
    std::span<const tree_links> nodes() const noexcept { return nodes_; }

    bool operator==(const extended_tree&) const = default;

private:
    std::vector<tree_links> nodes_;
};

// Empty -> "". Otherwise 0, then per node in preorder: 01 for a lone left
// edge, 10 for a lone right edge, 00 <left body> 11 <right body> when both
// children exist; then 1.
inline catalan_sequence encode_tree(const binary_tree& t) {
    if (t.empty()) return catalan_sequence{};
    std::string bits;
    bits.reserve(2 * t.node_count());
    bits.push_back('0');

    // Right children whose "11" is still owed.
    std::vector<std::size_t> pending;
    std::size_t current = 0;
    while (true) {
        const tree_links& n = t.node(current);
        if (n.has_left() && n.has_right()) {
            bits += "00";
            pending.push_back(n.right);
            current = n.left;
        } else if (n.has_left()) {
            bits += "01";
            current = n.left;
        } else if (n.has_right()) {
            bits += "10";
            current = n.right;
        } else if (!pending.empty()) {
            bits += "11";
            current = pending.back();
            pending.pop_back();
        } else {
            break;
        }
    }
    bits.push_back('1');
    return detail::trusted_sequence(std::move(bits));
}

// Inverse of encode_tree. Strips the outer 0...1 and reads digit pairs:
// 01 left edge, 10 right edge, 00 remember the current vertex then left
// edge, 11 return to the remembered vertex then right edge.
inline binary_tree decode_tree(const catalan_sequence& s) {
    if (s.empty()) return binary_tree{};
    const std::string& bits = s.str();
    std::vector<tree_links> links(s.semilength());
    std::vector<std::size_t> stack;
    std::size_t current = 0;
    std::size_t next_id = 1;
    std::size_t opened = 0;
    std::size_t closed = 0;
    for (std::size_t i = 1; i + 1 < bits.size(); i += 2) {
        const char a = bits[i];
        const char b = bits[i + 1];
        const std::size_t child = next_id++;
        if (a == '0' && b == '1') {
            links[current].left = child;
        } else if (a == '1' && b == '0') {
            links[current].right = child;
        } else if (a == '0') {
            ++opened;
            stack.push_back(current);
            links[current].left = child;
        } else {
            ++closed;
            detail::check(!stack.empty(), "decode_tree: 11 pair with an empty stack");
            current = stack.back();
            stack.pop_back();
            detail::check(!links[current].has_right(), "decode_tree: right edge drawn twice");
            links[current].right = child;
        }
        current = child;
    }
    detail::check(stack.empty() && opened == closed, "decode_tree: unbalanced 00/11 pairs");
    detail::check(next_id == s.semilength(), "decode_tree: pair count does not match semilength");
    return binary_tree::from_links(links, 0);
}

namespace detail {

// Pending child position while copying a tree in preorder.
struct slot {
    std::size_t source;
    std::size_t parent;
    bool as_left;
};

} // namespace detail

// Every empty subtree becomes a leaf; every node becomes an internal node.
inline extended_tree extend_tree(const binary_tree& t) {
    std::vector<tree_links> out;
    out.reserve(2 * t.node_count() + 1);
    std::vector<detail::slot> stack{{t.empty() ? no_child : 0, no_child, false}};
    while (!stack.empty()) {
        const detail::slot s = stack.back();
        stack.pop_back();
        const std::size_t id = out.size();
        out.emplace_back();
        if (s.parent != no_child) (s.as_left ? out[s.parent].left : out[s.parent].right) = id;
        if (s.source == no_child) continue;
        stack.push_back({t.node(s.source).right, id, false});
        stack.push_back({t.node(s.source).left, id, true});
    }
    return extended_tree::from_links(out, 0);
}

// Drops all leaves: the inverse of extend_tree.
inline binary_tree strip_leaves(const extended_tree& e) {
    std::vector<tree_links> out;
    out.reserve(e.internal_count());
    std::vector<detail::slot> stack{{0, no_child, false}};
    while (!stack.empty()) {
        const detail::slot s = stack.back();
        stack.pop_back();
        if (e.is_leaf(s.source)) continue;
        const std::size_t id = out.size();
        out.emplace_back();
        if (s.parent != no_child) (s.as_left ? out[s.parent].left : out[s.parent].right) = id;
        stack.push_back({e.node(s.source).right, id, false});
        stack.push_back({e.node(s.source).left, id, true});
    }
    return binary_tree::from_links(out, out.empty() ? no_child : 0);
}

namespace detail {

// Shared grammar for the two nested text forms:
//   Item := leaf | "(" Item sep Item ")"
// With `leaves_are_nodes` false (binary trees) a leaf is an empty subtree;
// with it true (expressions) a leaf is a childless node.
struct nested_syntax {
    char leaf;
    char sep;
    bool leaves_are_nodes;
    const char* name;
};

inline constexpr nested_syntax tree_syntax{'.', ' ', false, "tree"};
inline constexpr nested_syntax mult_syntax{'a', '*', true, "multiplication"};

inline std::pair<std::vector<tree_links>, std::size_t> parse_nested(std::string_view text,
                                                                     const nested_syntax& syntax) {
    enum class expect { left, sep, right, close };
    struct open_node {
        std::size_t id;
        expect state;
    };
    std::vector<tree_links> links;
    std::vector<open_node> stack;
    std::size_t root = no_child;
    bool done = false;

    auto fail = [&](std::size_t i, const std::string& what) -> parse_error {
        return parse_error(parse_fault::syntax, i + 1,
                           std::string(syntax.name) + " syntax error at position " +
                               std::to_string(i + 1) + ": " + what);
    };
    // Attaches a finished item to the innermost open node.
    auto finish = [&](std::size_t i, std::size_t value) {
        if (stack.empty()) {
            root = value;
            done = true;
            return;
        }
        open_node& top = stack.back();
        if (top.state == expect::left) {
            links[top.id].left = value;
            top.state = expect::sep;
        } else if (top.state == expect::right) {
            links[top.id].right = value;
            top.state = expect::close;
        } else {
            throw fail(i, "unexpected item");
        }
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (done) throw fail(i, "trailing characters");
        if (c == syntax.leaf) {
            std::size_t value = no_child;
            if (syntax.leaves_are_nodes) {
                value = links.size();
                links.emplace_back();
            }
            finish(i, value);
        } else if (c == '(') {
            if (!stack.empty() && stack.back().state != expect::left &&
                stack.back().state != expect::right) {
                throw fail(i, "unexpected '('");
            }
            stack.push_back({links.size(), expect::left});
            links.emplace_back();
        } else if (c == syntax.sep) {
            if (stack.empty() || stack.back().state != expect::sep) {
                throw fail(i, std::string("unexpected '") + c + "'");
            }
            stack.back().state = expect::right;
        } else if (c == ')') {
            if (stack.empty() || stack.back().state != expect::close) {
                throw fail(i, "unexpected ')'");
            }
            const std::size_t id = stack.back().id;
            stack.pop_back();
            finish(i, id);
        } else {
            throw fail(i, std::string("unexpected character '") + c + "'");
        }
    }
    if (!done) throw fail(text.size(), "unexpected end of input");
    return {std::move(links), root};
}

inline std::string render_nested(std::span<const tree_links> nodes, std::size_t root,
                                 const nested_syntax& syntax) {
    std::string out;
    // Either a literal character to emit or a subtree slot to expand.
    struct item {
        bool literal;
        char c;
        std::size_t node;
    };
    std::vector<item> stack{{false, 0, root}};
    while (!stack.empty()) {
        const item it = stack.back();
        stack.pop_back();
        if (it.literal) {
            out.push_back(it.c);
            continue;
        }
        const bool is_leaf = it.node == no_child ||
                             (syntax.leaves_are_nodes && !nodes[it.node].has_left());
        if (is_leaf) {
            out.push_back(syntax.leaf);
            continue;
        }
        out.push_back('(');
        stack.push_back({true, ')', 0});
        stack.push_back({false, 0, nodes[it.node].right});
        stack.push_back({true, syntax.sep, 0});
        stack.push_back({false, 0, nodes[it.node].left});
    }
    return out;
}

} // namespace detail

inline binary_tree parse_tree(std::string_view text) {
    auto [links, root] = detail::parse_nested(text, detail::tree_syntax);
    return binary_tree::from_links(links, root);
}

inline std::string render_tree(const binary_tree& t) {
    return detail::render_nested(t.nodes(), t.empty() ? no_child : 0, detail::tree_syntax);
}

} // namespace catalan
