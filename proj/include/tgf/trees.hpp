#ifndef TGF_TREES_HPP
#define TGF_TREES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgf/combinatorics.hpp"

namespace tgf {

/// Rooted ternary tree: every node has ordered left, middle and right slots.
///
/// Immutable; subtrees are shared between trees, which keeps exhaustive
/// enumeration cheap.
class TernaryTree {
public:
    struct Node;

    TernaryTree() = default;  // empty tree
    TernaryTree(TernaryTree left, TernaryTree middle, TernaryTree right);

    static TernaryTree leaf() { return {TernaryTree(), TernaryTree(), TernaryTree()}; }

    [[nodiscard]] bool empty() const { return root_ == nullptr; }
    [[nodiscard]] const TernaryTree& left() const;
    [[nodiscard]] const TernaryTree& middle() const;
    [[nodiscard]] const TernaryTree& right() const;

    [[nodiscard]] std::size_t node_count() const;

    /// Preorder, 'N' for a node followed by its three slots, '.' for an empty slot.
    [[nodiscard]] std::string serialize() const;

private:
    std::shared_ptr<const Node> root_;
};

struct TernaryTree::Node {
    TernaryTree left;
    TernaryTree middle;
    TernaryTree right;
};

/// Raised by parse_tree; `position` is the 0-based offset of the first bad character.
class TreeParseError : public std::invalid_argument {
public:
    TreeParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Inverse of TernaryTree::serialize. Whitespace is skipped.
TernaryTree parse_tree(std::string_view text);

/// Occupied middle slots over all nodes.
std::size_t middle_edges(const TernaryTree& tree);

/// Calls `visit` once for every ternary tree with exactly n nodes.
void enumerate(long n, const std::function<void(const TernaryTree&)>& visit);

/// All trees with n nodes, materialized.
std::vector<TernaryTree> enumerate_all(long n);

inline constexpr long kDefaultExhaustiveBound = 10;

/// T(n, k) by exhaustive enumeration. Throws UsageError when nmax > bound.
Triangle triangle_oracle(long nmax, long bound = kDefaultExhaustiveBound);

/// DOT digraph; middle edges are bold and labeled "middle".
std::string to_dot(const TernaryTree& tree);

}  // namespace tgf

#endif  // TGF_TREES_HPP
