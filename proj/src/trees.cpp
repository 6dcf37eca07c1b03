#include "tgf/trees.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tgf/errors.hpp"

namespace tgf {

namespace {

const TernaryTree& empty_tree() {
    static const TernaryTree kEmpty;
    return kEmpty;
}

// memo[m] lists every tree with m nodes, for m < limit.
std::vector<std::vector<TernaryTree>> smaller_trees(long limit) {
    std::vector<std::vector<TernaryTree>> memo;
    memo.reserve(static_cast<std::size_t>(std::max(limit, 0L)));
    for (long m = 0; m < limit; ++m) {
        std::vector<TernaryTree> row;
        if (m == 0) {
            row.emplace_back();
        } else {
            for (long a = 0; a <= m - 1; ++a) {
                for (long b = 0; a + b <= m - 1; ++b) {
                    const long c = m - 1 - a - b;
                    for (const auto& l : memo[a]) {
                        for (const auto& mid : memo[b]) {
                            for (const auto& r : memo[c]) {
                                row.emplace_back(l, mid, r);
                            }
                        }
                    }
                }
            }
        }
        memo.push_back(std::move(row));
    }
    return memo;
}

void serialize_into(const TernaryTree& t, std::string& out) {
    if (t.empty()) {
        out.push_back('.');
        return;
    }
    out.push_back('N');
    serialize_into(t.left(), out);
    serialize_into(t.middle(), out);
    serialize_into(t.right(), out);
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    TernaryTree parse() {
        TernaryTree t = node();
        skip_space();
        if (pos_ != text_.size()) {
            throw TreeParseError("trailing input '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return t;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    TernaryTree node() {
        skip_space();
        if (pos_ == text_.size()) {
            throw TreeParseError("unexpected end of input", pos_);
        }
        const char c = text_[pos_];
        if (c == '.') {
            ++pos_;
            return {};
        }
        if (c != 'N') {
            throw TreeParseError("unexpected token '" + std::string(1, c) + "'", pos_);
        }
        ++pos_;
        TernaryTree l = node();
        TernaryTree m = node();
        TernaryTree r = node();
        return {std::move(l), std::move(m), std::move(r)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TernaryTree::TernaryTree(TernaryTree left, TernaryTree middle, TernaryTree right)
    : root_(std::make_shared<const Node>(Node{std::move(left), std::move(middle), std::move(right)})) {}

const TernaryTree& TernaryTree::left() const { return empty() ? empty_tree() : root_->left; }
const TernaryTree& TernaryTree::middle() const { return empty() ? empty_tree() : root_->middle; }
const TernaryTree& TernaryTree::right() const { return empty() ? empty_tree() : root_->right; }

std::size_t TernaryTree::node_count() const {
    if (empty()) {
        return 0;
    }
    return 1 + root_->left.node_count() + root_->middle.node_count() + root_->right.node_count();
}

std::string TernaryTree::serialize() const {
    std::string out;
    serialize_into(*this, out);
    return out;
}

TernaryTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::size_t middle_edges(const TernaryTree& tree) {
    if (tree.empty()) {
        return 0;
    }
    return (tree.middle().empty() ? 0 : 1) + middle_edges(tree.left()) +
           middle_edges(tree.middle()) + middle_edges(tree.right());
}

void enumerate(long n, const std::function<void(const TernaryTree&)>& visit) {
    if (n < 0) {
        throw UsageError("enumerate: negative node count");
    }
    if (n == 0) {
        visit(TernaryTree());
        return;
    }
    const auto memo = smaller_trees(n);
    for (long a = 0; a <= n - 1; ++a) {
        for (long b = 0; a + b <= n - 1; ++b) {
            const long c = n - 1 - a - b;
            for (const auto& l : memo[a]) {
                for (const auto& m : memo[b]) {
                    for (const auto& r : memo[c]) {
                        visit(TernaryTree(l, m, r));
                    }
                }
            }
        }
    }
}

std::vector<TernaryTree> enumerate_all(long n) {
    std::vector<TernaryTree> out;
    enumerate(n, [&](const TernaryTree& t) { out.push_back(t); });
    return out;
}

Triangle triangle_oracle(long nmax, long bound) {
    if (nmax > bound) {
        throw UsageError("nmax " + std::to_string(nmax) + " exceeds exhaustive bound " +
                         std::to_string(bound));
    }
    Triangle tri(nmax);
    for (long n = 0; n <= nmax; ++n) {
        std::vector<unsigned long> counts(static_cast<std::size_t>(Triangle::row_length(n)), 0);
        enumerate(n, [&](const TernaryTree& t) {
            const std::size_t k = middle_edges(t);
            if (k >= counts.size()) {
                throw InternalError("tree with " + std::to_string(n) + " nodes has " +
                                    std::to_string(k) + " middle edges");
            }
            ++counts[k];
        });
        for (long k = 0; k < Triangle::row_length(n); ++k) {
            tri.at(n, k) = counts[static_cast<std::size_t>(k)];
        }
    }
    return tri;
}

std::string to_dot(const TernaryTree& tree) {
    std::ostringstream os;
    os << "digraph ternary_tree {\n";
    if (!tree.empty()) {
        os << "  node [shape=point];\n";
        std::size_t next_id = 0;
        const std::function<std::size_t(const TernaryTree&)> emit = [&](const TernaryTree& t) {
            const std::size_t id = next_id++;
            os << "  n" << id << ";\n";
            const auto child = [&](const TernaryTree& c, const char* slot, bool mid) {
                if (c.empty()) {
                    return;
                }
                const std::size_t cid = emit(c);
                os << "  n" << id << " -> n" << cid << " [label=\"" << slot << "\"";
                if (mid) {
                    os << ", style=bold, penwidth=3";
                }
                os << "];\n";
            };
            child(t.left(), "left", false);
            child(t.middle(), "middle", true);
            child(t.right(), "right", false);
            return id;
        };
        emit(tree);
    }
    os << "}\n";
    return os.str();
}

}  // namespace tgf
