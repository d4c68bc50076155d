#include "rpm/text_index.hpp"

#include <algorithm>
#include <string>

#include "rpm/suffix_array.hpp"

namespace rpm {

EnhancedIndex::EnhancedIndex(const Text& text) {
    if (text.empty()) throw std::invalid_argument("cannot index an empty text");
    const index_t n = text.size();
    sa_ = suffix_array(text);
    isa_.resize(static_cast<std::size_t>(n));
    for (index_t r = 0; r < n; ++r) isa_[sa_[r]] = r;
    lcp_ = lcp_array_kasai(text.bytes(), sa_, isa_);
    rmq_ = RangeMin(lcp_);
}

EnhancedIndex build_index(const Text& text) { return EnhancedIndex(text); }

index_t EnhancedIndex::lce(index_t i, index_t j) const noexcept {
    if (i == j) return size() - i;
    index_t a = isa_[i];
    index_t b = isa_[j];
    if (a > b) std::swap(a, b);
    return rmq_.query(a + 1, b);
}

index_t EnhancedIndex::lcp_query(index_t i, index_t j) const {
    const index_t n = size();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::out_of_range("lcp query (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside text of length " + std::to_string(n));
    return lce(i, j);
}

std::vector<index_t> EnhancedIndex::occurrences_sorted(index_t l, index_t r) const {
    std::vector<index_t> out(sa_.begin() + l, sa_.begin() + r + 1);
    std::sort(out.begin(), out.end());
    return out;
}

LcpTree::LcpTree(const EnhancedIndex& idx) {
    const auto lcp = idx.lcp();
    const index_t n = idx.size();
    leaf_parent_.assign(static_cast<std::size_t>(n), -1);

    struct Open {
        index_t depth;
        index_t l;
        index_t id;
    };
    // Nodes get ids on push; the final bottom-up order is fixed afterwards.
    std::vector<Node> pushed;
    std::vector<index_t> finish_order;
    std::vector<index_t> boundary(static_cast<std::size_t>(n) + 1, -1);

    std::vector<Open> stack;
    pushed.push_back({0, 0, n - 1, -1});
    stack.push_back({0, 0, 0});
    for (index_t i = 1; i <= n; ++i) {
        const index_t h = (i < n) ? lcp[i] : 0;
        index_t lb = i - 1;
        index_t orphan = -1;  // last popped node whose parent is not yet pushed
        while (h < stack.back().depth) {
            Open top = stack.back();
            stack.pop_back();
            lb = top.l;
            pushed[top.id].r = i - 1;
            finish_order.push_back(top.id);
            if (h <= stack.back().depth) {
                pushed[top.id].parent = stack.back().id;
            } else {
                orphan = top.id;
            }
        }
        if (h > stack.back().depth) {
            const index_t id = static_cast<index_t>(pushed.size());
            pushed.push_back({h, lb, -1, stack.back().id});
            stack.push_back({h, lb, id});
            if (orphan >= 0) pushed[orphan].parent = id;
        }
        if (i < n) boundary[i] = stack.back().id;
    }
    finish_order.push_back(0);

    // Every parent link is final once its node is popped; renumber ids into
    // bottom-up order.
    std::vector<index_t> position(pushed.size());
    nodes_.reserve(pushed.size());
    for (std::size_t k = 0; k < finish_order.size(); ++k) position[finish_order[k]] = static_cast<index_t>(k);
    for (index_t id : finish_order) {
        Node node = pushed[id];
        if (node.parent >= 0) node.parent = position[node.parent];
        nodes_.push_back(node);
    }

    for (index_t r = 0; r < n; ++r) {
        index_t best = -1;
        if (r >= 1) best = boundary[r];
        if (r + 1 < n) {
            const index_t other = boundary[r + 1];
            if (best < 0 || pushed[other].depth > pushed[best].depth) best = other;
        }
        leaf_parent_[r] = position[best < 0 ? 0 : best];
    }
}

}  // namespace rpm
