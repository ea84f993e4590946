#pragma once

#include <cassert>
#include <cstddef>
#include <deque>
#include <queue>
#include <span>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/stats.hpp"

namespace segscan {

/// Self-adjusting meldable max-heap. Heap order is on (key descending,
/// payload segment ascending), so the root is always the ranking maximum and
/// repeated pops drain in output order.
class SkewHeap {
public:
    struct Node {
        double key;
        ScoredSegment item;
        Node* left;
        Node* right;
    };

    SkewHeap() = default;
    SkewHeap(const SkewHeap&) = delete;
    SkewHeap& operator=(const SkewHeap&) = delete;
    SkewHeap(SkewHeap&& o) noexcept : root_(o.root_), n_(o.n_) {
        o.root_ = nullptr;
        o.n_ = 0;
    }
    SkewHeap& operator=(SkewHeap&& o) noexcept {
        if (this != &o) {
            clear();
            root_ = o.root_;
            n_ = o.n_;
            o.root_ = nullptr;
            o.n_ = 0;
        }
        return *this;
    }
    ~SkewHeap() { clear(); }

    bool empty() const { return root_ == nullptr; }
    std::size_t size() const { return n_; }
    const Node* root() const { return root_; }

    void insert(double key, const ScoredSegment& item, Stats* stats = nullptr) {
        Node* single = new Node{key, item, nullptr, nullptr};
        root_ = meld_nodes(root_, single);
        ++n_;
        if (stats) {
            ++stats->heap_inserts;
            stats->note_carry_heap(n_);
        }
    }

    /// Absorbs the other heap; it is left empty.
    void meld(SkewHeap&& other) {
        root_ = meld_nodes(root_, other.root_);
        n_ += other.n_;
        other.root_ = nullptr;
        other.n_ = 0;
    }

    const ScoredSegment& top() const {
        assert(root_);
        return root_->item;
    }

    void pop() {
        assert(root_);
        Node* old = root_;
        root_ = meld_nodes(old->left, old->right);
        delete old;
        --n_;
    }

    void clear() {
        std::vector<Node*> stack;
        if (root_) stack.push_back(root_);
        while (!stack.empty()) {
            Node* n = stack.back();
            stack.pop_back();
            if (n->left) stack.push_back(n->left);
            if (n->right) stack.push_back(n->right);
            delete n;
        }
        root_ = nullptr;
        n_ = 0;
    }

    SkewHeap clone() const {
        SkewHeap copy;
        if (!root_) return copy;
        struct Pair {
            const Node* src;
            Node** dst;
        };
        std::vector<Pair> stack{{root_, &copy.root_}};
        while (!stack.empty()) {
            auto [src, dst] = stack.back();
            stack.pop_back();
            *dst = new Node{src->key, src->item, nullptr, nullptr};
            if (src->left) stack.push_back({src->left, &(*dst)->left});
            if (src->right) stack.push_back({src->right, &(*dst)->right});
        }
        copy.n_ = n_;
        return copy;
    }

    /// Test hook: every parent outranks (or equals) both children.
    bool heap_order_ok() const {
        std::vector<const Node*> stack;
        if (root_) stack.push_back(root_);
        while (!stack.empty()) {
            const Node* n = stack.back();
            stack.pop_back();
            for (const Node* c : {n->left, n->right}) {
                if (!c) continue;
                if (outranks(c, n)) return false;
                stack.push_back(c);
            }
        }
        return true;
    }

    static bool outranks(const Node* a, const Node* b) {
        if (a->key != b->key) return a->key > b->key;
        return a->item.seg < b->item.seg;
    }

private:
    static Node* meld_nodes(Node* a, Node* b) {
        if (!a) return b;
        if (!b) return a;
        if (outranks(b, a)) std::swap(a, b);
        Node* merged = meld_nodes(a->right, b);
        a->right = a->left;
        a->left = merged;
        return a;
    }

    Node* root_ = nullptr;
    std::size_t n_ = 0;
};

inline SkewHeap skew_meld(SkewHeap&& a, SkewHeap&& b) {
    SkewHeap out = std::move(a);
    out.meld(std::move(b));
    return out;
}

/// Versioned max-heap over the left candidates of one pass. Keys are -P[t];
/// the version for right end j pairs with the additive offset P[j], so an
/// entry's value under that version is the segment sum P[j] - P[t]. Inserts
/// copy only the meld path, so earlier versions stay intact and queryable.
class BatchHeap {
public:
    struct Node {
        double key;
        index_t t;
        const Node* left;
        const Node* right;
    };

    /// Inserts (key, t) into the given version; returns the new version root.
    const Node* push_version(const Node* root, double key, index_t t, Stats* stats = nullptr) {
        const Node* single = make(key, t, nullptr, nullptr, stats);
        const Node* merged = meld(root, single, stats);
        if (stats) {
            ++stats->heap_inserts;
            stats->note_batch_heap(arena_.size());
        }
        return merged;
    }

    std::size_t nodes() const { return arena_.size(); }

    void reset() { arena_.clear(); }

    static bool outranks(const Node* a, const Node* b) {
        if (a->key != b->key) return a->key > b->key;
        return a->t < b->t;
    }

    /// Test hook for a version root.
    static bool heap_order_ok(const Node* root) {
        if (!root) return true;
        std::vector<const Node*> stack{root};
        while (!stack.empty()) {
            const Node* n = stack.back();
            stack.pop_back();
            for (const Node* c : {n->left, n->right}) {
                if (!c) continue;
                if (outranks(c, n)) return false;
                stack.push_back(c);
            }
        }
        return true;
    }

private:
    const Node* make(double key, index_t t, const Node* l, const Node* r, Stats* stats) {
        arena_.push_back(Node{key, t, l, r});
        if (stats) ++stats->heap_nodes;
        return &arena_.back();
    }

    const Node* meld(const Node* a, const Node* b, Stats* stats) {
        if (!a) return b;
        if (!b) return a;
        if (outranks(b, a)) std::swap(a, b);
        // path-copying: the winner is cloned with swapped children
        const Node* merged = meld(a->right, b, stats);
        return make(a->key, a->t, merged, a->left, stats);
    }

    std::deque<Node> arena_;
};

/// One queryable snapshot: a version root plus the offset and right end it
/// belongs to.
struct BatchVersion {
    const BatchHeap::Node* root = nullptr;
    double offset = 0.0;
    index_t j = 0;
};

struct SelectedEntry {
    double value;  // offset + key, i.e. the segment sum
    index_t t;     // left prefix point; the segment is (t+1, j)
    index_t j;
};

/// The k largest entries across a family of versions, in ranking order
/// (value descending, then segment ascending). Classic frontier selection:
/// work depends on the number of seeds and k, never on heap sizes.
inline std::vector<SelectedEntry> select_k_largest(std::span<const BatchVersion> versions,
                                                   std::size_t k, Stats* stats = nullptr) {
    struct Item {
        double value;
        index_t t;
        index_t j;
        const BatchHeap::Node* node;
        double offset;
    };
    auto worse = [](const Item& a, const Item& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.t != b.t) return a.t > b.t;
        return a.j > b.j;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(worse)> frontier(worse);
    for (const BatchVersion& v : versions)
        if (v.root) frontier.push({v.offset + v.root->key, v.root->t, v.j, v.root, v.offset});
    std::vector<SelectedEntry> out;
    out.reserve(k);
    while (out.size() < k && !frontier.empty()) {
        Item it = frontier.top();
        frontier.pop();
        if (stats) ++stats->select_pops;
        out.push_back({it.value, it.t, it.j});
        for (const BatchHeap::Node* c : {it.node->left, it.node->right})
            if (c) frontier.push({it.offset + c->key, c->t, it.j, c, it.offset});
    }
    return out;
}

inline std::vector<SelectedEntry> select_k_largest(const BatchVersion& version, std::size_t k,
                                                   Stats* stats = nullptr) {
    return select_k_largest(std::span<const BatchVersion>(&version, 1), k, stats);
}

/// The k top entries of a skew heap in ranking order, without disturbing it.
inline std::vector<ScoredSegment> select_k_largest(const SkewHeap& h, std::size_t k,
                                                   Stats* stats = nullptr) {
    auto worse = [](const SkewHeap::Node* a, const SkewHeap::Node* b) {
        return SkewHeap::outranks(b, a);
    };
    std::priority_queue<const SkewHeap::Node*, std::vector<const SkewHeap::Node*>,
                        decltype(worse)>
        frontier(worse);
    if (h.root()) frontier.push(h.root());
    std::vector<ScoredSegment> out;
    out.reserve(k);
    while (out.size() < k && !frontier.empty()) {
        const SkewHeap::Node* n = frontier.top();
        frontier.pop();
        if (stats) ++stats->select_pops;
        out.push_back(n->item);
        if (n->left) frontier.push(n->left);
        if (n->right) frontier.push(n->right);
    }
    return out;
}

/// Every entry of the version with value >= threshold (> when not inclusive).
/// Children of a failing node are never visited, so the work is proportional
/// to the output size plus one.
inline std::vector<SelectedEntry> enumerate_at_least(const BatchVersion& version, double threshold,
                                                     bool inclusive = true,
                                                     Stats* stats = nullptr) {
    std::vector<SelectedEntry> out;
    std::vector<const BatchHeap::Node*> stack;
    if (version.root) stack.push_back(version.root);
    while (!stack.empty()) {
        const BatchHeap::Node* n = stack.back();
        stack.pop_back();
        if (stats) ++stats->enum_visits;
        const double value = version.offset + n->key;
        if (inclusive ? value < threshold : value <= threshold) continue;
        out.push_back({value, n->t, version.j});
        if (n->left) stack.push_back(n->left);
        if (n->right) stack.push_back(n->right);
    }
    return out;
}

}  // namespace segscan
