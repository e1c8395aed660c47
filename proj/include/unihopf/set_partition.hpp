#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "unihopf/ordered.hpp"

namespace unihopf {

// Partition of a finite label set into nonempty blocks.
// Canonical form: labels sorted within blocks, blocks sorted by minimum.
class SetPartition {
  public:
    SetPartition() = default;
    SetPartition(std::initializer_list<std::vector<Label>> blocks)
        : SetPartition(std::vector<std::vector<Label>>(blocks)) {}
    explicit SetPartition(std::vector<std::vector<Label>> blocks) : blocks_(std::move(blocks)) {
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks_.begin(), blocks_.end());
        Ground g = ground();
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw std::invalid_argument("SetPartition: blocks overlap");
    }

    static SetPartition singletons(const Ground& g) {
        std::vector<std::vector<Label>> b;
        for (Label x : g) b.push_back({x});
        return SetPartition(std::move(b));
    }

    const std::vector<std::vector<Label>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    Ground ground() const {
        Ground g;
        for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
        std::sort(g.begin(), g.end());
        return g;
    }

    int block_index_of(Label x) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (contains(blocks_[i], x)) return static_cast<int>(i);
        return -1;
    }
    bool same_block(Label x, Label y) const {
        int i = block_index_of(x);
        return i >= 0 && i == block_index_of(y);
    }

    // s must be a union of blocks for the coproduct side; restriction itself is general
    SetPartition restrict(const Ground& s) const {
        if (!is_subset(s, ground()))
            throw std::invalid_argument("SetPartition::restrict: not a subset");
        std::vector<std::vector<Label>> out;
        for (const auto& b : blocks_) {
            std::vector<Label> nb;
            for (Label x : b)
                if (contains(s, x)) nb.push_back(x);
            if (!nb.empty()) out.push_back(std::move(nb));
        }
        return SetPartition(std::move(out));
    }

    bool is_union_of_blocks(const Ground& s) const {
        for (const auto& b : blocks_) {
            bool in = contains(s, b[0]);
            for (Label x : b)
                if (contains(s, x) != in) return false;
        }
        return true;
    }

    SetPartition disjoint_union(const SetPartition& other) const {
        if (!disjoint(ground(), other.ground()))
            throw std::invalid_argument("SetPartition::disjoint_union: grounds overlap");
        auto b = blocks_;
        b.insert(b.end(), other.blocks_.begin(), other.blocks_.end());
        return SetPartition(std::move(b));
    }

    SetPartition relabeled(const Bijection& bij) const {
        check_bijection(bij, ground());
        std::vector<std::vector<Label>> out;
        for (const auto& b : blocks_) {
            std::vector<Label> nb;
            for (Label x : b) nb.push_back(bij.at(x));
            out.push_back(std::move(nb));
        }
        return SetPartition(std::move(out));
    }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ < b.blocks_;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += "|";
            s += label_list_str(blocks_[i], ',');
        }
        return s + "}";
    }

  private:
    std::vector<std::vector<Label>> blocks_;
};

inline std::vector<SetPartition> enumerate_partitions(const Ground& g) {
    std::vector<SetPartition> out;
    std::vector<std::vector<std::vector<Label>>> stack;
    // restricted growth: place g[i] into one of the used blocks or a new one
    std::vector<int> assign(g.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == g.size()) {
            std::vector<std::vector<Label>> blocks(used);
            for (std::size_t j = 0; j < g.size(); ++j) blocks[assign[j]].push_back(g[j]);
            out.push_back(SetPartition(std::move(blocks)));
            return;
        }
        for (int b = 0; b <= used; ++b) {
            assign[i] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    if (g.empty())
        out.push_back(SetPartition());
    else
        rec(0, 0);
    return out;
}

// All partitions of the disjoint union whose restrictions to the two grounds are
// x1 and x2. Each result block is a block of x1, a block of x2, or the union of one
// block from each side, so the results correspond to partial matchings between the
// block sets.
inline std::vector<SetPartition> quasi_shuffles(const SetPartition& x1, const SetPartition& x2) {
    if (!disjoint(x1.ground(), x2.ground()))
        throw std::invalid_argument("quasi_shuffles: grounds overlap");
    const auto& b1 = x1.blocks();
    const auto& b2 = x2.blocks();
    std::vector<SetPartition> out;
    std::vector<int> match(b1.size(), -1);  // -1 = unmatched, else index into b2
    std::vector<bool> used(b2.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == b1.size()) {
            std::vector<std::vector<Label>> blocks;
            for (std::size_t a = 0; a < b1.size(); ++a) {
                auto blk = b1[a];
                if (match[a] >= 0) {
                    const auto& other = b2[match[a]];
                    blk.insert(blk.end(), other.begin(), other.end());
                }
                blocks.push_back(std::move(blk));
            }
            for (std::size_t b = 0; b < b2.size(); ++b)
                if (!used[b]) blocks.push_back(b2[b]);
            out.push_back(SetPartition(std::move(blocks)));
            return;
        }
        match[i] = -1;
        rec(i + 1);
        for (std::size_t b = 0; b < b2.size(); ++b) {
            if (used[b]) continue;
            used[b] = true;
            match[i] = static_cast<int>(b);
            rec(i + 1);
            used[b] = false;
        }
        match[i] = -1;
    };
    rec(0);
    return out;
}

// X is atomic for the order when no proper initial segment is a union of blocks.
inline bool is_atomic(const SetPartition& x, const LinearOrder& ord) {
    if (x.ground() != ground_of(ord))
        throw std::invalid_argument("is_atomic: ground mismatch");
    for (std::size_t k = 1; k < ord.size(); ++k) {
        Ground seg(ord.begin(), ord.begin() + k);
        std::sort(seg.begin(), seg.end());
        if (x.is_union_of_blocks(seg)) return false;
    }
    return true;
}

}  // namespace unihopf
