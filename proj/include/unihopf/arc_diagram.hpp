#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/ordered.hpp"
#include "unihopf/set_partition.hpp"
#include "unihopf/simple_graph.hpp"
#include "unihopf/uni_matrix.hpp"

namespace unihopf {

using Arc = std::pair<Label, Label>;  // (earlier, later) in the order

// A(X,l): pairs of consecutive same-block elements in the order.
inline std::vector<Arc> arcs_of(const SetPartition& x, const LinearOrder& ord) {
    if (x.ground() != ground_of(ord)) throw std::invalid_argument("arcs_of: ground mismatch");
    std::vector<Arc> out;
    for (std::size_t a = 0; a < ord.size(); ++a)
        for (std::size_t b = a + 1; b < ord.size(); ++b)
            if (x.same_block(ord[a], ord[b])) {
                out.push_back({ord[a], ord[b]});
                break;  // the nearest same-block successor bounds the only arc from ord[a]
            }
    std::sort(out.begin(), out.end());
    return out;
}

// A set partition of an ordered ground with a nonzero field label on each arc.
class ArcDiagram {
  public:
    ArcDiagram() : p_(2) {}
    ArcDiagram(LinearOrder ord, SetPartition x, std::uint32_t p,
               std::map<Arc, std::uint32_t> labels)
        : order_(std::move(ord)), partition_(std::move(x)), p_(p), labels_(std::move(labels)) {
        if (!is_prime(p_)) throw std::invalid_argument("ArcDiagram: modulus must be prime");
        auto as = arcs_of(partition_, order_);
        if (as.size() != labels_.size())
            throw std::invalid_argument("ArcDiagram: label domain differs from the arc set");
        for (const auto& a : as) {
            auto it = labels_.find(a);
            if (it == labels_.end())
                throw std::invalid_argument("ArcDiagram: missing label on an arc");
            if (it->second % p_ == 0)
                throw std::invalid_argument("ArcDiagram: arc labels must be nonzero");
            labels_[a] = it->second % p_;
        }
    }
    // all-ones labeling; at p=2 this is the only labeling
    static ArcDiagram all_ones(LinearOrder ord, SetPartition x, std::uint32_t p) {
        std::map<Arc, std::uint32_t> lab;
        for (const auto& a : arcs_of(x, ord)) lab[a] = 1;
        return ArcDiagram(std::move(ord), std::move(x), p, std::move(lab));
    }
    static ArcDiagram discrete(const LinearOrder& ord, std::uint32_t p) {
        return all_ones(ord, SetPartition::singletons(ground_of(ord)), p);
    }

    const LinearOrder& order() const { return order_; }
    const SetPartition& partition() const { return partition_; }
    std::uint32_t modulus() const { return p_; }
    const std::map<Arc, std::uint32_t>& labels() const { return labels_; }
    Ground ground() const { return ground_of(order_); }
    std::vector<Arc> arcs() const { return arcs_of(partition_, order_); }

    // restriction to an l-segment (the general subset restriction is not used:
    // on segments the arc set restricts exactly)
    ArcDiagram restrict_segment(const Ground& s) const {
        if (!is_segment(order_, s))
            throw std::invalid_argument("ArcDiagram::restrict_segment: not a segment");
        return restrict_arcwise(s);
    }
    // restriction to a union of blocks (used by coproducts); arcs never cross
    ArcDiagram restrict_blocks(const Ground& s) const {
        if (!partition_.is_union_of_blocks(s))
            throw std::invalid_argument("ArcDiagram::restrict_blocks: not a union of blocks");
        return restrict_arcwise(s);
    }

    ArcDiagram disjoint_union(const ArcDiagram& other, const LinearOrder& ord) const {
        if (p_ != other.p_) throw std::invalid_argument("ArcDiagram: modulus mismatch");
        auto x = partition_.disjoint_union(other.partition_);
        auto lab = labels_;
        lab.insert(other.labels_.begin(), other.labels_.end());
        return ArcDiagram(ord, std::move(x), p_, std::move(lab));
    }

    ArcDiagram relabeled(const Bijection& bij) const {
        std::map<Arc, std::uint32_t> lab;
        for (const auto& [a, v] : labels_) lab[{bij.at(a.first), bij.at(a.second)}] = v;
        return ArcDiagram(unihopf::relabel(order_, bij), partition_.relabeled(bij), p_,
                          std::move(lab));
    }

    friend bool operator==(const ArcDiagram& a, const ArcDiagram& b) {
        return a.order_ == b.order_ && a.p_ == b.p_ && a.partition_ == b.partition_ &&
               a.labels_ == b.labels_;
    }
    friend bool operator!=(const ArcDiagram& a, const ArcDiagram& b) { return !(a == b); }
    friend bool operator<(const ArcDiagram& a, const ArcDiagram& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        if (a.partition_ != b.partition_) return a.partition_ < b.partition_;
        return a.labels_ < b.labels_;
    }

    std::string str() const {
        std::string s = "D[" + label_list_str(order_) + "; " + partition_.str();
        for (const auto& [a, v] : labels_)
            s += " (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                 ")=" + std::to_string(v);
        return s + "]";
    }

  private:
    ArcDiagram restrict_arcwise(const Ground& s) const {
        std::map<Arc, std::uint32_t> lab;
        for (const auto& [a, v] : labels_)
            if (contains(s, a.first) && contains(s, a.second)) lab[a] = v;
        return ArcDiagram(unihopf::restrict_order(order_, s), partition_.restrict(s), p_,
                          std::move(lab));
    }

    LinearOrder order_;
    SetPartition partition_;
    std::uint32_t p_;
    std::map<Arc, std::uint32_t> labels_;
};

// d1 <= d2: every arc of d1 is an arc of d2 with the same label.
inline bool diagram_leq(const ArcDiagram& d1, const ArcDiagram& d2) {
    if (d1.order() != d2.order() || d1.modulus() != d2.modulus())
        throw std::invalid_argument("diagram_leq: mismatched ambient data");
    for (const auto& [a, v] : d1.labels()) {
        auto it = d2.labels().find(a);
        if (it == d2.labels().end() || it->second != v) return false;
    }
    return true;
}

// The unique factorization of a diagram into atomic diagrams on the minimal
// l-segments that are unions of blocks: cut after every initial segment that is
// a union of blocks.
inline std::vector<ArcDiagram> atomic_factorization(const ArcDiagram& d) {
    const auto& ord = d.order();
    std::vector<ArcDiagram> out;
    std::size_t start = 0;
    for (std::size_t end = 1; end <= ord.size(); ++end) {
        Ground prefix(ord.begin(), ord.begin() + end);
        std::sort(prefix.begin(), prefix.end());
        if (d.partition().is_union_of_blocks(prefix)) {
            Ground seg(ord.begin() + start, ord.begin() + end);
            std::sort(seg.begin(), seg.end());
            out.push_back(d.restrict_segment(seg));
            start = end;
        }
    }
    return out;
}

// All labelings of the arcs of X by nonzero field elements.
inline std::vector<ArcDiagram> diagrams_over(const SetPartition& x, const LinearOrder& ord,
                                             std::uint32_t p) {
    auto as = arcs_of(x, ord);
    std::vector<ArcDiagram> out;
    std::vector<std::uint32_t> choice(as.size(), 1);
    while (true) {
        std::map<Arc, std::uint32_t> lab;
        for (std::size_t i = 0; i < as.size(); ++i) lab[as[i]] = choice[i];
        out.push_back(ArcDiagram(ord, x, p, std::move(lab)));
        std::size_t i = 0;
        while (i < as.size() && choice[i] == p - 1) choice[i++] = 1;
        if (i == as.size()) break;
        ++choice[i];
    }
    return out;
}

inline std::vector<ArcDiagram> enumerate_diagrams(const LinearOrder& ord, std::uint32_t p) {
    std::vector<ArcDiagram> out;
    for (const auto& x : enumerate_partitions(ground_of(ord))) {
        auto ds = diagrams_over(x, ord, p);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    return out;
}

// Canonical representative <-> arc diagram codec.
inline UniMatrix diagram_to_matrix(const ArcDiagram& d) {
    UniMatrix m(d.order(), d.modulus());
    for (const auto& [a, v] : d.labels()) m.set_entry(a.first, a.second, v);
    return m;
}

inline ArcDiagram matrix_to_diagram(const UniMatrix& u) {
    if (!u.is_row_col_sparse())
        throw std::invalid_argument("matrix_to_diagram: matrix is not in canonical form");
    // blocks = connected chains of the nonzero entries
    const auto& ord = u.order();
    std::map<Arc, std::uint32_t> lab;
    std::map<Label, Label> next;
    for (int r = 0; r < u.n(); ++r)
        for (int c = r + 1; c < u.n(); ++c)
            if (u.at(r, c)) {
                lab[{ord[r], ord[c]}] = u.at(r, c);
                next[ord[r]] = ord[c];
            }
    std::map<Label, bool> has_prev;
    for (const auto& [a, b] : next) has_prev[b] = true;
    std::vector<std::vector<Label>> blocks;
    for (Label x : ord) {
        if (has_prev.count(x)) continue;  // not a chain head
        std::vector<Label> blk{x};
        Label cur = x;
        while (next.count(cur)) {
            cur = next.at(cur);
            blk.push_back(cur);
        }
        blocks.push_back(std::move(blk));
    }
    return ArcDiagram(ord, SetPartition(std::move(blocks)), u.modulus(), std::move(lab));
}

// G(X,l): graphs containing the arc set whose extra edges (i,j) all have a witness k
// strictly between i and j with (i,k) or (k,j) an arc.
inline std::vector<SimpleGraph> graphs_over(const SetPartition& x, const LinearOrder& ord) {
    if (x.ground() != ground_of(ord)) throw std::invalid_argument("graphs_over: ground mismatch");
    auto as = arcs_of(x, ord);
    auto pos = order_positions(ord);
    auto is_arc = [&](Label a, Label b) {
        return std::binary_search(as.begin(), as.end(), Arc{a, b});
    };
    std::vector<Edge> base;
    for (const auto& a : as)
        base.push_back(a.first < a.second ? Edge{a.first, a.second} : Edge{a.second, a.first});
    std::vector<Arc> candidates;
    for (std::size_t i = 0; i < ord.size(); ++i)
        for (std::size_t j = i + 1; j < ord.size(); ++j) {
            Label a = ord[i], b = ord[j];
            if (is_arc(a, b)) continue;
            bool witness = false;
            for (std::size_t k = i + 1; k < j; ++k)
                if (is_arc(a, ord[k]) || is_arc(ord[k], b)) { witness = true; break; }
            if (witness) candidates.push_back({a, b});
        }
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << candidates.size()); ++mask) {
        auto es = base;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (mask >> i & 1) {
                const auto& c = candidates[i];
                es.push_back(c.first < c.second ? Edge{c.first, c.second}
                                                : Edge{c.second, c.first});
            }
        out.push_back(SimpleGraph(ground_of(ord), std::move(es)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace unihopf
