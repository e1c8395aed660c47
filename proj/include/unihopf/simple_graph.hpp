#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/ordered.hpp"

namespace unihopf {

using Edge = std::pair<Label, Label>;  // stored with first < second

// Simple graph on an explicit vertex set; canonical form keeps edges sorted.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    SimpleGraph(Ground vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        std::sort(vertices_.begin(), vertices_.end());
        for (auto& e : edges_) {
            if (e.first == e.second) throw std::invalid_argument("SimpleGraph: loop");
            if (e.first > e.second) std::swap(e.first, e.second);
            if (!contains(vertices_, e.first) || !contains(vertices_, e.second))
                throw std::invalid_argument("SimpleGraph: edge endpoint outside vertex set");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    static SimpleGraph edgeless(Ground vertices) { return SimpleGraph(std::move(vertices), {}); }

    const Ground& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(Label a, Label b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
    }

    SimpleGraph restrict(const Ground& s) const {
        if (!is_subset(s, vertices_))
            throw std::invalid_argument("SimpleGraph::restrict: not a subset");
        std::vector<Edge> es;
        for (const auto& e : edges_)
            if (contains(s, e.first) && contains(s, e.second)) es.push_back(e);
        return SimpleGraph(s, std::move(es));
    }

    bool has_edge_across(const Ground& s1, const Ground& s2) const {
        for (const auto& e : edges_) {
            bool a1 = contains(s1, e.first), b1 = contains(s1, e.second);
            bool a2 = contains(s2, e.first), b2 = contains(s2, e.second);
            if ((a1 && b2) || (a2 && b1)) return true;
        }
        return false;
    }

    SimpleGraph disjoint_union(const SimpleGraph& other) const {
        if (!disjoint(vertices_, other.vertices_))
            throw std::invalid_argument("SimpleGraph::disjoint_union: grounds overlap");
        auto vs = ground_union(vertices_, other.vertices_);
        auto es = edges_;
        es.insert(es.end(), other.edges_.begin(), other.edges_.end());
        return SimpleGraph(std::move(vs), std::move(es));
    }

    SimpleGraph relabeled(const Bijection& bij) const {
        check_bijection(bij, vertices_);
        Ground vs;
        for (Label v : vertices_) vs.push_back(bij.at(v));
        std::vector<Edge> es;
        for (const auto& e : edges_) es.push_back({bij.at(e.first), bij.at(e.second)});
        return SimpleGraph(std::move(vs), std::move(es));
    }

    // connected components as a partition of the vertex set
    std::vector<Ground> components() const {
        std::vector<Ground> out;
        std::vector<bool> seen(vertices_.size(), false);
        auto index = [&](Label v) {
            return std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin();
        };
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (seen[i]) continue;
            Ground comp;
            std::vector<std::size_t> stack{i};
            seen[i] = true;
            while (!stack.empty()) {
                std::size_t j = stack.back();
                stack.pop_back();
                comp.push_back(vertices_[j]);
                for (const auto& e : edges_) {
                    Label u = vertices_[j];
                    Label other = e.first == u ? e.second : (e.second == u ? e.first : -1);
                    if (other < 0) continue;
                    std::size_t k = index(other);
                    if (!seen[k]) {
                        seen[k] = true;
                        stack.push_back(k);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_connected() const { return vertices_.empty() || components().size() == 1; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const SimpleGraph& a, const SimpleGraph& b) { return !(a == b); }
    friend bool operator<(const SimpleGraph& a, const SimpleGraph& b) {
        if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
        return a.edges_ < b.edges_;
    }

    std::string str() const {
        std::string s = "G[" + label_list_str(vertices_, ',') + ";";
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
        }
        return s + "]";
    }

  private:
    Ground vertices_;
    std::vector<Edge> edges_;
};

inline std::vector<Edge> all_pairs(const Ground& g) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back({g[i], g[j]});
    return out;
}

inline std::vector<SimpleGraph> enumerate_graphs(const Ground& g) {
    auto pairs = all_pairs(g);
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) es.push_back(pairs[i]);
        out.push_back(SimpleGraph(g, std::move(es)));
    }
    return out;
}

// All graphs on the union restricting to g1 and g2: cross edges are free.
inline std::vector<SimpleGraph> graph_quasi_shuffles(const SimpleGraph& g1,
                                                     const SimpleGraph& g2) {
    auto base = g1.disjoint_union(g2);
    std::vector<Edge> cross;
    for (Label a : g1.vertices())
        for (Label b : g2.vertices()) cross.push_back(a < b ? Edge{a, b} : Edge{b, a});
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << cross.size()); ++mask) {
        auto es = base.edges();
        for (std::size_t i = 0; i < cross.size(); ++i)
            if (mask >> i & 1) es.push_back(cross[i]);
        out.push_back(SimpleGraph(base.vertices(), std::move(es)));
    }
    return out;
}

}  // namespace unihopf
