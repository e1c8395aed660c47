#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace unihopf {

using Label = int;

// A finite label set in canonical (sorted) form.
using Ground = std::vector<Label>;

// A linear order: the labels of its ground listed first to last.
using LinearOrder = std::vector<Label>;

using Bijection = std::map<Label, Label>;

inline Ground ground_of(const LinearOrder& ord) {
    Ground g = ord;
    std::sort(g.begin(), g.end());
    return g;
}

inline Ground standard_ground(int n) {
    Ground g(n);
    for (int i = 0; i < n; ++i) g[i] = i;
    return g;
}

// the standard order 0 < 1 < ... < n-1
inline LinearOrder standard_order(int n) { return standard_ground(n); }

inline bool is_subset(const Ground& s, const Ground& g) {
    return std::includes(g.begin(), g.end(), s.begin(), s.end());
}

inline bool disjoint(const Ground& a, const Ground& b) {
    Ground tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
    return tmp.empty();
}

inline Ground ground_union(const Ground& a, const Ground& b) {
    Ground r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Ground ground_intersect(const Ground& a, const Ground& b) {
    Ground r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Ground ground_minus(const Ground& a, const Ground& b) {
    Ground r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool contains(const Ground& g, Label x) {
    return std::binary_search(g.begin(), g.end(), x);
}

inline LinearOrder concat_orders(const LinearOrder& l1, const LinearOrder& l2) {
    if (!disjoint(ground_of(l1), ground_of(l2)))
        throw std::invalid_argument("concat_orders: overlapping grounds");
    LinearOrder r = l1;
    r.insert(r.end(), l2.begin(), l2.end());
    return r;
}

inline LinearOrder restrict_order(const LinearOrder& ord, const Ground& s) {
    if (!is_subset(s, ground_of(ord)))
        throw std::invalid_argument("restrict_order: not a subset of the ground");
    LinearOrder r;
    for (Label x : ord)
        if (contains(s, x)) r.push_back(x);
    return r;
}

// position of each label in the order
inline std::map<Label, int> order_positions(const LinearOrder& ord) {
    std::map<Label, int> pos;
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) pos[ord[i]] = i;
    return pos;
}

// S is an l-segment when i,k in S and i < j < k in l imply j in S.
inline bool is_segment(const LinearOrder& ord, const Ground& s) {
    if (!is_subset(s, ground_of(ord)))
        throw std::invalid_argument("is_segment: not a subset of the ground");
    if (s.empty()) return true;
    int lo = -1, hi = -1, count = 0;
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) {
        if (contains(s, ord[i])) {
            if (lo < 0) lo = i;
            hi = i;
            ++count;
        }
    }
    return hi - lo + 1 == count;
}

inline bool is_initial_segment(const LinearOrder& ord, const Ground& s) {
    if (s.empty()) return true;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!contains(s, ord[i])) return false;
    return true;
}

inline Bijection identity_bijection(const Ground& g) {
    Bijection b;
    for (Label x : g) b[x] = x;
    return b;
}

inline Bijection compose(const Bijection& later, const Bijection& first) {
    Bijection r;
    for (const auto& [k, v] : first) r[k] = later.at(v);
    return r;
}

inline void check_bijection(const Bijection& b, const Ground& domain) {
    Ground image;
    for (Label x : domain) {
        auto it = b.find(x);
        if (it == b.end()) throw std::invalid_argument("relabel: map not defined on the ground");
        image.push_back(it->second);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw std::invalid_argument("relabel: map is not injective");
}

inline LinearOrder relabel(const LinearOrder& ord, const Bijection& b) {
    check_bijection(b, ground_of(ord));
    LinearOrder r;
    r.reserve(ord.size());
    for (Label x : ord) r.push_back(b.at(x));
    return r;
}

inline Ground relabel_ground(const Ground& g, const Bijection& b) {
    Ground r;
    r.reserve(g.size());
    for (Label x : g) r.push_back(b.at(x));
    std::sort(r.begin(), r.end());
    return r;
}

// the bijection sending each label of ord to its position (transport to the standard ground)
inline Bijection to_standard(const LinearOrder& ord) {
    Bijection b;
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) b[ord[i]] = i;
    return b;
}

// An ordered decomposition of a ground into k (possibly empty) disjoint parts.
using Decomposition = std::vector<Ground>;

// Every ordered decomposition of `g` into exactly k parts, each part in canonical form.
// With nonempty=false the count is k^|g|.
inline std::vector<Decomposition> enumerate_decompositions(const Ground& g, int k,
                                                           bool nonempty = false) {
    if (k < 1) throw std::invalid_argument("enumerate_decompositions: k must be >= 1");
    std::vector<Decomposition> out;
    const std::size_t n = g.size();
    std::vector<int> assign(n, 0);
    while (true) {
        Decomposition parts(k);
        for (std::size_t i = 0; i < n; ++i) parts[assign[i]].push_back(g[i]);
        bool ok = true;
        if (nonempty)
            for (const auto& p : parts)
                if (p.empty()) { ok = false; break; }
        if (ok) out.push_back(std::move(parts));
        std::size_t i = 0;
        while (i < n && assign[i] == k - 1) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
    }
    if (n == 0 && nonempty && k >= 1) out.clear();
    return out;
}

// Ordered decompositions into any number >= 1 of nonempty parts ("set compositions").
// The empty ground contributes the single empty sequence.
inline std::vector<Decomposition> enumerate_set_compositions(const Ground& g) {
    std::vector<Decomposition> out;
    if (g.empty()) {
        out.push_back({});
        return out;
    }
    for (int k = 1; k <= static_cast<int>(g.size()); ++k) {
        auto d = enumerate_decompositions(g, k, true);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

inline std::vector<Ground> enumerate_subsets(const Ground& g) {
    std::vector<Ground> out;
    const std::size_t n = g.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Ground s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(g[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<LinearOrder> enumerate_orders(const Ground& g) {
    LinearOrder ord = g;
    std::vector<LinearOrder> out;
    do {
        out.push_back(ord);
    } while (std::next_permutation(ord.begin(), ord.end()));
    return out;
}

inline std::string label_list_str(const std::vector<Label>& xs, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace unihopf
