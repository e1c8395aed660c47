#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/ordered.hpp"
#include "unihopf/prime_field.hpp"
#include "unihopf/simple_graph.hpp"

namespace unihopf {

// Upper unitriangular matrix relative to a linear order on its index set.
// Only the strictly-upper entries (positions (r,c) with r < c in the order) are
// stored, row-major; the diagonal is implicitly 1 and the modulus is shared.
class UniMatrix {
  public:
    UniMatrix() : p_(2) {}
    UniMatrix(LinearOrder order, std::uint32_t p)
        : order_(std::move(order)), p_(p), vals_(tri(order_.size()), 0) {
        if (!is_prime(p)) throw std::invalid_argument("UniMatrix: modulus must be prime");
    }
    UniMatrix(LinearOrder order, std::uint32_t p, std::vector<std::uint8_t> vals)
        : order_(std::move(order)), p_(p), vals_(std::move(vals)) {
        if (!is_prime(p)) throw std::invalid_argument("UniMatrix: modulus must be prime");
        if (vals_.size() != tri(order_.size()))
            throw std::invalid_argument("UniMatrix: wrong number of entries");
    }

    static UniMatrix identity(LinearOrder order, std::uint32_t p) {
        return UniMatrix(std::move(order), p);
    }
    // Id + c E_{ij} with i before j in the order
    static UniMatrix elementary(LinearOrder order, std::uint32_t p, Label i, Label j,
                                std::uint32_t c) {
        UniMatrix m(std::move(order), p);
        if (c % p == 0) throw std::invalid_argument("elementary: coefficient must be nonzero");
        m.set_entry(i, j, c % p);
        return m;
    }

    int n() const { return static_cast<int>(order_.size()); }
    std::uint32_t modulus() const { return p_; }
    const LinearOrder& order() const { return order_; }
    Ground ground() const { return ground_of(order_); }
    const std::vector<std::uint8_t>& vals() const { return vals_; }

    static std::size_t tri(std::size_t n) { return n * (n - 1) / 2; }
    std::size_t pos(int r, int c) const {
        return static_cast<std::size_t>(r) * order_.size() - static_cast<std::size_t>(r) * (r + 1) / 2 +
               (c - r - 1);
    }

    std::uint8_t at(int r, int c) const {  // by positions in the order; r < c
        return vals_[pos(r, c)];
    }
    void set_at(int r, int c, std::uint32_t v) { vals_[pos(r, c)] = static_cast<std::uint8_t>(v % p_); }

    // by labels; (i,j) must be strictly upper for this order
    std::uint32_t entry(Label i, Label j) const {
        auto [r, c] = positions_checked(i, j);
        return at(r, c);
    }
    void set_entry(Label i, Label j, std::uint32_t v) {
        auto [r, c] = positions_checked(i, j);
        set_at(r, c, v);
    }
    FFElem entry_ff(Label i, Label j) const { return FFElem(entry(i, j), p_); }

    friend UniMatrix operator*(const UniMatrix& a, const UniMatrix& b) {
        if (a.order_ != b.order_ || a.p_ != b.p_)
            throw std::invalid_argument("UniMatrix: product of matrices on different ambients");
        const int n = a.n();
        UniMatrix r(a.order_, a.p_);
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                // (i,k) entry of the product: sum over i <= j <= k, unit diagonal
                std::uint64_t s = a.at(i, k) + b.at(i, k);
                for (int j = i + 1; j < k; ++j) s += a.at(i, j) * b.at(j, k);
                r.set_at(i, k, static_cast<std::uint32_t>(s % a.p_));
            }
        return r;
    }

    UniMatrix inverse() const {
        // Back-substitution on U X = Id, column by column in position space.
        const int n_ = n();
        UniMatrix x(order_, p_);
        for (int c = n_ - 1; c >= 0; --c) {
            for (int r = c - 1; r >= 0; --r) {
                // x[r][c] = -(u[r][c] + sum_{r<j<c} u[r][j] x[j][c])
                std::uint64_t s = at(r, c);
                for (int j = r + 1; j < c; ++j) s += at(r, j) * x.at(j, c);
                x.set_at(r, c, ff_neg(static_cast<std::uint32_t>(s % p_), p_));
            }
        }
        return x;
    }

    UniMatrix principal_minor(const Ground& s) const {
        if (!is_subset(s, ground()))
            throw std::invalid_argument("principal_minor: not a subset of the ground");
        LinearOrder sub = restrict_order(order_, s);
        UniMatrix m(sub, p_);
        auto posmap = order_positions(order_);
        for (std::size_t r = 0; r < sub.size(); ++r)
            for (std::size_t c = r + 1; c < sub.size(); ++c)
                m.set_at(static_cast<int>(r), static_cast<int>(c),
                         at(posmap.at(sub[r]), posmap.at(sub[c])));
        return m;
    }

    // Block combination relative to an order on the full ground; entries between the
    // two grounds are zero. Each operand must be unitriangular for the restriction.
    static UniMatrix direct_sum(const UniMatrix& u, const UniMatrix& v, const LinearOrder& ord) {
        if (!disjoint(u.ground(), v.ground()))
            throw std::invalid_argument("direct_sum: grounds overlap");
        if (u.p_ != v.p_) throw std::invalid_argument("direct_sum: modulus mismatch");
        if (ground_union(u.ground(), v.ground()) != ground_of(ord))
            throw std::invalid_argument("direct_sum: order does not cover the union");
        if (restrict_order(ord, u.ground()) != u.order_ ||
            restrict_order(ord, v.ground()) != v.order_)
            throw std::invalid_argument("direct_sum: operand order incompatible with the ambient order");
        UniMatrix m(ord, u.p_);
        m.paste(u);
        m.paste(v);
        return m;
    }

    // g(U): an edge for every nonzero strictly-upper entry
    SimpleGraph graph() const {
        std::vector<Edge> es;
        const int n_ = n();
        for (int r = 0; r < n_; ++r)
            for (int c = r + 1; c < n_; ++c)
                if (at(r, c)) es.push_back(order_[r] < order_[c] ? Edge{order_[r], order_[c]}
                                                                 : Edge{order_[c], order_[r]});
        return SimpleGraph(ground(), std::move(es));
    }

    UniMatrix relabeled(const Bijection& bij) const {
        return UniMatrix(unihopf::relabel(order_, bij), p_, vals_);
    }
    UniMatrix to_standard_order() const { return relabeled(unihopf::to_standard(order_)); }
    UniMatrix with_order(const LinearOrder& ord) const {  // transport by position
        if (ord.size() != order_.size())
            throw std::invalid_argument("with_order: size mismatch");
        return UniMatrix(ord, p_, vals_);
    }

    // Entries as base-p digits in row-major position order, first position least significant.
    std::uint64_t encode() const {
        std::uint64_t idx = 0;
        for (std::size_t t = vals_.size(); t-- > 0;) idx = idx * p_ + vals_[t];
        return idx;
    }
    static UniMatrix decode(std::uint64_t idx, LinearOrder order, std::uint32_t p) {
        UniMatrix m(std::move(order), p);
        for (std::size_t t = 0; t < m.vals_.size(); ++t) {
            m.vals_[t] = static_cast<std::uint8_t>(idx % p);
            idx /= p;
        }
        return m;
    }

    bool is_identity() const {
        for (auto v : vals_)
            if (v) return false;
        return true;
    }

    // at most one nonzero entry per row and per column of U - Id
    bool is_row_col_sparse() const {
        const int n_ = n();
        for (int r = 0; r < n_; ++r) {
            int cnt = 0;
            for (int c = r + 1; c < n_; ++c) cnt += at(r, c) != 0;
            if (cnt > 1) return false;
        }
        for (int c = 0; c < n_; ++c) {
            int cnt = 0;
            for (int r = 0; r < c; ++r) cnt += at(r, c) != 0;
            if (cnt > 1) return false;
        }
        return true;
    }

    friend bool operator==(const UniMatrix& a, const UniMatrix& b) {
        return a.order_ == b.order_ && a.p_ == b.p_ && a.vals_ == b.vals_;
    }
    friend bool operator!=(const UniMatrix& a, const UniMatrix& b) { return !(a == b); }
    friend bool operator<(const UniMatrix& a, const UniMatrix& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.vals_ < b.vals_;
    }

    std::string str() const {
        std::string s = "U[" + label_list_str(order_) + ";";
        bool first = true;
        for (int r = 0; r < n(); ++r)
            for (int c = r + 1; c < n(); ++c)
                if (at(r, c)) {
                    if (!first) s += " ";
                    first = false;
                    s += "(" + std::to_string(order_[r]) + "," + std::to_string(order_[c]) +
                         ")=" + std::to_string(at(r, c));
                }
        return s + "]";
    }

  private:
    std::pair<int, int> positions_checked(Label i, Label j) const {
        auto posmap = order_positions(order_);
        auto it1 = posmap.find(i), it2 = posmap.find(j);
        if (it1 == posmap.end() || it2 == posmap.end())
            throw std::invalid_argument("UniMatrix: label outside the ground");
        if (it1->second >= it2->second)
            throw std::invalid_argument("UniMatrix: (i,j) is not strictly upper for this order");
        return {it1->second, it2->second};
    }
    void paste(const UniMatrix& u) {
        auto posmap = order_positions(order_);
        for (int r = 0; r < u.n(); ++r)
            for (int c = r + 1; c < u.n(); ++c)
                set_at(posmap.at(u.order_[r]), posmap.at(u.order_[c]), u.at(r, c));
    }

    LinearOrder order_;
    std::uint32_t p_;
    std::vector<std::uint8_t> vals_;
};

inline std::vector<UniMatrix> enumerate_unimatrices(const LinearOrder& ord, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < UniMatrix::tri(ord.size()); ++t) count *= p;
    std::vector<UniMatrix> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(UniMatrix::decode(i, ord, p));
    return out;
}

// Whether U -> U_S preserves products; when it does not, a concrete violating pair
// of elementary matrices is returned.
struct HomomorphismWitness {
    bool multiplicative;
    std::optional<std::pair<UniMatrix, UniMatrix>> counterexample;
};

inline HomomorphismWitness homomorphism_witness(const LinearOrder& ord, const Ground& s,
                                                std::uint32_t p = 2) {
    if (is_segment(ord, s)) return {true, std::nullopt};
    // find i < j < k in the order with i,k in S and j outside
    const int n = static_cast<int>(ord.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (contains(s, ord[a]) && !contains(s, ord[b]) && contains(s, ord[c])) {
                    auto u = UniMatrix::elementary(ord, p, ord[a], ord[b], 1);
                    auto v = UniMatrix::elementary(ord, p, ord[b], ord[c], 1);
                    return {false, std::make_pair(u, v)};
                }
    throw std::logic_error("homomorphism_witness: non-segment without witness");
}

// Canonical superclass representative by alternating row/column elimination.
// Sweeps columns left to right; in each column the lowest nonzero entry whose row is
// not yet a pivot row becomes the pivot, entries above it are cleared by adding lower
// rows to upper rows, and entries to its right are cleared by adding earlier columns
// to later ones. Both move kinds stay inside the group, so the superclass is preserved.
// Repeats until a fixpoint, which has at most one nonzero entry in each row and column.
inline UniMatrix canonical_superclass_rep(const UniMatrix& u) {
    const int n = u.n();
    const std::uint32_t p = u.modulus();
    // strictly upper part as a dense working copy
    std::vector<std::vector<std::uint32_t>> N(n, std::vector<std::uint32_t>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) N[r][c] = u.at(r, c);
    for (int sweep = 0; sweep < 128; ++sweep) {
        bool changed = false;
        std::vector<bool> pivot_row(n, false);
        for (int c = 0; c < n; ++c) {
            int r = -1;
            for (int cand = c - 1; cand >= 0; --cand)
                if (N[cand][c] && !pivot_row[cand]) { r = cand; break; }
            if (r < 0) continue;
            pivot_row[r] = true;
            const std::uint32_t vinv = ff_inv(N[r][c], p);
            for (int rp = 0; rp < r; ++rp) {
                if (!N[rp][c]) continue;
                const std::uint32_t lam = ff_neg(ff_mul(N[rp][c], vinv, p), p);
                for (int cc = 0; cc < n; ++cc) N[rp][cc] = (N[rp][cc] + lam * N[r][cc]) % p;
                changed = true;
            }
            for (int cp = c + 1; cp < n; ++cp) {
                if (!N[r][cp]) continue;
                const std::uint32_t lam = ff_neg(ff_mul(N[r][cp], vinv, p), p);
                for (int rr = 0; rr < n; ++rr) N[rr][cp] = (N[rr][cp] + lam * N[rr][c]) % p;
                changed = true;
            }
        }
        if (!changed) {
            UniMatrix out(u.order(), p);
            for (int r = 0; r < n; ++r)
                for (int c = r + 1; c < n; ++c) out.set_at(r, c, N[r][c]);
            return out;
        }
    }
    throw std::logic_error("canonical_superclass_rep: no fixpoint reached");
}

}  // namespace unihopf
