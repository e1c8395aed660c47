#pragma once

// Generic Hopf-monoid machinery over exact rationals.
//
// An instance type H models a connected Hopf monoid in vector species through:
//   using Key;                          ordered, copyable basis key
//   std::string name() const;
//   bool commutative() const;           declared flags, verified by the checker
//   bool cocommutative() const;
//   std::vector<Key> basis(const Ground&) const;
//   Ground key_ground(const Key&) const;
//   Key relabel_key(const Key&, const Bijection&) const;
//   LinComb<Key> product(const Ground& s1, const Ground& s2,
//                        const Key& a, const Key& b) const;     // a on s1, b on s2
//   LinComb<std::pair<Key,Key>> coproduct(const Ground& s1, const Ground& s2,
//                                         const Key&) const;
//   std::string key_str(const Key&) const;
// Optional hooks:
//   LinearOrder block_of(const Key&) const;     linear-order summand of the key
//   bool free_order_factor() const;             the symmetric group acts freely on an
//   Integer standard_orbit_count(int n) const;  order coordinate; orbits = keys with
//                                               the standard order

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "unihopf/exact_linalg.hpp"
#include "unihopf/lin_comb.hpp"
#include "unihopf/ordered.hpp"
#include "unihopf/rational.hpp"
#include "unihopf/trunc_series.hpp"

namespace unihopf {

struct CheckReport {
    std::string subject;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
    void fail(std::string msg) {
        if (failures.size() < 200) failures.push_back(std::move(msg));
    }
    void note(std::string msg) { notes.push_back(std::move(msg)); }
    void merge(const CheckReport& o) {
        checks += o.checks;
        for (const auto& f : o.failures) fail(o.subject.empty() ? f : o.subject + ": " + f);
        for (const auto& n : o.notes) notes.push_back(o.subject.empty() ? n : o.subject + ": " + n);
    }
    std::string summary() const {
        std::string s = subject + ": " + std::to_string(checks) + " checks, " +
                        (pass() ? "pass" : std::to_string(failures.size()) + " FAILURES");
        for (std::size_t i = 0; i < failures.size() && i < 5; ++i) s += "\n  " + failures[i];
        return s;
    }
};

namespace hopf_detail {

template <class H>
LinComb<typename H::Key> mu_lin(const H& h, const Ground& s1, const Ground& s2,
                                const LinComb<typename H::Key>& a,
                                const LinComb<typename H::Key>& b) {
    LinComb<typename H::Key> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            auto pr = h.product(s1, s2, ka, kb);
            for (const auto& [k, c] : pr.terms()) out.add(k, ca * cb * c);
        }
    return out;
}

template <class K>
LinComb<std::pair<K, K>> swap_tensor(const LinComb<std::pair<K, K>>& t) {
    LinComb<std::pair<K, K>> out;
    for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
    return out;
}

}  // namespace hopf_detail

// Verifies associativity, coassociativity, the product/coproduct compatibility
// square, unit/counit identifications, connectedness, and the declared
// (co)commutativity flags, on the standard grounds of size <= n_max, exhaustively
// over ordered decompositions and basis elements.
template <class H>
CheckReport check_hopf_axioms(const H& h, int n_max) {
    using Key = typename H::Key;
    CheckReport rep;
    rep.subject = h.name();

    auto empty_basis = h.basis({});
    if (empty_basis.size() != 1) {
        rep.fail("connectedness: empty-ground component has dimension " +
                 std::to_string(empty_basis.size()));
        return rep;
    }
    const Key unit = empty_basis[0];
    ++rep.checks;

    bool comm_witness = false, cocomm_witness = false;

    for (int n = 0; n <= n_max; ++n) {
        const Ground I = standard_ground(n);
        std::map<Ground, std::vector<Key>> bas;
        for (const auto& s : enumerate_subsets(I)) bas[s] = h.basis(s);

        // unit/counit: the empty-part cases must be the canonical identifications
        for (const auto& x : bas[I]) {
            if (h.product(I, {}, x, unit) != LinComb<Key>::single(x))
                rep.fail("unit law (right) fails at " + h.key_str(x));
            if (h.product({}, I, unit, x) != LinComb<Key>::single(x))
                rep.fail("unit law (left) fails at " + h.key_str(x));
            LinComb<std::pair<Key, Key>> right = LinComb<std::pair<Key, Key>>::single({x, unit});
            LinComb<std::pair<Key, Key>> left = LinComb<std::pair<Key, Key>>::single({unit, x});
            if (h.coproduct(I, {}, x) != right) rep.fail("counit law (right) fails at " + h.key_str(x));
            if (h.coproduct({}, I, x) != left) rep.fail("counit law (left) fails at " + h.key_str(x));
            rep.checks += 4;
        }

        // associativity and coassociativity over all ordered 3-part decompositions
        for (const auto& parts : enumerate_decompositions(I, 3)) {
            const Ground &s1 = parts[0], &s2 = parts[1], &s3 = parts[2];
            const Ground s12 = ground_union(s1, s2), s23 = ground_union(s2, s3);
            for (const auto& x : bas[s1])
                for (const auto& y : bas[s2])
                    for (const auto& z : bas[s3]) {
                        auto lhs = hopf_detail::mu_lin(h, s12, s3, h.product(s1, s2, x, y),
                                                       LinComb<Key>::single(z));
                        auto rhs = hopf_detail::mu_lin(h, s1, s23, LinComb<Key>::single(x),
                                                       h.product(s2, s3, y, z));
                        ++rep.checks;
                        if (lhs != rhs)
                            rep.fail("associativity fails on (" + label_list_str(s1, ',') + "|" +
                                     label_list_str(s2, ',') + "|" + label_list_str(s3, ',') +
                                     ") at " + h.key_str(x) + " , " + h.key_str(y) + " , " +
                                     h.key_str(z));
                    }
            for (const auto& x : bas[I]) {
                // (Delta x id) Delta_{s12,s3}  vs  (id x Delta) Delta_{s1,s23}
                LinComb<std::tuple<Key, Key, Key>> lhs, rhs;
                for (const auto& [kk, c] : h.coproduct(s12, s3, x).terms())
                    for (const auto& [kk2, c2] : h.coproduct(s1, s2, kk.first).terms())
                        lhs.add({kk2.first, kk2.second, kk.second}, c * c2);
                for (const auto& [kk, c] : h.coproduct(s1, s23, x).terms())
                    for (const auto& [kk2, c2] : h.coproduct(s2, s3, kk.second).terms())
                        rhs.add({kk.first, kk2.first, kk2.second}, c * c2);
                ++rep.checks;
                if (lhs != rhs)
                    rep.fail("coassociativity fails on (" + label_list_str(s1, ',') + "|" +
                             label_list_str(s2, ',') + "|" + label_list_str(s3, ',') + ") at " +
                             h.key_str(x));
            }
        }

        // compatibility square for every pair of 2-part decompositions
        for (const auto& sparts : enumerate_decompositions(I, 2)) {
            const Ground &s1 = sparts[0], &s2 = sparts[1];
            for (const auto& tparts : enumerate_decompositions(I, 2)) {
                const Ground &t1 = tparts[0], &t2 = tparts[1];
                const Ground a = ground_intersect(s1, t1), b = ground_intersect(s1, t2);
                const Ground c = ground_intersect(s2, t1), d = ground_intersect(s2, t2);
                for (const auto& x : bas[s1])
                    for (const auto& y : bas[s2]) {
                        LinComb<std::pair<Key, Key>> lhs;
                        for (const auto& [k, co] : h.product(s1, s2, x, y).terms()) {
                            for (const auto& [kk, c2] : h.coproduct(t1, t2, k).terms())
                                lhs.add(kk, co * c2);
                        }
                        LinComb<std::pair<Key, Key>> rhs;
                        for (const auto& [xab, cx] : h.coproduct(a, b, x).terms())
                            for (const auto& [ycd, cy] : h.coproduct(c, d, y).terms()) {
                                auto left = h.product(a, c, xab.first, ycd.first);
                                auto right = h.product(b, d, xab.second, ycd.second);
                                for (const auto& [kl, cl] : left.terms())
                                    for (const auto& [kr, cr] : right.terms())
                                        rhs.add({kl, kr}, cx * cy * cl * cr);
                            }
                        ++rep.checks;
                        if (lhs != rhs)
                            rep.fail("compatibility fails on S=(" + label_list_str(s1, ',') +
                                     "|" + label_list_str(s2, ',') + ") T=(" +
                                     label_list_str(t1, ',') + "|" + label_list_str(t2, ',') +
                                     ") at " + h.key_str(x) + " , " + h.key_str(y));
                    }
            }
        }

        // declared flags
        for (const auto& sparts : enumerate_decompositions(I, 2)) {
            const Ground &s1 = sparts[0], &s2 = sparts[1];
            if (h.commutative()) {
                for (const auto& x : bas[s1])
                    for (const auto& y : bas[s2]) {
                        ++rep.checks;
                        if (h.product(s1, s2, x, y) != h.product(s2, s1, y, x))
                            rep.fail("declared commutative but fails at " + h.key_str(x) + " , " +
                                     h.key_str(y));
                    }
            } else if (!comm_witness) {
                for (const auto& x : bas[s1]) {
                    for (const auto& y : bas[s2])
                        if (h.product(s1, s2, x, y) != h.product(s2, s1, y, x)) {
                            comm_witness = true;
                            break;
                        }
                    if (comm_witness) break;
                }
            }
            if (h.cocommutative()) {
                for (const auto& x : bas[I]) {
                    ++rep.checks;
                    if (hopf_detail::swap_tensor(h.coproduct(s1, s2, x)) !=
                        h.coproduct(s2, s1, x))
                        rep.fail("declared cocommutative but fails at " + h.key_str(x));
                }
            } else if (!cocomm_witness) {
                for (const auto& x : bas[I])
                    if (hopf_detail::swap_tensor(h.coproduct(s1, s2, x)) !=
                        h.coproduct(s2, s1, x)) {
                        cocomm_witness = true;
                        break;
                    }
            }
        }
    }

    if (!h.commutative() && n_max >= 2 && !comm_witness)
        rep.fail("declared not commutative, but no witness found up to n=" +
                 std::to_string(n_max));
    if (!h.cocommutative() && n_max >= 2 && !cocomm_witness)
        rep.fail("declared not cocommutative, but no witness found up to n=" +
                 std::to_string(n_max));
    rep.note(std::string("commutative=") + (h.commutative() ? "yes" : "no") +
             ", cocommutative=" + (h.cocommutative() ? "yes" : "no"));
    return rep;
}

// ---------------------------------------------------------------------------
// Hadamard product of two instances: componentwise basis and operations, with
// the middle interchange built into the tensor bookkeeping.
template <class H1, class H2>
class Hadamard {
  public:
    using Key = std::pair<typename H1::Key, typename H2::Key>;

    Hadamard(H1 a, H2 b) : a_(std::move(a)), b_(std::move(b)) {}

    const H1& left() const { return a_; }
    const H2& right() const { return b_; }

    std::string name() const { return a_.name() + "x" + b_.name(); }
    bool commutative() const { return a_.commutative() && b_.commutative(); }
    bool cocommutative() const { return a_.cocommutative() && b_.cocommutative(); }

    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        auto ka = a_.basis(g);
        auto kb = b_.basis(g);
        out.reserve(ka.size() * kb.size());
        for (const auto& x : ka)
            for (const auto& y : kb) out.push_back({x, y});
        return out;
    }
    Ground key_ground(const Key& k) const { return a_.key_ground(k.first); }
    Key relabel_key(const Key& k, const Bijection& bij) const {
        return {a_.relabel_key(k.first, bij), b_.relabel_key(k.second, bij)};
    }
    LinComb<Key> product(const Ground& s1, const Ground& s2, const Key& x, const Key& y) const {
        LinComb<Key> out;
        auto pa = a_.product(s1, s2, x.first, y.first);
        auto pb = b_.product(s1, s2, x.second, y.second);
        for (const auto& [ka, ca] : pa.terms())
            for (const auto& [kb, cb] : pb.terms()) out.add({ka, kb}, ca * cb);
        return out;
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        LinComb<std::pair<Key, Key>> out;
        auto da = a_.coproduct(s1, s2, k.first);
        auto db = b_.coproduct(s1, s2, k.second);
        for (const auto& [ka, ca] : da.terms())
            for (const auto& [kb, cb] : db.terms())
                out.add({{ka.first, kb.first}, {ka.second, kb.second}}, ca * cb);
        return out;
    }
    std::string key_str(const Key& k) const {
        return "(" + a_.key_str(k.first) + " (x) " + b_.key_str(k.second) + ")";
    }

    // orbit shortcut when the left factor is the species of linear orders
    bool free_order_factor() const {
        if constexpr (requires(const H1& a) { H1::is_linear_order_species; })
            return H1::is_linear_order_species;
        else
            return false;
    }
    Integer standard_orbit_count(int n) const {
        return Integer(static_cast<unsigned long>(b_.basis(standard_ground(n)).size()));
    }
    LinearOrder block_of(const Key& k) const {
        if constexpr (requires(const H1& a, const typename H1::Key& kk) { a.block_of(kk); })
            return a_.block_of(k.first);
        else
            return {};
    }

  private:
    H1 a_;
    H2 b_;
};

// ---------------------------------------------------------------------------
// Free monoid on a generator species (no empty-ground generators), with the
// canonical Hopf structure: generators are primitive, so in a coproduct each
// factor travels whole to one side or the other.
template <class Q>
class FreeMonoid {
  public:
    using GKey = typename Q::Key;
    using Key = std::vector<GKey>;  // factors in order; grounds disjoint and nonempty

    explicit FreeMonoid(Q q) : q_(std::move(q)) {
        if (!q_.basis({}).empty())
            throw std::invalid_argument("FreeMonoid: generator species has an empty-ground component");
    }
    const Q& generators() const { return q_; }

    std::string name() const { return "T(" + q_.name() + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        for (const auto& parts : enumerate_set_compositions(g)) {
            std::vector<std::vector<GKey>> choices;
            for (const auto& part : parts) choices.push_back(q_.basis(part));
            Key cur;
            build(choices, 0, cur, out);
        }
        return out;
    }
    Ground key_ground(const Key& k) const {
        Ground g;
        for (const auto& f : k) g = ground_union(g, q_.key_ground(f));
        return g;
    }
    Key relabel_key(const Key& k, const Bijection& bij) const {
        Key out;
        out.reserve(k.size());
        for (const auto& f : k) out.push_back(q_.relabel_key(f, bij));
        return out;
    }
    LinComb<Key> product(const Ground&, const Ground&, const Key& x, const Key& y) const {
        Key r = x;
        r.insert(r.end(), y.begin(), y.end());
        return LinComb<Key>::single(r);
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        Key left, right;
        for (const auto& f : k) {
            Ground fg = q_.key_ground(f);
            if (is_subset(fg, s1))
                left.push_back(f);
            else if (is_subset(fg, s2))
                right.push_back(f);
            else
                return {};
        }
        return LinComb<std::pair<Key, Key>>::single({left, right});
    }
    std::string key_str(const Key& k) const {
        std::string s = "[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += " | ";
            s += q_.key_str(k[i]);
        }
        return s + "]";
    }

  private:
    static void build(const std::vector<std::vector<GKey>>& choices, std::size_t i, Key& cur,
                      std::vector<Key>& out) {
        if (i == choices.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& g : choices[i]) {
            cur.push_back(g);
            build(choices, i + 1, cur, out);
            cur.pop_back();
        }
    }
    Q q_;
};

// ---------------------------------------------------------------------------
// Morphisms between instances, given by linear extension of a key-level map.
template <class HS, class HT>
struct SpeciesMorphism {
    const HS* src;
    const HT* dst;
    std::string name;
    std::function<LinComb<typename HT::Key>(const typename HS::Key&)> map;

    LinComb<typename HT::Key> apply(const LinComb<typename HS::Key>& x) const {
        return x.mapped(map);
    }
};

struct MorphismOptions {
    bool check_injective = false;
    bool check_bijective = false;
    std::size_t rank_dim_limit = 512;  // guard for the dense fallback
};

template <class HS, class HT>
CheckReport check_morphism(const SpeciesMorphism<HS, HT>& f, int n_max,
                           MorphismOptions opts = {}) {
    using SK = typename HS::Key;
    CheckReport rep;
    rep.subject = f.name;
    const HS& hs = *f.src;
    const HT& ht = *f.dst;

    // unit component
    {
        auto us = hs.basis({});
        auto ut = ht.basis({});
        if (us.size() != 1 || ut.size() != 1)
            rep.fail("source or target is not connected");
        else if (f.map(us[0]) != LinComb<typename HT::Key>::single(ut[0]))
            rep.fail("unit basis element is not preserved");
        ++rep.checks;
    }

    for (int n = 0; n <= n_max && rep.pass(); ++n) {
        const Ground I = standard_ground(n);
        std::map<Ground, std::vector<SK>> bas;
        for (const auto& s : enumerate_subsets(I)) bas[s] = hs.basis(s);

        for (const auto& parts : enumerate_decompositions(I, 2)) {
            const Ground &s1 = parts[0], &s2 = parts[1];
            for (const auto& x : bas[s1])
                for (const auto& y : bas[s2]) {
                    auto lhs = f.apply(hs.product(s1, s2, x, y));
                    auto rhs = hopf_detail::mu_lin(ht, s1, s2, f.map(x), f.map(y));
                    ++rep.checks;
                    if (lhs != rhs)
                        rep.fail("product square fails on (" + label_list_str(s1, ',') + "|" +
                                 label_list_str(s2, ',') + ") at " + hs.key_str(x) + " , " +
                                 hs.key_str(y));
                }
            for (const auto& x : bas[I]) {
                LinComb<std::pair<typename HT::Key, typename HT::Key>> lhs;
                for (const auto& [kk, c] : hs.coproduct(s1, s2, x).terms())
                    for (const auto& [k1, c1] : f.map(kk.first).terms())
                        for (const auto& [k2, c2] : f.map(kk.second).terms())
                            lhs.add({k1, k2}, c * c1 * c2);
                LinComb<std::pair<typename HT::Key, typename HT::Key>> rhs;
                for (const auto& [k, c] : f.map(x).terms())
                    for (const auto& [kk, c2] : ht.coproduct(s1, s2, k).terms())
                        rhs.add(kk, c * c2);
                ++rep.checks;
                if (lhs != rhs)
                    rep.fail("coproduct square fails on (" + label_list_str(s1, ',') + "|" +
                             label_list_str(s2, ',') + ") at " + hs.key_str(x));
            }
        }

        if (opts.check_injective || opts.check_bijective) {
            const auto& keys = bas[I];
            // cheap certificates first: all images single unit-coefficient keys, or
            // pairwise disjoint nonzero supports; dense rank as a last resort
            bool all_single_unit = true, disjoint_supports = true;
            std::set<typename HT::Key> seen_single;
            std::set<typename HT::Key> seen_support;
            bool distinct = true;
            for (const auto& k : keys) {
                auto img = f.map(k);
                if (img.is_zero()) {
                    all_single_unit = disjoint_supports = false;
                    break;
                }
                if (!(img.size() == 1 && (img.begin()->second == Rational(1) ||
                                          img.begin()->second == Rational(-1))))
                    all_single_unit = false;
                if (all_single_unit && !seen_single.insert(img.begin()->first).second)
                    distinct = false;
                for (const auto& [tk, c] : img.terms())
                    if (!seen_support.insert(tk).second) disjoint_supports = false;
            }
            ++rep.checks;
            if (all_single_unit) {
                if (!distinct) rep.fail("not injective on ground of size " + std::to_string(n));
            } else if (!disjoint_supports) {
                const auto tkeys = ht.basis(I);
                if (keys.size() > opts.rank_dim_limit || tkeys.size() > opts.rank_dim_limit) {
                    rep.fail("injectivity not certified (dimension over rank limit)");
                } else {
                    std::map<typename HT::Key, std::size_t> tidx;
                    for (std::size_t i = 0; i < tkeys.size(); ++i) tidx[tkeys[i]] = i;
                    std::vector<std::vector<Rational>> m(tkeys.size(),
                                                         std::vector<Rational>(keys.size()));
                    for (std::size_t j = 0; j < keys.size(); ++j)
                        for (const auto& [tk, c] : f.map(keys[j]).terms())
                            m[tidx.at(tk)][j] = c;
                    if (rank_rational(m) != keys.size())
                        rep.fail("rank deficit on ground of size " + std::to_string(n));
                }
            }
            if (opts.check_bijective) {
                ++rep.checks;
                if (ht.basis(I).size() != keys.size())
                    rep.fail("dimension mismatch on ground of size " + std::to_string(n) +
                             " (not surjective)");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Endomorphisms as per-ground column maps, and their convolution product.
template <class H>
struct Endo {
    using Key = typename H::Key;
    const H* h;
    std::map<Ground, std::map<Key, LinComb<Key>>> cols;

    LinComb<Key> apply(const Ground& g, const LinComb<Key>& x) const {
        const auto& table = cols.at(g);
        LinComb<Key> out;
        for (const auto& [k, c] : x.terms()) {
            auto it = table.find(k);
            if (it == table.end()) continue;
            out += it->second.scaled(c);
        }
        return out;
    }
};

template <class H, class F>
Endo<H> make_endo(const H& h, const std::vector<Ground>& grounds, F&& fn) {
    Endo<H> e{&h, {}};
    for (const auto& g : grounds) {
        auto& table = e.cols[g];
        for (const auto& k : h.basis(g)) table[k] = fn(g, k);
    }
    return e;
}

template <class H>
Endo<H> endo_identity(const H& h, const std::vector<Ground>& grounds) {
    return make_endo(h, grounds, [](const Ground&, const typename H::Key& k) {
        return LinComb<typename H::Key>::single(k);
    });
}

// iota o epsilon: identity on the empty component, zero elsewhere
template <class H>
Endo<H> endo_iota_eps(const H& h, const std::vector<Ground>& grounds) {
    return make_endo(h, grounds, [](const Ground& g, const typename H::Key& k) {
        return g.empty() ? LinComb<typename H::Key>::single(k) : LinComb<typename H::Key>();
    });
}

// (f*g) = mu o (f (x) g) o Delta, summed over all ordered 2-part decompositions.
template <class H>
Endo<H> endo_convolve(const Endo<H>& f, const Endo<H>& g) {
    const H& h = *f.h;
    Endo<H> out{&h, {}};
    for (const auto& [I, table] : f.cols) {
        auto& otable = out.cols[I];
        for (const auto& [key, unused] : table) {
            LinComb<typename H::Key> acc;
            for (const auto& parts : enumerate_decompositions(I, 2)) {
                const Ground &s = parts[0], &t = parts[1];
                for (const auto& [kk, c] : h.coproduct(s, t, key).terms()) {
                    auto fx = f.apply(s, LinComb<typename H::Key>::single(kk.first));
                    auto gy = g.apply(t, LinComb<typename H::Key>::single(kk.second));
                    acc += hopf_detail::mu_lin(h, s, t, fx, gy).scaled(c);
                }
            }
            otable[key] = std::move(acc);
        }
    }
    return out;
}

// First Eulerian idempotent log(id) applied to an element of the component on I:
// sum over k >= 1 of (-1)^{k+1}/k times mu^{(k-1)} o Delta^{(k-1)} restricted to
// decompositions into k nonempty parts (the series truncates at k = |I|).
template <class H>
LinComb<typename H::Key> eulerian_apply(const H& h, const Ground& I,
                                        const LinComb<typename H::Key>& x) {
    using Key = typename H::Key;
    const int n = static_cast<int>(I.size());
    LinComb<Key> result;
    if (n == 0) return result;  // log(id) vanishes on the unit component

    // iterated coproduct along a fixed list of nonempty parts
    std::function<LinComb<std::vector<Key>>(const std::vector<Ground>&, std::size_t,
                                            const Key&)>
        legs = [&](const std::vector<Ground>& parts, std::size_t i, const Key& k) {
            LinComb<std::vector<Key>> out;
            if (i + 1 == parts.size()) {
                out.add({k}, Rational(1));
                return out;
            }
            Ground rest;
            for (std::size_t j = i + 1; j < parts.size(); ++j) rest = ground_union(rest, parts[j]);
            for (const auto& [kk, c] : h.coproduct(parts[i], rest, k).terms()) {
                auto sub = legs(parts, i + 1, kk.second);
                for (const auto& [seq, c2] : sub.terms()) {
                    std::vector<Key> full{kk.first};
                    full.insert(full.end(), seq.begin(), seq.end());
                    out.add(full, c * c2);
                }
            }
            return out;
        };

    for (int k = 1; k <= n; ++k) {
        const Rational coeff(k % 2 == 1 ? 1 : -1, k);
        for (const auto& parts : enumerate_decompositions(I, k, /*nonempty=*/true)) {
            for (const auto& [key, cx] : x.terms()) {
                for (const auto& [seq, c] : legs(parts, 0, key).terms()) {
                    LinComb<Key> acc = LinComb<Key>::single(seq[0]);
                    Ground g = parts[0];
                    for (int i = 1; i < k; ++i) {
                        acc = hopf_detail::mu_lin(h, g, parts[i], acc,
                                                  LinComb<Key>::single(seq[i]));
                        g = ground_union(g, parts[i]);
                    }
                    result += acc.scaled(cx * c * coeff);
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Freeness certificate: the multiplication map from the free monoid on the given
// generators to h must be a linear isomorphism on every ground of size <= n_max.
// Generator images are grouped into order blocks when the instance provides
// block_of; each block must come out square and of full rank.
template <class H>
struct GeneratorImage {
    std::string name;
    LinComb<typename H::Key> image;
};

template <class H, class GenFn>
CheckReport freeness_certificate(const H& h, GenFn&& generators_on, int n_max,
                                 const std::string& label) {
    using Key = typename H::Key;
    CheckReport rep;
    rep.subject = label;

    for (int n = 1; n <= n_max; ++n) {
        const Ground I = standard_ground(n);
        const auto target = h.basis(I);

        // all products of generators along ordered decompositions into nonempty parts
        std::vector<LinComb<Key>> columns;
        std::vector<std::string> col_names;
        for (const auto& parts : enumerate_set_compositions(I)) {
            std::vector<std::vector<GeneratorImage<H>>> gens;
            bool empty_choice = false;
            for (const auto& part : parts) {
                gens.push_back(generators_on(part));
                if (gens.back().empty()) { empty_choice = true; break; }
            }
            if (empty_choice) continue;
            std::vector<std::size_t> pick(parts.size(), 0);
            while (true) {
                LinComb<Key> acc = gens[0][pick[0]].image;
                Ground g = parts[0];
                std::string nm = gens[0][pick[0]].name;
                for (std::size_t i = 1; i < parts.size(); ++i) {
                    acc = hopf_detail::mu_lin(h, g, parts[i], acc, gens[i][pick[i]].image);
                    g = ground_union(g, parts[i]);
                    nm += " * " + gens[i][pick[i]].name;
                }
                columns.push_back(std::move(acc));
                col_names.push_back(std::move(nm));
                std::size_t i = 0;
                while (i < parts.size() && pick[i] + 1 == gens[i].size()) pick[i++] = 0;
                if (i == parts.size()) break;
                ++pick[i];
            }
        }

        ++rep.checks;
        if (columns.size() != target.size()) {
            rep.fail("ground [" + std::to_string(n) + "]: map is not square (" +
                     std::to_string(columns.size()) + " products vs dimension " +
                     std::to_string(target.size()) + ")");
            continue;
        }

        // group by order block when available, otherwise one block
        auto block_key = [&](const Key& k) -> LinearOrder {
            if constexpr (requires(const H& hh, const Key& kk) { hh.block_of(kk); })
                return h.block_of(k);
            else
                return {};
        };
        std::map<LinearOrder, std::vector<std::size_t>> target_blocks;
        for (std::size_t i = 0; i < target.size(); ++i)
            target_blocks[block_key(target[i])].push_back(i);
        std::map<LinearOrder, std::vector<std::size_t>> col_blocks;
        bool blocked = true;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].is_zero()) {
                rep.fail("product '" + col_names[j] + "' vanishes");
                blocked = false;
                break;
            }
            LinearOrder blk = block_key(columns[j].begin()->first);
            for (const auto& [k, c] : columns[j].terms())
                if (block_key(k) != blk) { blocked = false; break; }
            if (!blocked) break;
            col_blocks[blk].push_back(j);
        }
        if (!rep.pass()) continue;

        auto run_block = [&](const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, const std::string& what) {
            ++rep.checks;
            if (rows.size() != cols.size()) {
                rep.fail(what + ": block is not square (" + std::to_string(cols.size()) +
                         " columns vs " + std::to_string(rows.size()) + " rows)");
                return;
            }
            std::map<Key, std::size_t> ridx;
            for (std::size_t i = 0; i < rows.size(); ++i) ridx[target[rows[i]]] = i;
            std::vector<std::vector<Rational>> m(rows.size(),
                                                 std::vector<Rational>(cols.size()));
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (const auto& [k, c] : columns[cols[j]].terms()) {
                    auto it = ridx.find(k);
                    if (it == ridx.end()) {
                        rep.fail(what + ": image leaves the block");
                        return;
                    }
                    m[it->second][j] = c;
                }
            auto rk = rank_rational(m);
            if (rk != rows.size())
                rep.fail(what + ": rank " + std::to_string(rk) + " < " +
                         std::to_string(rows.size()));
        };

        if (blocked) {
            if (col_blocks.size() != target_blocks.size())
                rep.fail("ground [" + std::to_string(n) + "]: block sets differ");
            for (const auto& [blk, cols] : col_blocks) {
                auto it = target_blocks.find(blk);
                if (it == target_blocks.end()) {
                    rep.fail("ground [" + std::to_string(n) + "]: unexpected block");
                    continue;
                }
                run_block(it->second, cols,
                          "ground [" + std::to_string(n) + "] block " + label_list_str(blk));
            }
        } else {
            std::vector<std::size_t> all_rows(target.size()), all_cols(columns.size());
            for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
            for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
            run_block(all_rows, all_cols, "ground [" + std::to_string(n) + "] (full matrix)");
        }
        rep.note("ground [" + std::to_string(n) + "]: dimension " +
                 std::to_string(target.size()) + ", full rank");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Coefficients of the type generating function: orbit counts of the symmetric
// group action on each basis, with the free-order shortcut when declared.
template <class H>
std::vector<Integer> type_series_counts(const H& h, int N) {
    std::vector<Integer> out(N + 1, Integer(0));
    for (int n = 0; n <= N; ++n) {
        if constexpr (requires(const H& hh) {
                          hh.free_order_factor();
                          hh.standard_orbit_count(0);
                      }) {
            if (h.free_order_factor()) {
                out[n] = h.standard_orbit_count(n);
                continue;
            }
        }
        const Ground I = standard_ground(n);
        auto keys = h.basis(I);
        std::map<typename H::Key, std::size_t> idx;
        for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
        std::vector<std::size_t> parent(keys.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int t = 0; t + 1 < n; ++t) {
            Bijection swap = identity_bijection(I);
            swap[t] = t + 1;
            swap[t + 1] = t;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                auto j = idx.at(h.relabel_key(keys[i], swap));
                auto ra = find(i), rb = find(j);
                if (ra != rb) parent[ra] = rb;
            }
        }
        Integer count(0);
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++count;
        out[n] = count;
    }
    return out;
}

template <class H>
RationalSeries type_series(const H& h, int N) {
    auto counts = type_series_counts(h, N);
    RationalSeries s(N);
    for (int i = 0; i <= N; ++i) s[i] = Rational(counts[i]);
    return s;
}

}  // namespace unihopf
