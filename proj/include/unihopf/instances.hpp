#pragma once

// The concrete Hopf monoids: linear orders L, set partitions Pi (m-basis),
// simple graphs G (m-basis, with a p-basis change), functions on unitriangular
// groups fU (characteristic basis, with a lambda change), class functions cfU
// (census-backed), and superclass functions scfU (arc-diagram basis, with a
// lambda change). The *Lambda variants present the same monoids in their
// lambda coordinates, where products are single terms.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/arc_diagram.hpp"
#include "unihopf/census.hpp"
#include "unihopf/hopf.hpp"
#include "unihopf/lin_comb.hpp"
#include "unihopf/ordered.hpp"
#include "unihopf/set_partition.hpp"
#include "unihopf/simple_graph.hpp"
#include "unihopf/uni_matrix.hpp"

namespace unihopf {

// ---------------------------------------------------------------------------
class InstanceL {
  public:
    using Key = LinearOrder;
    static constexpr bool is_linear_order_species = true;

    std::string name() const { return "L"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const { return enumerate_orders(g); }
    Ground key_ground(const Key& k) const { return ground_of(k); }
    Key relabel_key(const Key& k, const Bijection& b) const { return relabel(k, b); }

    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        return LinComb<Key>::single(concat_orders(a, b));
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        return LinComb<std::pair<Key, Key>>::single(
            {restrict_order(k, s1), restrict_order(k, s2)});
    }
    std::string key_str(const Key& k) const {
        return k.empty() ? "()" : label_list_str(k);
    }
    LinearOrder block_of(const Key& k) const { return k; }
    bool free_order_factor() const { return true; }
    Integer standard_orbit_count(int) const { return 1; }
};

// ---------------------------------------------------------------------------
class InstancePi {
  public:
    using Key = SetPartition;

    std::string name() const { return "Pi"; }
    bool commutative() const { return true; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const { return enumerate_partitions(g); }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        LinComb<Key> out;
        for (auto& x : quasi_shuffles(a, b)) out.add(x, Rational(1));
        return out;
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        if (!k.is_union_of_blocks(s1)) return {};
        return LinComb<std::pair<Key, Key>>::single({k.restrict(s1), k.restrict(s2)});
    }
    std::string key_str(const Key& k) const { return k.str(); }
};

// ---------------------------------------------------------------------------
class InstanceG {
  public:
    using Key = SimpleGraph;

    std::string name() const { return "G"; }
    bool commutative() const { return true; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const { return enumerate_graphs(g); }
    Ground key_ground(const Key& k) const { return k.vertices(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        LinComb<Key> out;
        for (auto& x : graph_quasi_shuffles(a, b)) out.add(x, Rational(1));
        return out;
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        if (k.has_edge_across(s1, s2)) return {};
        return LinComb<std::pair<Key, Key>>::single({k.restrict(s1), k.restrict(s2)});
    }
    std::string key_str(const Key& k) const { return k.str(); }
};

// p_g = sum over supergraphs on the same vertex set
inline LinComb<SimpleGraph> graph_p_in_m(const SimpleGraph& g) {
    LinComb<SimpleGraph> out;
    std::vector<Edge> missing;
    for (const auto& e : all_pairs(g.vertices()))
        if (!g.has_edge(e.first, e.second)) missing.push_back(e);
    for (std::uint64_t mask = 0; mask < (1ull << missing.size()); ++mask) {
        auto es = g.edges();
        for (std::size_t i = 0; i < missing.size(); ++i)
            if (mask >> i & 1) es.push_back(missing[i]);
        out.add(SimpleGraph(g.vertices(), std::move(es)), Rational(1));
    }
    return out;
}

// inverse change of basis, m_g in terms of p: alternating signs on the extra edges
inline LinComb<SimpleGraph> graph_m_in_p(const SimpleGraph& g) {
    LinComb<SimpleGraph> out;
    std::vector<Edge> missing;
    for (const auto& e : all_pairs(g.vertices()))
        if (!g.has_edge(e.first, e.second)) missing.push_back(e);
    for (std::uint64_t mask = 0; mask < (1ull << missing.size()); ++mask) {
        auto es = g.edges();
        int extra = 0;
        for (std::size_t i = 0; i < missing.size(); ++i)
            if (mask >> i & 1) {
                es.push_back(missing[i]);
                ++extra;
            }
        out.add(SimpleGraph(g.vertices(), std::move(es)), Rational(extra % 2 ? -1 : 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Functions on the unitriangular groups, characteristic-function basis. A basis
// key is a matrix together with its order summand.
class InstanceFU {
  public:
    using Key = UniMatrix;

    explicit InstanceFU(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("InstanceFU: p must be prime");
    }
    std::uint32_t modulus() const { return p_; }

    std::string name() const { return "fU(p=" + std::to_string(p_) + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        for (const auto& ord : enumerate_orders(g)) {
            auto ms = enumerate_unimatrices(ord, p_);
            out.insert(out.end(), ms.begin(), ms.end());
        }
        return out;
    }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    // all matrices on the concatenated order whose principal minors are the operands:
    // the block between the parts is free
    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        LinearOrder ord = concat_orders(a.order(), b.order());
        UniMatrix base = UniMatrix::direct_sum(a, b, ord);
        const int n1 = a.n(), n2 = b.n();
        std::vector<std::pair<int, int>> cross;
        for (int r = 0; r < n1; ++r)
            for (int c = n1; c < n1 + n2; ++c) cross.push_back({r, c});
        LinComb<Key> out;
        std::vector<std::uint32_t> assign(cross.size(), 0);
        while (true) {
            UniMatrix w = base;
            for (std::size_t i = 0; i < cross.size(); ++i)
                w.set_at(cross[i].first, cross[i].second, assign[i]);
            out.add(w, Rational(1));
            std::size_t i = 0;
            while (i < assign.size() && assign[i] == p_ - 1) assign[i++] = 0;
            if (i == assign.size()) break;
            ++assign[i];
        }
        return out;
    }

    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        // zero unless the matrix is the direct sum of its two principal minors
        const auto& ord = k.order();
        for (int r = 0; r < k.n(); ++r)
            for (int c = r + 1; c < k.n(); ++c)
                if (k.at(r, c) && contains(s1, ord[r]) != contains(s1, ord[c])) return {};
        return LinComb<std::pair<Key, Key>>::single(
            {k.principal_minor(s1), k.principal_minor(s2)});
    }
    std::string key_str(const Key& k) const { return k.str(); }
    LinearOrder block_of(const Key& k) const { return k.order(); }
    bool free_order_factor() const { return true; }
    Integer standard_orbit_count(int n) const {
        return int_pow(Integer(p_), static_cast<unsigned long>(UniMatrix::tri(n)));
    }

  private:
    std::uint32_t p_;
};

// Same monoid in lambda coordinates: products concatenate into a single term.
class InstanceFULambda {
  public:
    using Key = UniMatrix;

    explicit InstanceFULambda(std::uint32_t p) : kappa_(p) {}
    std::uint32_t modulus() const { return kappa_.modulus(); }

    std::string name() const { return "fU-lambda(p=" + std::to_string(modulus()) + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const { return kappa_.basis(g); }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        LinearOrder ord = concat_orders(a.order(), b.order());
        return LinComb<Key>::single(UniMatrix::direct_sum(a, b, ord));
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        return kappa_.coproduct(s1, s2, k);
    }
    std::string key_str(const Key& k) const { return "l" + k.str(); }
    LinearOrder block_of(const Key& k) const { return k.order(); }

  private:
    InstanceFU kappa_;
};

// lambda_U = sum of kappa_V over matrices V agreeing with U on its support
inline LinComb<UniMatrix> fu_lambda_in_kappa(const UniMatrix& u) {
    const std::uint32_t p = u.modulus();
    std::vector<std::size_t> zeros;
    for (std::size_t t = 0; t < u.vals().size(); ++t)
        if (u.vals()[t] == 0) zeros.push_back(t);
    LinComb<UniMatrix> out;
    std::vector<std::uint32_t> assign(zeros.size(), 0);
    while (true) {
        auto vals = u.vals();
        for (std::size_t i = 0; i < zeros.size(); ++i)
            vals[zeros[i]] = static_cast<std::uint8_t>(assign[i]);
        out.add(UniMatrix(u.order(), p, std::move(vals)), Rational(1));
        std::size_t i = 0;
        while (i < assign.size() && assign[i] == p - 1) assign[i++] = 0;
        if (i == assign.size()) break;
        ++assign[i];
    }
    return out;
}

// inverse: kappa_U = sum over the same matrices with sign (-1)^{new support}
inline LinComb<UniMatrix> fu_kappa_in_lambda(const UniMatrix& u) {
    const std::uint32_t p = u.modulus();
    std::vector<std::size_t> zeros;
    for (std::size_t t = 0; t < u.vals().size(); ++t)
        if (u.vals()[t] == 0) zeros.push_back(t);
    LinComb<UniMatrix> out;
    std::vector<std::uint32_t> assign(zeros.size(), 0);
    while (true) {
        auto vals = u.vals();
        int extra = 0;
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            vals[zeros[i]] = static_cast<std::uint8_t>(assign[i]);
            extra += assign[i] != 0;
        }
        out.add(UniMatrix(u.order(), p, std::move(vals)), Rational(extra % 2 ? -1 : 1));
        std::size_t i = 0;
        while (i < assign.size() && assign[i] == p - 1) assign[i++] = 0;
        if (i == assign.size()) break;
        ++assign[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Class functions: a basis key is an order together with the census class id of
// the matrix transported to the standard ground by order position.
class InstanceCfU {
  public:
    using Key = std::pair<LinearOrder, std::uint32_t>;

    InstanceCfU(const CensusProvider& census, std::uint32_t p) : census_(&census), p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("InstanceCfU: p must be prime");
    }
    std::uint32_t modulus() const { return p_; }
    const CensusProvider& census() const { return *census_; }

    std::string name() const { return "cfU(p=" + std::to_string(p_) + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const {
        auto cen = census_->get(static_cast<int>(g.size()), p_);
        std::vector<Key> out;
        for (const auto& ord : enumerate_orders(g))
            for (auto id : cen->class_reps) out.push_back({ord, id});
        return out;
    }
    Ground key_ground(const Key& k) const { return ground_of(k.first); }
    Key relabel_key(const Key& k, const Bijection& b) const {
        return {relabel(k.first, b), k.second};
    }

    UniMatrix representative(const Key& k) const {
        auto cen = census_->get(static_cast<int>(k.first.size()), p_);
        return cen->element(k.second).with_order(k.first);
    }
    std::uint32_t class_of(const UniMatrix& m) const {
        auto cen = census_->get(m.n(), p_);
        return cen->class_of(m);
    }

    // classes of the concatenated-order group whose representative's principal
    // minors land in the two operand classes
    LinComb<Key> product(const Ground& s1, const Ground& s2, const Key& a, const Key& b) const {
        LinearOrder ord = concat_orders(a.first, b.first);
        auto cen = census_->get(static_cast<int>(ord.size()), p_);
        LinComb<Key> out;
        for (auto id : cen->class_reps) {
            UniMatrix rep = cen->element(id).with_order(ord);
            if (class_of(rep.principal_minor(s1)) == a.second &&
                class_of(rep.principal_minor(s2)) == b.second)
                out.add({ord, id}, Rational(1));
        }
        return out;
    }

    // pairs of classes whose direct-summed representatives land in this class
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        LinearOrder o1 = restrict_order(k.first, s1), o2 = restrict_order(k.first, s2);
        auto cen1 = census_->get(static_cast<int>(s1.size()), p_);
        auto cen2 = census_->get(static_cast<int>(s2.size()), p_);
        auto cen = census_->get(static_cast<int>(k.first.size()), p_);
        LinComb<std::pair<Key, Key>> out;
        for (auto c1 : cen1->class_reps)
            for (auto c2 : cen2->class_reps) {
                UniMatrix w = UniMatrix::direct_sum(cen1->element(c1).with_order(o1),
                                                    cen2->element(c2).with_order(o2), k.first);
                if (cen->class_of(w) == k.second) out.add({{o1, c1}, {o2, c2}}, Rational(1));
            }
        return out;
    }
    std::string key_str(const Key& k) const {
        return "C[" + label_list_str(k.first) + "; #" + std::to_string(k.second) + "]";
    }
    LinearOrder block_of(const Key& k) const { return k.first; }
    bool free_order_factor() const { return true; }
    Integer standard_orbit_count(int n) const {
        return Integer(static_cast<unsigned long>(census_->get(n, p_)->class_count()));
    }

  private:
    const CensusProvider* census_;
    std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Superclass functions on the arc-diagram basis. Purely combinatorial: no census.
class InstanceScfU {
  public:
    using Key = ArcDiagram;

    explicit InstanceScfU(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("InstanceScfU: p must be prime");
    }
    std::uint32_t modulus() const { return p_; }

    std::string name() const { return "scfU(p=" + std::to_string(p_) + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        for (const auto& ord : enumerate_orders(g)) {
            auto ds = enumerate_diagrams(ord, p_);
            out.insert(out.end(), ds.begin(), ds.end());
        }
        return out;
    }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    // labeled quasi-shuffles: shuffle the partitions, keep the inherited arc labels,
    // label the new arcs freely
    LinComb<Key> product(const Ground& s1, const Ground& s2, const Key& a, const Key& b) const {
        LinearOrder ord = concat_orders(a.order(), b.order());
        LinComb<Key> out;
        for (const auto& x : quasi_shuffles(a.partition(), b.partition())) {
            auto as = arcs_of(x, ord);
            std::map<Arc, std::uint32_t> fixed;
            std::vector<Arc> fresh;
            for (const auto& arc : as) {
                bool in1 = contains(s1, arc.first) && contains(s1, arc.second);
                bool in2 = contains(s2, arc.first) && contains(s2, arc.second);
                if (in1)
                    fixed[arc] = a.labels().at(arc);  // restriction to a segment keeps arcs
                else if (in2)
                    fixed[arc] = b.labels().at(arc);
                else
                    fresh.push_back(arc);
            }
            std::vector<std::uint32_t> assign(fresh.size(), 1);
            while (true) {
                auto lab = fixed;
                for (std::size_t i = 0; i < fresh.size(); ++i) lab[fresh[i]] = assign[i];
                out.add(ArcDiagram(ord, x, p_, std::move(lab)), Rational(1));
                std::size_t i = 0;
                while (i < fresh.size() && assign[i] == p_ - 1) assign[i++] = 1;
                if (i == fresh.size()) break;
                ++assign[i];
            }
        }
        return out;
    }

    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        if (!k.partition().is_union_of_blocks(s1)) return {};
        return LinComb<std::pair<Key, Key>>::single(
            {k.restrict_blocks(s1), k.restrict_blocks(s2)});
    }
    std::string key_str(const Key& k) const { return k.str(); }
    LinearOrder block_of(const Key& k) const { return k.order(); }
    bool free_order_factor() const { return true; }
    Integer standard_orbit_count(int n) const {
        Integer total(0);
        for (const auto& x : enumerate_partitions(standard_ground(n)))
            total += int_pow(Integer(p_ - 1),
                             static_cast<unsigned long>(arcs_of(x, standard_order(n)).size()));
        return total;
    }

  private:
    std::uint32_t p_;
};

// Lambda coordinates for scfU: the product is the single union diagram.
class InstanceScfULambda {
  public:
    using Key = ArcDiagram;

    explicit InstanceScfULambda(std::uint32_t p) : kappa_(p) {}
    std::uint32_t modulus() const { return kappa_.modulus(); }

    std::string name() const { return "scfU-lambda(p=" + std::to_string(modulus()) + ")"; }
    bool commutative() const { return false; }
    bool cocommutative() const { return true; }

    std::vector<Key> basis(const Ground& g) const { return kappa_.basis(g); }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }

    LinComb<Key> product(const Ground&, const Ground&, const Key& a, const Key& b) const {
        LinearOrder ord = concat_orders(a.order(), b.order());
        return LinComb<Key>::single(a.disjoint_union(b, ord));
    }
    LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                           const Key& k) const {
        return kappa_.coproduct(s1, s2, k);
    }
    std::string key_str(const Key& k) const { return "l" + k.str(); }
    LinearOrder block_of(const Key& k) const { return k.order(); }

  private:
    InstanceScfU kappa_;
};

using InstanceLxG = Hadamard<InstanceL, InstanceG>;
using InstanceLxPi = Hadamard<InstanceL, InstancePi>;

// ---------------------------------------------------------------------------
// Generator species for the free-monoid comparisons: arc diagrams with atomic
// partitions (over every order), and matrices with connected graphs.
class AtomicDiagramSpecies {
  public:
    using Key = ArcDiagram;

    explicit AtomicDiagramSpecies(std::uint32_t p) : p_(p) {}
    std::uint32_t modulus() const { return p_; }

    std::string name() const { return "d(p=" + std::to_string(p_) + ")"; }
    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        if (g.empty()) return out;
        for (const auto& ord : enumerate_orders(g))
            for (const auto& d : enumerate_diagrams(ord, p_))
                if (is_atomic(d.partition(), ord)) out.push_back(d);
        return out;
    }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }
    std::string key_str(const Key& k) const { return k.str(); }

  private:
    std::uint32_t p_;
};

class ConnectedMatrixSpecies {
  public:
    using Key = UniMatrix;

    explicit ConnectedMatrixSpecies(std::uint32_t p) : p_(p) {}
    std::uint32_t modulus() const { return p_; }

    std::string name() const { return "conn(p=" + std::to_string(p_) + ")"; }
    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        if (g.empty()) return out;
        for (const auto& ord : enumerate_orders(g))
            for (const auto& m : enumerate_unimatrices(ord, p_))
                if (m.graph().is_connected()) out.push_back(m);
        return out;
    }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }
    std::string key_str(const Key& k) const { return k.str(); }

  private:
    std::uint32_t p_;
};

// U splits after position m exactly when no nonzero entry crosses the cut; the
// matrices admitting no such split freely generate the lambda coordinates under
// concatenation. Connectivity of g(U) is sufficient but not necessary (a single
// long entry bridging an isolated point already blocks every cut), so these are
// the matrices whose partition into graph components is atomic for the order.
inline bool splits_after(const UniMatrix& u, int m) {
    for (int r = 0; r < m; ++r)
        for (int c = m; c < u.n(); ++c)
            if (u.at(r, c)) return false;
    return true;
}

inline bool is_order_indecomposable(const UniMatrix& u) {
    for (int m = 1; m < u.n(); ++m)
        if (splits_after(u, m)) return false;
    return true;
}

class IndecomposableMatrixSpecies {
  public:
    using Key = UniMatrix;

    explicit IndecomposableMatrixSpecies(std::uint32_t p) : p_(p) {}
    std::uint32_t modulus() const { return p_; }

    std::string name() const { return "indec(p=" + std::to_string(p_) + ")"; }
    std::vector<Key> basis(const Ground& g) const {
        std::vector<Key> out;
        if (g.empty()) return out;
        for (const auto& ord : enumerate_orders(g))
            for (const auto& m : enumerate_unimatrices(ord, p_))
                if (is_order_indecomposable(m)) out.push_back(m);
        return out;
    }
    Ground key_ground(const Key& k) const { return k.ground(); }
    Key relabel_key(const Key& k, const Bijection& b) const { return k.relabeled(b); }
    std::string key_str(const Key& k) const { return k.str(); }

  private:
    std::uint32_t p_;
};

// lambda_D = sum of kappa_E over diagrams above D in the arc order
inline LinComb<ArcDiagram> scf_lambda_in_kappa(const ArcDiagram& d) {
    LinComb<ArcDiagram> out;
    for (const auto& e : enumerate_diagrams(d.order(), d.modulus()))
        if (diagram_leq(d, e)) out.add(e, Rational(1));
    return out;
}

// inverse change of basis: alternating signs on the extra arcs
inline LinComb<ArcDiagram> scf_kappa_in_lambda(const ArcDiagram& d) {
    LinComb<ArcDiagram> out;
    const auto base = d.arcs().size();
    for (const auto& e : enumerate_diagrams(d.order(), d.modulus()))
        if (diagram_leq(d, e))
            out.add(e, Rational((e.arcs().size() - base) % 2 ? -1 : 1));
    return out;
}

}  // namespace unihopf
