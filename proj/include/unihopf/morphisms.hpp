#pragma once

// The structure maps between the shipped instances: the constant-function
// embedding of L, the inclusions scfU -> cfU -> fU, the combinatorial models
// phi: LxG -> fU and phi: LxPi -> scfU with their one-sided inverses, and the
// graph-family map LxPi -> LxG relating the two models.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/arc_diagram.hpp"
#include "unihopf/census.hpp"
#include "unihopf/hopf.hpp"
#include "unihopf/instances.hpp"

namespace unihopf {

// l -> constant function 1 on U(I,l): the sum of every characteristic function
inline SpeciesMorphism<InstanceL, InstanceFU> morphism_const_to_fU(const InstanceL& l,
                                                                   const InstanceFU& fu) {
    return {&l, &fu, "1_l: L->fU", [&fu](const LinearOrder& ord) {
                LinComb<UniMatrix> out;
                for (auto& m : enumerate_unimatrices(ord, fu.modulus())) out.add(m, Rational(1));
                return out;
            }};
}

inline SpeciesMorphism<InstanceL, InstanceCfU> morphism_const_to_cfU(const InstanceL& l,
                                                                     const InstanceCfU& cf) {
    return {&l, &cf, "1_l: L->cfU", [&cf](const LinearOrder& ord) {
                LinComb<InstanceCfU::Key> out;
                auto cen = cf.census().get(static_cast<int>(ord.size()), cf.modulus());
                for (auto id : cen->class_reps) out.add({ord, id}, Rational(1));
                return out;
            }};
}

inline SpeciesMorphism<InstanceL, InstanceScfU> morphism_const_to_scfU(const InstanceL& l,
                                                                       const InstanceScfU& scf) {
    return {&l, &scf, "1_l: L->scfU", [&scf](const LinearOrder& ord) {
                LinComb<ArcDiagram> out;
                for (auto& d : enumerate_diagrams(ord, scf.modulus())) out.add(d, Rational(1));
                return out;
            }};
}

// superclass characteristic function as a sum of class characteristic functions
inline SpeciesMorphism<InstanceScfU, InstanceCfU> morphism_incl_scf_cf(const InstanceScfU& scf,
                                                                       const InstanceCfU& cf) {
    return {&scf, &cf, "scfU->cfU", [&cf](const ArcDiagram& d) {
                auto cen = cf.census().get(static_cast<int>(d.order().size()), cf.modulus());
                auto sup = cen->superclass_of(diagram_to_matrix(d));
                std::set<std::uint32_t> classes;
                for (std::uint64_t i = 0; i < cen->count; ++i)
                    if (cen->superclass_id[i] == sup) classes.insert(cen->class_id[i]);
                LinComb<InstanceCfU::Key> out;
                for (auto c : classes) out.add({d.order(), c}, Rational(1));
                return out;
            }};
}

// class characteristic function as a sum over its members
inline SpeciesMorphism<InstanceCfU, InstanceFU> morphism_incl_cf_f(const InstanceCfU& cf,
                                                                   const InstanceFU& fu) {
    return {&cf, &fu, "cfU->fU", [&cf](const InstanceCfU::Key& k) {
                auto cen = cf.census().get(static_cast<int>(k.first.size()), cf.modulus());
                LinComb<UniMatrix> out;
                for (auto i : cen->class_members(k.second))
                    out.add(cen->element(i).with_order(k.first), Rational(1));
                return out;
            }};
}

inline SpeciesMorphism<InstanceScfU, InstanceFU> morphism_incl_scf_f(const InstanceScfU& scf,
                                                                     const InstanceFU& fu,
                                                                     const CensusProvider& census) {
    return {&scf, &fu, "scfU->fU", [&fu, &census](const ArcDiagram& d) {
                auto cen = census.get(static_cast<int>(d.order().size()), fu.modulus());
                auto sup = cen->superclass_of(diagram_to_matrix(d));
                LinComb<UniMatrix> out;
                for (auto i : cen->superclass_members(sup))
                    out.add(cen->element(i).with_order(d.order()), Rational(1));
                return out;
            }};
}

// phi: l (x) m_g -> sum of kappa_U over matrices with graph g (every nonzero
// labeling of the edge positions)
inline SpeciesMorphism<InstanceLxG, InstanceFU> morphism_phi_graphs(const InstanceLxG& lg,
                                                                    const InstanceFU& fu) {
    return {&lg, &fu, "phi: LxG->fU", [&fu](const InstanceLxG::Key& k) {
                const auto& [ord, g] = k;
                const std::uint32_t p = fu.modulus();
                LinComb<UniMatrix> out;
                auto edges = g.edges();
                std::vector<std::uint32_t> assign(edges.size(), 1);
                while (true) {
                    UniMatrix m(ord, p);
                    auto pos = order_positions(ord);
                    for (std::size_t i = 0; i < edges.size(); ++i) {
                        int a = pos.at(edges[i].first), b = pos.at(edges[i].second);
                        if (a > b) std::swap(a, b);
                        m.set_at(a, b, assign[i]);
                    }
                    out.add(std::move(m), Rational(1));
                    std::size_t i = 0;
                    while (i < assign.size() && assign[i] == p - 1) assign[i++] = 1;
                    if (i == assign.size()) break;
                    ++assign[i];
                }
                return out;
            }};
}

// psi: kappa_U -> l (x) m_{g(U)}
inline SpeciesMorphism<InstanceFU, InstanceLxG> morphism_psi_graphs(const InstanceFU& fu,
                                                                    const InstanceLxG& lg) {
    return {&fu, &lg, "psi: fU->LxG", [](const UniMatrix& u) {
                return LinComb<InstanceLxG::Key>::single({u.order(), u.graph()});
            }};
}

// phi: l (x) m_X -> sum over all arc labelings
inline SpeciesMorphism<InstanceLxPi, InstanceScfU> morphism_phi_partitions(
    const InstanceLxPi& lp, const InstanceScfU& scf) {
    return {&lp, &scf, "phi: LxPi->scfU", [&scf](const InstanceLxPi::Key& k) {
                LinComb<ArcDiagram> out;
                for (auto& d : diagrams_over(k.second, k.first, scf.modulus()))
                    out.add(d, Rational(1));
                return out;
            }};
}

inline SpeciesMorphism<InstanceScfU, InstanceLxPi> morphism_psi_partitions(
    const InstanceScfU& scf, const InstanceLxPi& lp) {
    return {&scf, &lp, "psi: scfU->LxPi", [](const ArcDiagram& d) {
                return LinComb<InstanceLxPi::Key>::single({d.order(), d.partition()});
            }};
}

// l (x) m_X -> l (x) sum of the graphs compatible with the arc set of X
inline SpeciesMorphism<InstanceLxPi, InstanceLxG> morphism_rel_model(const InstanceLxPi& lp,
                                                                     const InstanceLxG& lg) {
    return {&lp, &lg, "LxPi->LxG", [](const InstanceLxPi::Key& k) {
                LinComb<InstanceLxG::Key> out;
                for (auto& g : graphs_over(k.second, k.first)) out.add({k.first, g}, Rational(1));
                return out;
            }};
}

}  // namespace unihopf
