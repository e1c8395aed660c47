#pragma once

// Counting layer: Bell and atomic-partition series, class/superclass counts from
// censuses, the inverted c-sequence, the two counting inequalities, polynomial
// fits of c_n across primes, and quotient-series nonnegativity reports.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unihopf/arc_diagram.hpp"
#include "unihopf/census.hpp"
#include "unihopf/int_poly.hpp"
#include "unihopf/rational.hpp"
#include "unihopf/set_partition.hpp"
#include "unihopf/trunc_series.hpp"

namespace unihopf {

// Bell numbers B_0..B_N via the Bell triangle.
inline std::vector<Integer> bell_numbers(int N) {
    std::vector<Integer> out{Integer(1)};
    std::vector<Integer> row{Integer(1)};
    for (int n = 1; n <= N; ++n) {
        std::vector<Integer> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        out.push_back(row.front());
    }
    return out;
}

struct BellAtomic {
    std::vector<Integer> bell;    // B_0..B_N
    std::vector<Integer> atomic;  // A_0 (= 0), A_1..A_N
};

// Bell by direct enumeration for n <= 8 (recurrence beyond), atomic by direct
// enumeration for n <= 8 and independently by inverting the Bell series; the
// routes must agree on their overlap.
inline BellAtomic bell_and_atomic(int N) {
    if (N > 12) throw std::invalid_argument("bell_and_atomic: N above desk scale (12)");
    BellAtomic out;
    out.bell = bell_numbers(N);
    const int enum_limit = std::min(N, 8);
    for (int n = 0; n <= enum_limit; ++n) {
        auto parts = enumerate_partitions(standard_ground(n));
        if (Integer(static_cast<unsigned long>(parts.size())) != out.bell[n])
            throw std::logic_error("bell_and_atomic: enumeration disagrees with recurrence at n=" +
                                   std::to_string(n));
    }

    // atomic series from inversion: 1 - 1/B
    RationalSeries b(N);
    for (int i = 0; i <= N; ++i) b[i] = Rational(out.bell[i]);
    auto binv = series_invert(b);
    out.atomic.assign(N + 1, Integer(0));
    for (int n = 1; n <= N; ++n) {
        Rational a = -binv[n];
        if (!a.is_integer()) throw std::logic_error("bell_and_atomic: non-integer atomic count");
        out.atomic[n] = a.num();
    }
    for (int n = 1; n <= enum_limit; ++n) {
        Integer direct(0);
        auto ord = standard_order(n);
        for (const auto& x : enumerate_partitions(standard_ground(n)))
            if (is_atomic(x, ord)) ++direct;
        if (direct != out.atomic[n])
            throw std::logic_error("bell_and_atomic: atomic enumeration vs inversion mismatch at n=" +
                                   std::to_string(n));
    }
    return out;
}

struct CountTable {
    std::uint32_t p = 2;
    int n_max = 0;
    std::vector<Integer> k;             // k_0..k_{n_max}: conjugacy class counts
    std::vector<Integer> superclasses;  // superclass counts from the census
    std::vector<Integer> diagram_sums;  // sum over partitions of (q-1)^{arcs}
};

// Conjugacy-class and superclass counts from censuses; the superclass counts are
// recomputed from arc diagrams and both routes must agree.
inline CountTable class_counts(const CensusProvider& census, std::uint32_t p, int n_max) {
    CountTable t;
    t.p = p;
    t.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        auto cen = census.get(n, p);
        t.k.push_back(Integer(static_cast<unsigned long>(cen->class_count())));
        t.superclasses.push_back(Integer(static_cast<unsigned long>(cen->superclass_count())));
        Integer dsum(0);
        for (const auto& x : enumerate_partitions(standard_ground(n)))
            dsum += int_pow(Integer(p - 1),
                            static_cast<unsigned long>(arcs_of(x, standard_order(n)).size()));
        t.diagram_sums.push_back(dsum);
        if (t.superclasses.back() != t.diagram_sums.back())
            throw std::logic_error("class_counts: census superclasses disagree with diagram count at n=" +
                                   std::to_string(n));
    }
    return t;
}

// c_1..c_{n_max} defined by K(x) = 1/(1 - C(x)); requires k_0 = 1. Non-integer
// output signals corrupted input.
inline std::vector<Integer> c_sequence(const std::vector<Integer>& k) {
    if (k.empty() || k[0] != 1) throw std::invalid_argument("c_sequence: k_0 must be 1");
    const int N = static_cast<int>(k.size()) - 1;
    RationalSeries ks(N);
    for (int i = 0; i <= N; ++i) ks[i] = Rational(k[i]);
    auto inv = series_invert(ks);  // 1/K = 1 - C
    std::vector<Integer> c(N + 1, Integer(0));
    for (int n = 1; n <= N; ++n) {
        Rational v = -inv[n];
        if (!v.is_integer()) throw std::domain_error("c_sequence: non-integer coefficient at n=" +
                                                     std::to_string(n));
        c[n] = v.num();
    }
    return c;
}

struct InequalityRow {
    int n;
    Integer lhs, rhs, margin;
};
struct InequalityReport {
    std::vector<InequalityRow> rows;
    bool all_hold() const {
        for (const auto& r : rows)
            if (r.margin < 0) return false;
        return true;
    }
};

// k_n >= sum_{i=0}^{n-1} A_{n-i} k_i
inline InequalityReport check_counting_inequality(const std::vector<Integer>& k,
                                                  const std::vector<Integer>& atomic,
                                                  int n_max) {
    InequalityReport rep;
    for (int n = 1; n <= n_max; ++n) {
        Integer rhs(0);
        for (int i = 0; i < n; ++i) rhs += atomic.at(n - i) * k.at(i);
        rep.rows.push_back({n, k.at(n), rhs, k.at(n) - rhs});
    }
    return rep;
}

// q^C(n,2) >= sum_{i=1}^{n} q^C(n-i,2) c_i(q)
inline InequalityReport check_counting2(std::uint32_t p, const std::vector<Integer>& c,
                                        int n_max) {
    InequalityReport rep;
    for (int n = 1; n <= n_max; ++n) {
        Integer lhs = int_pow(Integer(p), static_cast<unsigned long>(binomial2(n).get_ui()));
        Integer rhs(0);
        for (int i = 1; i <= n; ++i)
            rhs += int_pow(Integer(p), static_cast<unsigned long>(binomial2(n - i).get_ui())) *
                   c.at(i);
        rep.rows.push_back({n, lhs, rhs, lhs - rhs});
    }
    return rep;
}

// Interpolates c_n(q) at t = q-1 across the given primes; the fit must have
// integer coefficients and is reported together with their nonnegativity.
struct ConjectureFit {
    IntPoly poly;             // c_n as a polynomial in t = q-1
    bool nonnegative;
    std::vector<std::pair<std::uint32_t, Integer>> points;  // (q, c_n(q))
};

inline ConjectureFit fit_conjecture(const CensusProvider& census, int n,
                                    const std::vector<std::uint32_t>& primes) {
    if (primes.size() < 2) throw std::invalid_argument("fit_conjecture: need at least two primes");
    ConjectureFit fit;
    std::vector<std::pair<Rational, Rational>> pts;
    for (auto q : primes) {
        std::vector<Integer> k;
        for (int m = 0; m <= n; ++m)
            k.push_back(Integer(static_cast<unsigned long>(census.get(m, q)->class_count())));
        auto c = c_sequence(k);
        fit.points.push_back({q, c.at(n)});
        pts.push_back({Rational(Integer(q) - 1), Rational(c.at(n))});
    }
    fit.poly = interpolate_poly(pts, pts.size() - 1, /*require_integer=*/true);
    fit.nonnegative = fit.poly.nonnegative_coeffs();
    return fit;
}

struct LagrangeReport {
    std::vector<Rational> quotient;
    bool nonnegative_integers() const {
        for (const auto& c : quotient)
            if (!c.is_integer() || c < Rational(0)) return false;
        return true;
    }
};

// Quotient of two type series; reports whether all coefficients in range are
// nonnegative integers.
inline LagrangeReport lagrange_quotient_check(const RationalSeries& num,
                                              const RationalSeries& den) {
    auto q = series_divide(num, den);
    LagrangeReport rep;
    rep.quotient.assign(q.coeffs().begin(), q.coeffs().end());
    return rep;
}

}  // namespace unihopf
