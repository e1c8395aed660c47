#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "unihopf/int_poly.hpp"
#include "unihopf/rational.hpp"

namespace unihopf {

namespace detail {

inline bool coeff_is_unit(const Rational& c) { return !c.is_zero(); }
inline Rational coeff_unit_inverse(const Rational& c) { return Rational(1) / c; }

// in Z[t] only the constants +-1 are invertible
inline bool coeff_is_unit(const IntPoly& c) {
    return c.degree() == 0 && (c.coeff(0) == 1 || c.coeff(0) == -1);
}
inline IntPoly coeff_unit_inverse(const IntPoly& c) { return c; }

}  // namespace detail

// Power series truncated at a fixed order N: exactly N+1 stored coefficients.
// Binary operations demand equal truncation orders; mixing them silently is a bug
// this type refuses to allow.
template <class C>
class TruncSeries {
  public:
    explicit TruncSeries(std::size_t order) : c_(order + 1, C()) {}
    TruncSeries(std::size_t order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() != order + 1)
            throw std::invalid_argument("TruncSeries: coefficient count != order+1");
    }

    std::size_t order() const { return c_.size() - 1; }
    const C& operator[](std::size_t i) const { return c_.at(i); }
    C& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<C>& coeffs() const& { return c_; }
    std::vector<C> coeffs() && { return std::move(c_); }

    static TruncSeries one(std::size_t order) {
        TruncSeries s(order);
        s[0] = C(1);
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i)
            for (std::size_t j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  private:
    void check(const TruncSeries& o) const {
        if (order() != o.order())
            throw std::invalid_argument("TruncSeries: truncation order mismatch (" +
                                        std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
    }
    std::vector<C> c_;
};

// Multiplicative inverse up to truncation; the constant term must be a unit.
template <class C>
TruncSeries<C> series_invert(const TruncSeries<C>& s) {
    if (!detail::coeff_is_unit(s[0]))
        throw std::domain_error("series_invert: constant term is not a unit");
    TruncSeries<C> u(s.order());
    const C inv0 = detail::coeff_unit_inverse(s[0]);
    u[0] = inv0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        C acc{};
        for (std::size_t k = 1; k <= n; ++k) acc = acc + s[k] * u[n - k];
        u[n] = C() - inv0 * acc;
    }
    return u;
}

template <class C>
TruncSeries<C> series_divide(const TruncSeries<C>& num, const TruncSeries<C>& den) {
    return num * series_invert(den);
}

using RationalSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<IntPoly>;

}  // namespace unihopf
