#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/rational.hpp"

namespace unihopf {

// Polynomial with arbitrary-precision integer coefficients, coeffs[i] = coefficient of x^i.
// Normal form: no trailing zero coefficients (the zero polynomial has an empty vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
    static IntPoly monomial(const Integer& coeff, std::size_t deg) {
        std::vector<Integer> c(deg + 1, Integer(0));
        c[deg] = coeff;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }
    Integer eval_int(const Integer& x) const {
        Integer acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool nonnegative_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v >= 0; });
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const { return IntPoly() - *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // Descending-degree rendering, e.g. "2t^3+4t^2+t" or "0".
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long d = degree(); d >= 0; --d) {
            const Integer& v = c_[d];
            if (v == 0) continue;
            if (!out.empty() && v > 0) out += "+";
            if (d == 0) {
                out += v.get_str();
            } else {
                if (v == -1)
                    out += "-";
                else if (v != 1)
                    out += v.get_str();
                out += var;
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Unique polynomial of degree <= degree_bound through the given points, by Newton's
// divided differences. All points must be matched exactly (inconsistent overdetermined
// data is rejected). With require_integer, non-integer coefficients are an error.
inline IntPoly interpolate_poly(const std::vector<std::pair<Rational, Rational>>& points,
                                std::size_t degree_bound, bool require_integer = true) {
    if (points.size() < degree_bound + 1)
        throw std::invalid_argument("interpolate_poly: need at least degree_bound+1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate_poly: duplicate abscissae");

    const std::size_t m = degree_bound + 1;
    // divided-difference table on the first m points
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Newton form -> coefficient form, over the rationals
    std::vector<Rational> coeffs(m, Rational(0));
    std::vector<Rational> basis(m, Rational(0));  // product (x - x_0)...(x - x_{k-1})
    basis[0] = Rational(1);
    std::size_t basis_len = 1;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < basis_len; ++i) coeffs[i] += dd[k] * basis[i];
        if (k + 1 < m) {
            // basis *= (x - x_k)
            for (std::size_t i = basis_len; i-- > 0;) {
                Rational hi = basis[i];
                basis[i + 1] += hi;
                basis[i] = -points[k].first * hi;
            }
            ++basis_len;
        }
    }

    // consistency on the remaining points
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (std::size_t i = m; i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };
    for (std::size_t i = m; i < points.size(); ++i)
        if (eval(points[i].first) != points[i].second)
            throw std::invalid_argument("interpolate_poly: inconsistent overdetermined data");

    std::vector<Integer> ic(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (require_integer && !coeffs[i].is_integer())
            throw std::domain_error("interpolate_poly: non-integer coefficient " + coeffs[i].str());
        if (!coeffs[i].is_integer())
            throw std::domain_error("interpolate_poly: rational coefficients not representable");
        ic[i] = coeffs[i].num();
    }
    return IntPoly(std::move(ic));
}

}  // namespace unihopf
