#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "unihopf/rational.hpp"

namespace unihopf {

// Finite linear combination of basis keys with exact rational coefficients.
// Zero coefficients are never stored.
template <class K>
class LinComb {
  public:
    using Key = K;

    LinComb() = default;
    static LinComb single(const K& k, Rational c = Rational(1)) {
        LinComb r;
        r.add(k, c);
        return r;
    }

    void add(const K& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb scaled(const Rational& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    Rational coeff(const K& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Rational(0) : it->second;
    }
    // rvalue access moves the map out, so iterating the terms of a temporary
    // (as in `for (... : f(x).terms())`) stays valid
    const std::map<K, Rational>& terms() const& { return t_; }
    std::map<K, Rational> terms() && { return std::move(t_); }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // linear extension of a key-level map F: K -> LinComb<K2>
    template <class F>
    auto mapped(F&& f) const {
        using K2 = typename std::decay_t<decltype(f(std::declval<const K&>()))>::Key;
        LinComb<K2> out;
        for (const auto& [k, c] : t_) {
            auto img = f(k);
            for (const auto& [k2, c2] : img.terms()) out.add(k2, c * c2);
        }
        return out;
    }

    template <class Printer>
    std::string str(Printer&& pk) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (!first) os << " + ";
            first = false;
            if (!(c == Rational(1))) os << c << "*";
            os << pk(k);
        }
        return os.str();
    }

  private:
    std::map<K, Rational> t_;
};

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
    LinComb<std::pair<A, B>> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add({ka, kb}, ca * cb);
    return out;
}

}  // namespace unihopf
