#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace unihopf {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Element of the prime field F_p, canonical residue 0 <= value < p.
struct FFElem {
    std::uint32_t value = 0;
    std::uint32_t p = 2;

    FFElem() = default;
    FFElem(std::uint32_t v, std::uint32_t modulus) : value(v % modulus), p(modulus) {
        if (!is_prime(modulus)) throw std::invalid_argument("FFElem: modulus must be prime");
    }

    bool is_zero() const { return value == 0; }

    friend FFElem operator+(const FFElem& a, const FFElem& b) {
        a.check(b);
        return FFElem((a.value + b.value) % a.p, a.p);
    }
    friend FFElem operator-(const FFElem& a, const FFElem& b) {
        a.check(b);
        return FFElem((a.value + a.p - b.value) % a.p, a.p);
    }
    friend FFElem operator*(const FFElem& a, const FFElem& b) {
        a.check(b);
        return FFElem((a.value * static_cast<std::uint64_t>(b.value)) % a.p, a.p);
    }
    FFElem operator-() const { return FFElem((p - value) % p, p); }

    FFElem inverse() const {
        if (value == 0) throw std::domain_error("FFElem: inverse of zero");
        return pow(p - 2);
    }
    FFElem pow(std::uint32_t e) const {
        std::uint64_t base = value, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return FFElem(static_cast<std::uint32_t>(acc), p);
    }

    friend bool operator==(const FFElem& a, const FFElem& b) {
        return a.value == b.value && a.p == b.p;
    }
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const FFElem& x) {
        return os << x.value << " (mod " << x.p << ")";
    }

  private:
    void check(const FFElem& o) const {
        if (p != o.p) throw std::invalid_argument("FFElem: modulus mismatch");
    }
};

// Residue arithmetic on raw digits, used by the matrix layer where the modulus is
// carried once per matrix instead of per entry.
inline std::uint32_t ff_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (a + b) % p;
}
inline std::uint32_t ff_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (a + p - b % p) % p;
}
inline std::uint32_t ff_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (a * static_cast<std::uint64_t>(b)) % p;
}
inline std::uint32_t ff_neg(std::uint32_t a, std::uint32_t p) { return (p - a % p) % p; }
inline std::uint32_t ff_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("ff_inv: inverse of zero");
    std::uint64_t base = a % p, acc = 1;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace unihopf
