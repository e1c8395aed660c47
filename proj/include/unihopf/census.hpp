#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "unihopf/ordered.hpp"
#include "unihopf/rational.hpp"
#include "unihopf/uni_matrix.hpp"

namespace unihopf {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete classification of U(n, F_p) on the standard order: every element is
// enumerated (entries as base-p digits, row-major, first position least significant)
// and assigned its conjugacy class and superclass. Ids are the minimal element index
// of the class, so they are independent of traversal order.
class GroupCensus {
  public:
    int n = 0;
    std::uint32_t p = 2;
    std::uint64_t count = 0;
    std::vector<std::uint32_t> class_id;       // element index -> class id
    std::vector<std::uint32_t> superclass_id;  // element index -> superclass id
    std::vector<std::uint32_t> class_reps;     // sorted class ids (= representative indices)
    std::vector<std::uint32_t> superclass_reps;   // sorted superclass ids
    std::vector<std::uint32_t> superclass_canon;  // canonical sparse member per superclass

    std::size_t class_count() const { return class_reps.size(); }
    std::size_t superclass_count() const { return superclass_reps.size(); }

    UniMatrix element(std::uint64_t index) const {
        return UniMatrix::decode(index, standard_order(n), p);
    }
    std::uint32_t class_of_standard(const UniMatrix& m) const { return class_id.at(m.encode()); }
    std::uint32_t superclass_of_standard(const UniMatrix& m) const {
        return superclass_id.at(m.encode());
    }
    // class/superclass of a matrix on an arbitrary order, via transport to the
    // standard ground by order position
    std::uint32_t class_of(const UniMatrix& m) const {
        return class_id.at(m.to_standard_order().encode());
    }
    std::uint32_t superclass_of(const UniMatrix& m) const {
        return superclass_id.at(m.to_standard_order().encode());
    }

    std::vector<std::uint64_t> class_members(std::uint32_t id) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 0; i < count; ++i)
            if (class_id[i] == id) out.push_back(i);
        return out;
    }
    std::vector<std::uint64_t> superclass_members(std::uint32_t id) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 0; i < count; ++i)
            if (superclass_id[i] == id) out.push_back(i);
        return out;
    }
};

namespace census_detail {

// flat strictly-upper representation used only during the breadth-first sweeps
struct Flat {
    int n;
    std::uint32_t p;
    std::vector<std::uint8_t> pos_r, pos_c;  // position t -> (row, col)
    std::vector<std::vector<int>> idx;       // (r,c) -> position

    explicit Flat(int n_, std::uint32_t p_) : n(n_), p(p_), idx(n_, std::vector<int>(n_, -1)) {
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) {
                idx[r][c] = static_cast<int>(pos_r.size());
                pos_r.push_back(static_cast<std::uint8_t>(r));
                pos_c.push_back(static_cast<std::uint8_t>(c));
            }
    }
    std::size_t m() const { return pos_r.size(); }

    std::uint64_t encode(const std::vector<std::uint8_t>& v) const {
        std::uint64_t x = 0;
        for (std::size_t t = v.size(); t-- > 0;) x = x * p + v[t];
        return x;
    }
    std::vector<std::uint8_t> decode(std::uint64_t x) const {
        std::vector<std::uint8_t> v(m());
        for (std::size_t t = 0; t < v.size(); ++t) {
            v[t] = static_cast<std::uint8_t>(x % p);
            x /= p;
        }
        return v;
    }
    // unitriangular product (unit diagonal implicit)
    std::vector<std::uint8_t> mul(const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b) const {
        std::vector<std::uint8_t> out(m());
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                std::uint64_t s = a[idx[i][k]] + b[idx[i][k]];
                for (int j = i + 1; j < k; ++j) s += a[idx[i][j]] * b[idx[j][k]];
                out[idx[i][k]] = static_cast<std::uint8_t>(s % p);
            }
        return out;
    }
};

}  // namespace census_detail

inline std::uint64_t group_size(int n, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < UniMatrix::tri(n); ++t) {
        if (count > (1ull << 62) / p) throw BudgetError("group size overflows 64 bits");
        count *= p;
    }
    return count;
}

// Default element budget: admits (n<=6, p=2), (n<=5, p=3), (n<=4, p in {5,7}).
constexpr std::uint64_t kDefaultCensusBudget = 117649;

inline GroupCensus build_census(int n, std::uint32_t p,
                                std::uint64_t budget_elements = kDefaultCensusBudget) {
    if (n < 0) throw std::invalid_argument("build_census: n must be nonnegative");
    if (!is_prime(p)) throw std::invalid_argument("build_census: p must be prime");
    {
        Integer required = int_pow(Integer(p), static_cast<unsigned long>(UniMatrix::tri(n)));
        if (required > Integer(static_cast<unsigned long>(budget_elements)))
            throw BudgetError("census budget exceeded: n=" + std::to_string(n) +
                              " p=" + std::to_string(p) + " needs " + required.get_str() +
                              " elements, budget is " + std::to_string(budget_elements));
    }
    if (n > 8) throw std::invalid_argument("build_census: n out of range [0,8]");
    const std::uint64_t count = group_size(n, p);

    census_detail::Flat F(n, p);
    GroupCensus out;
    out.n = n;
    out.p = p;
    out.count = count;
    out.class_id.assign(count, 0);
    out.superclass_id.assign(count, 0);

    // elementary generators as flat vectors
    std::vector<std::vector<std::uint8_t>> gens;
    for (std::size_t t = 0; t < F.m(); ++t)
        for (std::uint32_t c = 1; c < p; ++c) {
            std::vector<std::uint8_t> g(F.m(), 0);
            g[t] = static_cast<std::uint8_t>(c);
            gens.push_back(std::move(g));
        }
    std::vector<std::vector<std::uint8_t>> gens_inv;
    for (const auto& g : gens) {
        std::vector<std::uint8_t> gi(F.m(), 0);
        for (std::size_t t = 0; t < F.m(); ++t)
            if (g[t]) gi[t] = static_cast<std::uint8_t>(p - g[t]);
        gens_inv.push_back(std::move(gi));  // (Id + cE)^{-1} = Id - cE
    }

    // conjugacy: orbit closure under x -> g x g^{-1} over elementary g
    {
        std::vector<bool> seen(count, false);
        std::vector<std::uint64_t> stack;
        for (std::uint64_t seed = 0; seed < count; ++seed) {
            if (seen[seed]) continue;
            seen[seed] = true;
            stack.assign(1, seed);
            std::vector<std::uint64_t> orbit{seed};
            while (!stack.empty()) {
                auto x = F.decode(stack.back());
                stack.pop_back();
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    auto y = F.mul(F.mul(gens[gi], x), gens_inv[gi]);
                    std::uint64_t yi = F.encode(y);
                    if (!seen[yi]) {
                        seen[yi] = true;
                        stack.push_back(yi);
                        orbit.push_back(yi);
                    }
                }
            }
            for (auto i : orbit) out.class_id[i] = static_cast<std::uint32_t>(seed);
            out.class_reps.push_back(static_cast<std::uint32_t>(seed));
        }
    }

    // superclasses: orbit closure under x-Id -> g(x-Id) and (x-Id)g. On the strictly
    // upper part these are single row/column updates.
    {
        std::vector<bool> seen(count, false);
        std::vector<std::uint64_t> stack;
        for (std::uint64_t seed = 0; seed < count; ++seed) {
            if (seen[seed]) continue;
            seen[seed] = true;
            stack.assign(1, seed);
            std::vector<std::uint64_t> orbit{seed};
            while (!stack.empty()) {
                auto x = F.decode(stack.back());
                stack.pop_back();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        for (std::uint32_t c = 1; c < p; ++c) {
                            // left: row i += c * row j
                            auto y = x;
                            for (int cc = j + 1; cc < n; ++cc)
                                y[F.idx[i][cc]] = static_cast<std::uint8_t>(
                                    (y[F.idx[i][cc]] + c * x[F.idx[j][cc]]) % p);
                            std::uint64_t yi = F.encode(y);
                            if (!seen[yi]) {
                                seen[yi] = true;
                                stack.push_back(yi);
                                orbit.push_back(yi);
                            }
                            // right: col j += c * col i
                            y = x;
                            for (int rr = 0; rr < i; ++rr)
                                y[F.idx[rr][j]] = static_cast<std::uint8_t>(
                                    (y[F.idx[rr][j]] + c * x[F.idx[rr][i]]) % p);
                            yi = F.encode(y);
                            if (!seen[yi]) {
                                seen[yi] = true;
                                stack.push_back(yi);
                                orbit.push_back(yi);
                            }
                        }
            }
            for (auto i : orbit) out.superclass_id[i] = static_cast<std::uint32_t>(seed);
            out.superclass_reps.push_back(static_cast<std::uint32_t>(seed));
        }
    }

    out.superclass_canon.reserve(out.superclass_reps.size());
    for (auto id : out.superclass_reps) {
        auto canon = canonical_superclass_rep(out.element(id));
        out.superclass_canon.push_back(static_cast<std::uint32_t>(canon.encode()));
    }
    return out;
}

// ---- cache file: magic, n, p, count, the two id arrays, representative tables ----

namespace census_detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>(v >> (8 * i) & 0xff);
    os.write(b, 4);
}
inline void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i) & 0xff);
    os.write(b, 8);
}
inline std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = v << 8 | b[i];
    return v;
}
inline std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
    return v;
}

}  // namespace census_detail

inline constexpr const char* kCensusMagic = "UQCENSUS1";

inline void save_census(const GroupCensus& c, const std::filesystem::path& file) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("save_census: cannot open " + file.string());
    os.write(kCensusMagic, 9);
    census_detail::put_u32(os, static_cast<std::uint32_t>(c.n));
    census_detail::put_u32(os, c.p);
    census_detail::put_u64(os, c.count);
    census_detail::put_u64(os, c.class_reps.size());
    census_detail::put_u64(os, c.superclass_reps.size());
    for (auto v : c.class_id) census_detail::put_u32(os, v);
    for (auto v : c.superclass_id) census_detail::put_u32(os, v);
    for (auto v : c.class_reps) census_detail::put_u32(os, v);
    for (auto v : c.superclass_reps) census_detail::put_u32(os, v);
    for (auto v : c.superclass_canon) census_detail::put_u32(os, v);
    if (!os) throw std::runtime_error("save_census: write failed for " + file.string());
}

inline GroupCensus load_census(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw std::runtime_error("load_census: cannot open " + file.string());
    char magic[9];
    is.read(magic, 9);
    if (!is || std::string(magic, 9) != kCensusMagic)
        throw std::runtime_error("load_census: bad magic in " + file.string());
    GroupCensus c;
    c.n = static_cast<int>(census_detail::get_u32(is));
    c.p = census_detail::get_u32(is);
    c.count = census_detail::get_u64(is);
    const std::uint64_t nclasses = census_detail::get_u64(is);
    const std::uint64_t nsupers = census_detail::get_u64(is);
    auto read_vec = [&](std::vector<std::uint32_t>& v, std::uint64_t len) {
        v.resize(len);
        for (auto& x : v) x = census_detail::get_u32(is);
    };
    read_vec(c.class_id, c.count);
    read_vec(c.superclass_id, c.count);
    read_vec(c.class_reps, nclasses);
    read_vec(c.superclass_reps, nsupers);
    read_vec(c.superclass_canon, nsupers);
    if (!is) throw std::runtime_error("load_census: truncated file " + file.string());
    if (c.count != group_size(c.n, c.p))
        throw std::runtime_error("load_census: inconsistent header in " + file.string());
    return c;
}

// Builds, caches and memoizes censuses keyed by (n, p). Safe to share across
// worker threads; the memo is lock-protected and the censuses themselves are
// immutable once built.
class CensusProvider {
  public:
    explicit CensusProvider(std::filesystem::path cache_dir = {},
                            std::uint64_t budget = kDefaultCensusBudget)
        : dir_(std::move(cache_dir)), budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

    std::shared_ptr<const GroupCensus> get(int n, std::uint32_t p) const {
        auto key = std::make_pair(n, p);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        std::shared_ptr<const GroupCensus> c;
        if (!dir_.empty()) {
            auto file = cache_file(n, p);
            if (std::filesystem::exists(file))
                c = std::make_shared<GroupCensus>(load_census(file));
        }
        if (!c) {
            c = std::make_shared<GroupCensus>(build_census(n, p, budget_));
            if (!dir_.empty()) {
                std::filesystem::create_directories(dir_);
                save_census(*c, cache_file(n, p));
            }
        }
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = memo_.try_emplace(key, c);
        return it->second;
    }

    std::filesystem::path cache_file(int n, std::uint32_t p) const {
        return dir_ / ("census_n" + std::to_string(n) + "_p" + std::to_string(p) + ".bin");
    }

  private:
    std::filesystem::path dir_;
    std::uint64_t budget_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const GroupCensus>> memo_;
};

}  // namespace unihopf
