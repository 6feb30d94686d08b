#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "superko/clifford.hpp"

namespace superko::oracle {

// The monoid of multiplicity vectors in {0..box}^c modulo v ~ v + i(w), read
// off by union-find. Classes of vectors with entries at most box/2 are sorted
// into torsion (some multiple m v inside the box joins 0) and free ones.
struct MonoidQuotient {
    int rank = 0;             // 1 if a small vector has no multiple joining 0
    std::size_t torsion = 0;  // number of distinct torsion classes
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t(0)); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

inline MonoidQuotient brute_force_quotient(int n, long box = 4) {
    const auto cols = i_map(n);
    auto c = static_cast<std::size_t>(class_count(n));

    auto side = static_cast<std::size_t>(box + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < c; ++i) total *= side;
    auto decode = [&](std::size_t idx) {
        std::vector<long> v(c);
        for (std::size_t i = 0; i < c; ++i, idx /= side) v[i] = static_cast<long>(idx % side);
        return v;
    };
    auto encode = [&](const std::vector<long>& v) -> std::optional<std::size_t> {
        std::size_t idx = 0, mul = 1;
        for (std::size_t i = 0; i < c; ++i, mul *= side) {
            if (v[i] < 0 || v[i] > box) return std::nullopt;
            idx += static_cast<std::size_t>(v[i]) * mul;
        }
        return idx;
    };

    UnionFind uf(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto v = decode(idx);
        for (const auto& col : cols) {
            auto w = v;
            for (std::size_t i = 0; i < c; ++i) w[i] += col[i];
            if (auto j = encode(w)) uf.join(idx, *j);
        }
    }

    MonoidQuotient q;
    std::size_t zero = uf.find(0);
    std::set<std::size_t> torsion_classes;
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto v = decode(idx);
        if (*std::max_element(v.begin(), v.end()) * 2 > box) continue;
        bool torsion = false;
        for (long m = 1; !torsion; ++m) {
            auto w = v;
            for (auto& x : w) x *= m;
            auto j = encode(w);
            if (!j) break;
            torsion = uf.find(*j) == zero;
        }
        if (torsion)
            torsion_classes.insert(uf.find(idx));
        else
            q.rank = 1;
    }
    q.torsion = torsion_classes.size();
    return q;
}

// Order of the torsion subgroup of a computed quotient group.
inline std::size_t torsion_order(const QuotientGroup& g) {
    std::size_t order = 1;
    for (const auto& t : g.torsion) order *= t.get_ui();
    return order;
}

}  // namespace superko::oracle
