#pragma once

// Independent reference computations used by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "mcg/words.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix exponent_matrix(const mcg::Presentation& p) {
    IntMatrix m;
    for (const auto& r : p.relators) {
        std::vector<std::int64_t> row(p.num_gens(), 0);
        for (int g = 0; g < p.num_gens(); ++g) row[g] = r.degree(g);
        m.push_back(row);
    }
    return m;
}

// Bareiss fraction-free determinant.
inline std::int64_t determinant(std::vector<std::vector<__int128>> a) {
    const int n = static_cast<int>(a.size());
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

inline void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    for (;;) {
        if (!f(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Invariant factors from determinantal divisors d_k = gcd of all k x k minors.
inline std::vector<std::int64_t> abelian_invariants(const IntMatrix& m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<std::int64_t> d{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::int64_t g = 0;
        for_each_subset(rows, k, [&](const std::vector<int>& rs) {
            for_each_subset(cols, k, [&](const std::vector<int>& cs) {
                std::vector<std::vector<__int128>> sub(k, std::vector<__int128>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
                g = std::gcd(g, std::abs(determinant(sub)));
                return g != 1;
            });
            return g != 1;
        });
        if (g == 0) break;
        d.push_back(g);
    }
    const int rank = static_cast<int>(d.size()) - 1;
    std::vector<std::int64_t> out;
    for (int k = 1; k <= rank; ++k)
        if (d[k] / d[k - 1] > 1) out.push_back(d[k] / d[k - 1]);
    std::sort(out.begin(), out.end());
    out.insert(out.end(), cols - rank, 0);
    return out;
}

// Order of the permutation group generated by gens, by closure.
inline std::int64_t perm_group_order(const std::vector<mcg::Perm>& gens) {
    if (gens.empty()) return 1;
    std::set<mcg::Perm> seen{mcg::perm_identity(static_cast<int>(gens[0].size()))};
    std::vector<mcg::Perm> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<mcg::Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                auto q = mcg::perm_compose(p, g);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace oracle

namespace oracle {

inline std::vector<std::int64_t> abelian_invariants(const mcg::Presentation& p) {
    return abelian_invariants(exponent_matrix(p), p.num_gens());
}

}  // namespace oracle
