#pragma once

// Independent test oracles. These deliberately avoid the production linear
// algebra: Smith reduction here is a separate implementation, and the
// cohomology sizes are computed from the raw d1/d2 integer matrices.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "descent3/group.hpp"

namespace oracles {

using descent3::Elem;
using descent3::FiniteGroup;
using descent3::GroupPtr;

inline long long gcdll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// plain elimination-based Smith diagonal (no transforms, no pivoting tricks)
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> A) {
    std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::size_t n = std::min(rows, cols);
    std::vector<long long> diag;
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = t, pj = t;
            long long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    long long a = llabs(A[i][j]);
                    if (a && (!best || a < best)) best = a, pi = i, pj = j;
                }
            if (!best) break;
            std::swap(A[t], A[pi]);
            for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][t], A[i][pj]);
            bool again = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (A[i][t] % A[t][t]) {
                    again = true;
                } else if (A[i][t]) {
                    long long q = A[i][t] / A[t][t];
                    for (std::size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (A[t][j] % A[t][t]) {
                    again = true;
                } else if (A[t][j]) {
                    long long q = A[t][j] / A[t][t];
                    for (std::size_t i = 0; i < rows; ++i) A[i][j] -= q * A[i][t];
                }
            if (again) {
                // mix a bad row/column into the pivot and retry
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (A[i][t] % A[t][t])
                        for (std::size_t j = t; j < cols; ++j) A[t][j] += A[i][j];
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A[t][j] % A[t][t])
                        for (std::size_t i = t; i < rows; ++i) A[i][t] += A[i][j];
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (A[i][j] % A[t][t]) {
                        for (std::size_t r = t; r < rows; ++r) A[r][t] += A[r][j];
                        divides = false;
                    }
            if (divides) break;
        }
        diag.push_back(t < rows && t < cols ? llabs(A[t][t]) : 0);
    }
    return diag;
}

// #solutions of the cochain complex sizes over Z/m from integer SNF:
// |ker (A mod m)| and |im (A mod m)| for an integer matrix A.
inline long long kernel_size_mod(const std::vector<std::vector<long long>>& A, int m, int cols) {
    auto d = smith_diagonal(A);
    long long rank_slots = static_cast<long long>(d.size());
    long long size = 1;
    long long free_cols = cols - rank_slots;
    for (long long i = 0; i < free_cols; ++i) size *= m;
    for (long long s : d) size *= (s == 0) ? m : gcdll(s, m);
    return size;
}

inline long long image_size_mod(const std::vector<std::vector<long long>>& A, int m) {
    auto d = smith_diagonal(A);
    long long size = 1;
    for (long long s : d)
        if (s) size *= m / gcdll(s, m);
    return size;
}

// |H^2(G, Z/m)| from the normalized inhomogeneous complex, raw matrices.
inline long long h2_order(GroupPtr G, int m) {
    int n = G->order();
    if (n == 1) return 1;
    int W1 = n - 1, W2 = (n - 1) * (n - 1);
    auto c2 = [n](Elem a, Elem b) { return (a - 1) * (n - 1) + (b - 1); };
    std::vector<std::vector<long long>> d1(W2, std::vector<long long>(W1, 0));
    for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y) {
            auto& row = d1[c2(x, y)];
            row[x - 1] += 1;
            row[y - 1] += 1;
            Elem xy = G->mul(x, y);
            if (xy != 0) row[xy - 1] -= 1;
        }
    std::vector<std::vector<long long>> d2;
    d2.reserve(static_cast<std::size_t>(W1) * W2);
    for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y)
            for (Elem z = 1; z < n; ++z) {
                std::vector<long long> row(W2, 0);
                row[c2(y, z)] += 1;
                Elem xy = G->mul(x, y);
                if (xy != 0) row[c2(xy, z)] -= 1;
                Elem yz = G->mul(y, z);
                if (yz != 0) row[c2(x, yz)] += 1;
                row[c2(x, y)] -= 1;
                d2.push_back(std::move(row));
            }
    return kernel_size_mod(d2, m, W2) / image_size_mod(d1, m);
}

// All subgroups by the closure-of-unions-of-cyclics iteration.
inline std::vector<std::vector<Elem>> all_subgroups(GroupPtr G) {
    std::set<std::vector<Elem>> found;
    std::vector<std::vector<Elem>> cyclics;
    for (Elem x = 0; x < G->order(); ++x) {
        std::vector<Elem> c;
        Elem y = 0;
        do {
            c.push_back(y);
            y = G->mul(y, x);
        } while (y != 0);
        std::sort(c.begin(), c.end());
        if (found.insert(c).second) cyclics.push_back(c);
    }
    std::vector<std::vector<Elem>> work(found.begin(), found.end());
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        for (const auto& cyc : cyclics) {
            std::vector<Elem> gens = cur;
            gens.insert(gens.end(), cyc.begin(), cyc.end());
            auto sub = descent3::subgroup_closure(G, gens);
            if (found.insert(sub.members).second) work.push_back(sub.members);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace oracles
