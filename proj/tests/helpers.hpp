#ifndef CUBEFAM_TESTS_HELPERS_HPP
#define CUBEFAM_TESTS_HELPERS_HPP

// Shared fixtures and independent oracles. The oracles deliberately avoid
// the library's enumeration and reduction paths: the cube oracle walks all
// (A, B) pairs with raw binary searches over the member list, the component
// oracle is a plain union-find, and the divisor oracle recomputes invariant
// factors from gcds of minors.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "cubefam/cubes.hpp"
#include "cubefam/family.hpp"
#include "cubefam/snf.hpp"

namespace testing_support {

using cubefam::BigInt;
using cubefam::Cube;
using cubefam::Family;
using cubefam::GroundSet;
using cubefam::IntegerMatrix;
using cubefam::Mask;

inline Mask mask_of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int i : elements) m |= Mask{1} << (i - 1);
    return m;
}

inline Family make_family(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Mask> members;
    for (const auto& s : sets) members.push_back(mask_of(s));
    return Family(GroundSet(n), std::move(members));
}

// The three n = 3 example families.
inline Family f1() { return make_family(3, {{}, {1}, {2}, {1, 3}, {2, 3}, {1, 2, 3}}); }
inline Family f2() { return make_family(3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Family f3() { return make_family(3, {{}, {1}, {2}, {3}, {1, 3}}); }

inline Family power_set(int n) {
    const GroundSet g(n);
    std::vector<Mask> members;
    for (Mask m = 0;; ++m) {
        members.push_back(m);
        if (m == g.full()) break;
    }
    return Family(g, std::move(members));
}

inline Family family_from_selector(const GroundSet& g, std::uint64_t sel) {
    std::vector<Mask> members;
    for (Mask m = 0;; ++m) {
        if (sel >> m & 1) members.push_back(m);
        if (m == g.full()) break;
    }
    return Family(g, std::move(members));
}

template <typename Fn>
void for_all_families(int n, Fn&& fn) {
    const GroundSet g(n);
    const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t sel = 0; sel < total; ++sel) fn(family_from_selector(g, sel));
}

// Blind-scan cube oracle: every (A, B) pair, every set in between probed by
// binary search. Exponential, fine for n <= 6.
inline std::vector<std::vector<Cube>> oracle_cubes(const Family& f) {
    const auto& mem = f.members();
    auto is_member = [&](Mask m) {
        return std::binary_search(mem.begin(), mem.end(), m);
    };
    std::vector<std::vector<Cube>> grades(std::size_t(f.n()) + 1);
    for (Mask b = 0;; ++b) {
        for (Mask a = b;; a = (a - 1) & b) {
            bool inside = true;
            const Mask d = b & ~a;
            for (Mask s = d; inside; s = (s - 1) & d) {
                if (!is_member(a | s)) inside = false;
                if (s == 0) break;
            }
            if (inside) grades[std::size_t(cubefam::popcount(d))].emplace_back(a, b);
            if (a == 0) break;
        }
        if (b == f.ground().full()) break;
    }
    for (auto& g : grades) std::sort(g.begin(), g.end());
    return grades;
}

inline std::vector<std::size_t> oracle_grade_sizes(const Family& f) {
    std::vector<std::size_t> out;
    for (const auto& g : oracle_cubes(f)) out.push_back(g.size());
    return out;
}

// Union-find over vertices and edges of the complex.
inline std::size_t oracle_component_count(const Family& f) {
    const auto grades = oracle_cubes(f);
    const auto& verts = grades[0];
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](Mask m) {
        return std::size_t(std::lower_bound(verts.begin(), verts.end(), Cube(m, m)) -
                           verts.begin());
    };
    if (grades.size() > 1)
        for (const Cube& e : grades[1])
            parent[find(index_of(e.lower))] = find(index_of(e.upper));
    std::size_t count = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (find(i) == i) ++count;
    return count;
}

inline BigInt determinant(const IntegerMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m(rows[0], cols[0]);
    BigInt det = 0;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> sub_rows;
        for (std::size_t r = 0; r < k; ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        const BigInt v = m(rows[i], cols[0]);
        if (v != 0)
            det += sign * v *
                   determinant(m, sub_rows,
                               std::vector<std::size_t>(cols.begin() + 1, cols.end()));
        sign = -sign;
    }
    return det;
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Invariant factors via determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}.
inline std::vector<BigInt> oracle_invariant_factors(const IntegerMatrix& m) {
    std::vector<BigInt> divisors;  // D_1, D_2, ...
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        BigInt g = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                g = boost::multiprecision::gcd(g, abs(determinant(m, rows, cols)));
            });
        });
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<BigInt> factors;
    BigInt prev = 1;
    for (const BigInt& d : divisors) {
        factors.push_back(d / prev);
        prev = d;
    }
    return factors;
}

inline IntegerMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   std::mt19937_64& rng) {
    IntegerMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

}  // namespace testing_support

#endif  // CUBEFAM_TESTS_HELPERS_HPP
