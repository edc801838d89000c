#ifndef CUBEFAM_HOMOLOGY_HPP
#define CUBEFAM_HOMOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubes.hpp"
#include "snf.hpp"

namespace cubefam {

/// Boundary operator from grade k to grade k-1, in the complex's basis
/// order. For a k-cube with free coordinates i1 < ... < ik the column holds,
/// for the j-th free coordinate, (-1)^(j-1) at the facet that adds ij to the
/// lower end and the opposite sign at the facet that drops ij from the upper
/// end. This is the product rule applied over ascending coordinates with
/// d[a, a+1] = top - bottom; the composite of two boundaries vanishes.
inline IntegerMatrix boundary_matrix(const CubicalComplex& cx, int k) {
    if (k < 1 || k > cx.n())
        throw std::domain_error("boundary_matrix: degree out of range");
    const auto& row_basis = cx.grade(k - 1);
    const auto& col_basis = cx.grade(k);
    IntegerMatrix m(row_basis.size(), col_basis.size());

    auto row_of = [&](const Cube& c) -> std::size_t {
        const auto it = std::lower_bound(row_basis.begin(), row_basis.end(), c);
        if (it == row_basis.end() || !(*it == c))
            throw std::logic_error("boundary_matrix: complex is not face-closed");
        return std::size_t(it - row_basis.begin());
    };

    for (std::size_t col = 0; col < col_basis.size(); ++col) {
        const Cube& c = col_basis[col];
        int sign = 1;
        for (Mask bits = c.upper & ~c.lower; bits; bits &= bits - 1) {
            const Mask i = bits & -bits;  // free coordinates in ascending order
            m(row_of(Cube(c.lower | i, c.upper)), col) += sign;
            m(row_of(Cube(c.lower, c.upper & ~i)), col) -= sign;
            sign = -sign;
        }
    }
    return m;
}

/// Exact homology summary of the cubical set of a family.
/// acyclic == nonempty and connected and b0 == 1 and all higher Betti
/// numbers zero and no torsion anywhere; the two Euler characteristics
/// agree on every input.
struct HomologyReport {
    std::vector<std::int64_t> betti;           // degrees 0..n
    std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1, per degree
    std::int64_t euler_from_cubes = 0;
    std::int64_t euler_from_betti = 0;
    bool connected = false;
    bool nonempty = false;
    bool acyclic = false;
    std::vector<std::size_t> cube_counts;  // |C_k| for k = 0..n
};

namespace detail {

template <typename T>
std::int64_t alternating_sum(const std::vector<T>& v) {
    std::int64_t sum = 0;
    std::int64_t sign = 1;
    for (const T& x : v) {
        sum += sign * std::int64_t(x);
        sign = -sign;
    }
    return sum;
}

}  // namespace detail

inline HomologyReport homology_of(const Family& f) {
    const CubicalComplex cx = cubes(f);
    const int n = cx.n();
    HomologyReport rep;
    rep.cube_counts = cx.grade_sizes();
    rep.betti.assign(std::size_t(n) + 1, 0);
    rep.torsion.assign(std::size_t(n) + 1, {});

    // degrees above the top non-empty grade need no matrix work
    const int top = cx.top_dim();
    std::vector<std::size_t> rank(std::size_t(n) + 2, 0);
    std::vector<SnfResult> snf(std::size_t(n) + 2);
    for (int k = 1; k <= top; ++k) {
        if (cx.grade(k).empty()) continue;
        SnfResult r = smith_normal_form(boundary_matrix(cx, k));
        rank[std::size_t(k)] = r.rank();
        snf[std::size_t(k)] = std::move(r);
    }

    bool higher_trivial = true;
    bool torsion_free = true;
    for (int k = 0; k <= n; ++k) {
        rep.betti[std::size_t(k)] = std::int64_t(rep.cube_counts[std::size_t(k)]) -
                                    std::int64_t(rank[std::size_t(k)]) -
                                    std::int64_t(rank[std::size_t(k) + 1]);
        for (const BigInt& d : snf[std::size_t(k) + 1].invariant_factors)
            if (d > 1) rep.torsion[std::size_t(k)].push_back(d);
        if (k >= 1 && rep.betti[std::size_t(k)] != 0) higher_trivial = false;
        if (!rep.torsion[std::size_t(k)].empty()) torsion_free = false;
    }

    rep.nonempty = !f.empty();
    rep.connected = rep.betti[0] <= 1;
    rep.acyclic = rep.nonempty && rep.connected && rep.betti[0] == 1 &&
                  higher_trivial && torsion_free;
    rep.euler_from_cubes = detail::alternating_sum(rep.cube_counts);
    rep.euler_from_betti = detail::alternating_sum(rep.betti);
    return rep;
}

/// Alternating sum of the cube counts of F over all degrees.
inline std::int64_t euler_from_cube_counts(const Family& f) {
    return detail::alternating_sum(cubes(f).grade_sizes());
}

/// Number of cubes of F whose top set is A, graded by dimension.
inline std::vector<std::int64_t> top_cube_counts(const Family& f, Mask a) {
    detail::require_valid(f, a, "top_cube_counts");
    std::vector<std::int64_t> counts(std::size_t(popcount(a)) + 1, 0);
    for (Mask c = a;; c = (c - 1) & a) {
        if (interval_contained(f, c, a)) ++counts[std::size_t(popcount(a & ~c))];
        if (c == 0) break;
    }
    return counts;
}

/// Alternating sum of the cube counts with top set A. Zero for every
/// non-empty member of a simply rooted family containing the empty set.
inline std::int64_t per_set_alternating_sum(const Family& f, Mask a) {
    detail::require_valid(f, a, "per_set_alternating_sum");
    if (a == 0)
        throw std::invalid_argument("per_set_alternating_sum: set must be non-empty");
    if (!f.contains(a))
        throw std::invalid_argument("per_set_alternating_sum: set is not a member");
    return detail::alternating_sum(top_cube_counts(f, a));
}

/// Euler characteristic of the cubical set of a non-empty simply rooted
/// family without the empty set, computed from the fully-rooted member
/// counts c_k alone: 1 - sum_k (-1)^k c_k with c_0 = 1.
inline std::int64_t euler_without_empty(const Family& f) {
    if (f.empty())
        throw std::invalid_argument("euler_without_empty: family is empty");
    if (f.contains(0))
        throw std::invalid_argument(
            "euler_without_empty: family must not contain the empty set");
    if (!is_simply_rooted(f))
        throw std::invalid_argument("euler_without_empty: family is not simply rooted");
    std::vector<std::int64_t> c(std::size_t(f.n()) + 1, 0);
    c[0] = 1;
    for (Mask a : f.members())
        if (roots(f, a) == a) ++c[std::size_t(popcount(a))];
    return 1 - detail::alternating_sum(c);
}

}  // namespace cubefam

#endif  // CUBEFAM_HOMOLOGY_HPP
