#ifndef CUBEFAM_CUBES_HPP
#define CUBEFAM_CUBES_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "family.hpp"

namespace cubefam {

/// Interval cube [A, B]: all sets C with A <= C <= B. The invariant
/// lower <= upper always holds; an empty intersection of cubes is
/// represented as std::nullopt, never as a malformed Cube.
struct Cube {
    Mask lower = 0;
    Mask upper = 0;

    Cube() = default;
    Cube(Mask lo, Mask up) : lower(lo), upper(up) {
        if (lo & ~up)
            throw std::invalid_argument("cube endpoints must satisfy lower <= upper");
    }

    int dim() const noexcept { return popcount(upper & ~lower); }

    auto operator<=>(const Cube&) const = default;  // (lower, upper) order
};

/// Per-coordinate extent of a realized cube in [0,1]^n:
/// the point {0}, the point {1}, or the full interval [0,1].
enum class CoordSpan : std::uint8_t { at0, at1, unit };

struct RealizedCube {
    std::vector<CoordSpan> spans;  // one entry per coordinate of [n]

    friend bool operator==(const RealizedCube&, const RealizedCube&) = default;
};

/// Graded, face-closed collection of cubes with a fixed basis order:
/// within each grade cubes sort by (lower, upper). The order defines the
/// row/column indexing of boundary matrices, identically across runs.
class CubicalComplex {
public:
    CubicalComplex(GroundSet ground, std::vector<std::vector<Cube>> grades)
        : ground_(ground), grades_(std::move(grades)) {
        const std::size_t wanted = std::size_t(ground_.size()) + 1;
        for (std::size_t k = wanted; k < grades_.size(); ++k)
            if (!grades_[k].empty())
                throw std::invalid_argument("cube grade exceeds the ground set size");
        grades_.resize(wanted);
        for (std::size_t k = 0; k < wanted; ++k) {
            auto& g = grades_[k];
            for (const Cube& c : g) {
                if (!ground_.valid(c.upper))
                    throw std::domain_error("cube out of range for ground set");
                if (std::size_t(c.dim()) != k)
                    throw std::invalid_argument("cube listed in the wrong grade");
            }
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
        }
    }

    const GroundSet& ground() const noexcept { return ground_; }
    int n() const noexcept { return ground_.size(); }

    const std::vector<Cube>& grade(int k) const {
        if (k < 0 || k > n()) throw std::domain_error("grade index out of range");
        return grades_[std::size_t(k)];
    }

    /// Highest k with a non-empty grade; -1 for the empty complex.
    int top_dim() const noexcept {
        for (int k = n(); k >= 0; --k)
            if (!grades_[std::size_t(k)].empty()) return k;
        return -1;
    }

    std::vector<std::size_t> grade_sizes() const {
        std::vector<std::size_t> out;
        out.reserve(grades_.size());
        for (const auto& g : grades_) out.push_back(g.size());
        return out;
    }

    std::size_t total() const noexcept {
        std::size_t t = 0;
        for (const auto& g : grades_) t += g.size();
        return t;
    }

    bool contains(const Cube& c) const {
        const int k = c.dim();
        if (k > n()) return false;
        const auto& g = grades_[std::size_t(k)];
        return std::binary_search(g.begin(), g.end(), c);
    }

    friend bool operator==(const CubicalComplex& a, const CubicalComplex& b) {
        return a.ground_ == b.ground_ && a.grades_ == b.grades_;
    }

private:
    GroundSet ground_;
    std::vector<std::vector<Cube>> grades_;
};

/// All interval cubes contained in F, graded by dimension.
///
/// For each member A (taken in increasing cardinality) the free-coordinate
/// set D is grown one coordinate at a time. [A, A+D+e] belongs to C(F)
/// exactly when A+D+e is a member and every facet [A, A+D+e-x] was already
/// included, so each level costs one membership bit per candidate instead
/// of a blind scan over all 4^n interval pairs. Grade 0 is exactly the
/// members of F, and the result is face-closed by construction.
inline CubicalComplex cubes(const Family& f) {
    const GroundSet g = f.ground();
    const int n = g.size();
    std::vector<std::vector<Cube>> grades(std::size_t(n) + 1);

    std::vector<Mask> order(f.members());
    std::stable_sort(order.begin(), order.end(),
                     [](Mask x, Mask y) { return popcount(x) < popcount(y); });

    std::vector<int> free_pos;
    std::vector<char> included;                    // indexed by compressed D
    std::vector<std::pair<Mask, Mask>> level, next;  // (compressed D, expanded D)
    for (Mask a : order) {
        const Mask free_bits = g.full() & ~a;
        const int nf = popcount(free_bits);
        free_pos.clear();
        for (Mask bits = free_bits; bits; bits &= bits - 1)
            free_pos.push_back(std::countr_zero(bits));

        grades[0].emplace_back(a, a);
        included.assign(std::size_t{1} << nf, 0);
        included[0] = 1;
        level.assign(1, {0, 0});
        for (int k = 1; k <= nf && !level.empty(); ++k) {
            next.clear();
            for (const auto& [c, d] : level) {
                // extend only above the highest chosen coordinate, so each
                // candidate D is generated exactly once
                for (int e = std::bit_width(c); e < nf; ++e) {
                    const Mask cc = c | (Mask{1} << e);
                    const Mask dd = d | (Mask{1} << free_pos[std::size_t(e)]);
                    if (!f.contains(a | dd)) continue;
                    bool facets_in = true;
                    for (Mask bits = cc; bits; bits &= bits - 1) {
                        if (!included[cc ^ (bits & -bits)]) {
                            facets_in = false;
                            break;
                        }
                    }
                    if (!facets_in) continue;
                    included[cc] = 1;
                    next.emplace_back(cc, dd);
                    grades[std::size_t(k)].emplace_back(a, a | dd);
                }
            }
            level.swap(next);
        }
    }
    return CubicalComplex(g, std::move(grades));
}

inline std::vector<Cube> cubes_by_dim(const Family& f, int k) {
    if (k < 0 || k > f.n())
        throw std::domain_error("cubes_by_dim: dimension out of range");
    return cubes(f).grade(k);
}

/// [A,B] meet [C,D] = [A+C, B*D] when that is a cube, otherwise empty.
inline std::optional<Cube> cube_intersect(const Cube& c1, const Cube& c2) {
    const Mask lo = c1.lower | c2.lower;
    const Mask up = c1.upper & c2.upper;
    if (lo & ~up) return std::nullopt;
    return Cube(lo, up);
}

/// Coordinate extents of |[A,B]|: {1} on A, [0,1] on B minus A, {0} elsewhere.
inline RealizedCube realize(const GroundSet& g, const Cube& c) {
    if (!g.valid(c.upper)) throw std::domain_error("realize: cube out of range");
    RealizedCube r;
    r.spans.reserve(std::size_t(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const Mask bit = Mask{1} << i;
        if (c.lower & bit)
            r.spans.push_back(CoordSpan::at1);
        else if (c.upper & bit)
            r.spans.push_back(CoordSpan::unit);
        else
            r.spans.push_back(CoordSpan::at0);
    }
    return r;
}

/// Coordinate-wise intersection; empty exactly when some coordinate pairs
/// the point {0} with the point {1}.
inline std::optional<RealizedCube> realized_intersect(const RealizedCube& r1,
                                                      const RealizedCube& r2) {
    if (r1.spans.size() != r2.spans.size())
        throw std::invalid_argument("realized_intersect: dimension mismatch");
    RealizedCube out;
    out.spans.reserve(r1.spans.size());
    for (std::size_t i = 0; i < r1.spans.size(); ++i) {
        const CoordSpan x = r1.spans[i], y = r2.spans[i];
        if (x == y) {
            out.spans.push_back(x);
        } else if (x == CoordSpan::unit) {
            out.spans.push_back(y);
        } else if (y == CoordSpan::unit) {
            out.spans.push_back(x);
        } else {
            return std::nullopt;  // {0} meets {1}
        }
    }
    return out;
}

/// Inclusion-maximal cubes of C(F): a cube is maximal iff no one-step
/// extension (drop an element from the lower end, or add one to the upper
/// end) is still a cube of F. Sorted by (lower, upper).
inline std::vector<Cube> maximal_cubes(const Family& f) {
    const CubicalComplex cx = cubes(f);
    const Mask full = f.ground().full();
    std::vector<Cube> out;
    for (int k = 0; k <= cx.n(); ++k) {
        for (const Cube& c : cx.grade(k)) {
            bool maximal = true;
            for (Mask bits = c.lower; bits && maximal; bits &= bits - 1) {
                const Mask i = bits & -bits;
                if (cx.contains(Cube(c.lower ^ i, c.upper))) maximal = false;
            }
            for (Mask bits = full & ~c.upper; bits && maximal; bits &= bits - 1) {
                const Mask j = bits & -bits;
                if (cx.contains(Cube(c.lower, c.upper | j))) maximal = false;
            }
            if (maximal) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The family {A proper subset of [n] : A meets [k]}. Its cubical set is
/// the union of the realized cubes [{i}, [n]-{j}] over i <= k, j != i.
inline Family lemma_family(int n, int k) {
    if (n < 2) throw std::domain_error("lemma_family: n must be at least 2");
    if (k < 1 || k >= n)
        throw std::domain_error("lemma_family: k must satisfy 1 <= k < n");
    const GroundSet g(n);
    const Mask kmask = (Mask{1} << k) - 1;
    std::vector<Mask> out;
    for (Mask a = 0; a < g.full(); ++a)
        if (a & kmask) out.push_back(a);
    return Family(g, std::move(out));
}

/// The lexicographically smallest member of maximum cardinality.
inline Mask max_member(const Family& f) {
    if (f.empty()) throw std::invalid_argument("max_member: family is empty");
    Mask best = f.members().front();
    int best_card = popcount(best);
    for (Mask m : f.members()) {
        const int card = popcount(m);
        if (card > best_card) {  // members ascend, so ties keep the smallest mask
            best = m;
            best_card = card;
        }
    }
    return best;
}

/// Split F at A = max_member(F) into (F minus {A}, F_A). The graded cube
/// sets of the two parts union to the graded cube set of F.
inline std::pair<Family, Family> decompose_at_max(const Family& f) {
    const Mask a = max_member(f);
    return {family_without(f, a), subfamily_at(f, a)};
}

}  // namespace cubefam

#endif  // CUBEFAM_CUBES_HPP
