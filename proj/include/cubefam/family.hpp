#ifndef CUBEFAM_FAMILY_HPP
#define CUBEFAM_FAMILY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubefam {

// A subset of [n] = {1,...,n} packed into a word: element i <-> bit i-1.
using Mask = std::uint32_t;

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// Mask holding just the element i (1-based).
inline Mask element(int i) noexcept { return Mask{1} << (i - 1); }

class GroundSet {
public:
    static constexpr int kMaxElements = 20;

    explicit GroundSet(int n) : n_(n) {
        if (n < 1 || n > kMaxElements)
            throw std::domain_error("ground set size must lie in [1, 20], got " +
                                    std::to_string(n));
    }

    int size() const noexcept { return n_; }
    Mask full() const noexcept { return (Mask{1} << n_) - 1; }
    bool valid(Mask m) const noexcept { return (m & ~full()) == 0; }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    int n_;
};

/// A family F of subsets of [n], kept in canonical form: members strictly
/// sorted by mask value, no duplicates. Equality is canonical-list equality.
/// Values are immutable after construction, so they can be shared across
/// threads freely.
class Family {
public:
    Family(GroundSet ground, std::vector<Mask> members)
        : ground_(ground), members_(std::move(members)) {
        for (Mask m : members_)
            if (!ground_.valid(m))
                throw std::domain_error("family member out of range for ground set");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        present_.assign((std::size_t{ground_.full()} + 64) / 64, 0);
        for (Mask m : members_) present_[m >> 6] |= std::uint64_t{1} << (m & 63);
    }

    const GroundSet& ground() const noexcept { return ground_; }
    int n() const noexcept { return ground_.size(); }
    const std::vector<Mask>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    /// Membership test; m must be valid for the ground set.
    bool contains(Mask m) const noexcept { return present_[m >> 6] >> (m & 63) & 1; }

    friend bool operator==(const Family& a, const Family& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_;
    }

private:
    GroundSet ground_;
    std::vector<Mask> members_;
    std::vector<std::uint64_t> present_;  // one bit per subset of [n]
};

namespace detail {

inline void require_valid(const Family& f, Mask m, const char* where) {
    if (!f.ground().valid(m))
        throw std::domain_error(std::string(where) + ": mask out of range for ground set");
}

inline void require_same_ground(const Family& a, const Family& b, const char* where) {
    if (!(a.ground() == b.ground()))
        throw std::invalid_argument(std::string(where) + ": ground sets differ");
}

}  // namespace detail

/// True iff A is a subset of B and every C with A <= C <= B is a member of F.
/// When A is not a subset of B the interval is empty and the result is false.
inline bool interval_contained(const Family& f, Mask a, Mask b) {
    detail::require_valid(f, a, "interval_contained");
    detail::require_valid(f, b, "interval_contained");
    if (a & ~b) return false;
    const Mask d = b & ~a;
    for (Mask s = d;; s = (s - 1) & d) {
        if (!f.contains(a | s)) return false;
        if (s == 0) break;
    }
    return true;
}

inline bool is_union_closed(const Family& f) {
    const auto& mem = f.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (!f.contains(mem[i] | mem[j])) return false;
    return true;
}

/// True iff every non-empty member A has a root: an i in A with the whole
/// interval [{i}, A] inside F.
inline bool is_simply_rooted(const Family& f) {
    for (Mask a : f.members()) {
        if (a == 0) continue;
        bool rooted = false;
        for (Mask bits = a; bits; bits &= bits - 1) {
            if (interval_contained(f, bits & -bits, a)) {
                rooted = true;
                break;
            }
        }
        if (!rooted) return false;
    }
    return true;
}

inline Family complement(const Family& f) {
    std::vector<Mask> out;
    out.reserve(std::size_t{f.ground().full()} + 1 - f.size());
    for (Mask m = 0;; ++m) {
        if (!f.contains(m)) out.push_back(m);
        if (m == f.ground().full()) break;
    }
    return Family(f.ground(), std::move(out));
}

/// Union of all subsets of A that are not members of F. Requires F simply
/// rooted and A a member; in that regime the result is itself a non-member
/// (or empty), because the complement of F is union-closed.
inline Mask phi(const Family& f, Mask a) {
    detail::require_valid(f, a, "phi");
    if (!f.contains(a))
        throw std::invalid_argument("phi: set is not a member of the family");
    if (!is_simply_rooted(f))
        throw std::invalid_argument("phi: family is not simply rooted");
    Mask u = 0;
    for (Mask s = a;; s = (s - 1) & a) {
        if (!f.contains(s)) u |= s;
        if (s == 0) break;
    }
    return u;
}

/// The set of roots {i in A : [{i}, A] inside F}, as a mask. A must be
/// non-empty; membership of A in F is not required.
inline Mask roots(const Family& f, Mask a) {
    detail::require_valid(f, a, "roots");
    if (a == 0) throw std::invalid_argument("roots: set must be non-empty");
    Mask r = 0;
    for (Mask bits = a; bits; bits &= bits - 1) {
        const Mask i = bits & -bits;
        if (interval_contained(f, i, a)) r |= i;
    }
    return r;
}

/// F_A: the members B of F whose whole interval [B, A] stays inside F.
/// Every member of the result is a subset of A, and A itself always qualifies.
inline Family subfamily_at(const Family& f, Mask a) {
    detail::require_valid(f, a, "subfamily_at");
    if (!f.contains(a))
        throw std::invalid_argument("subfamily_at: set is not a member of the family");
    std::vector<Mask> out;
    for (Mask b : f.members())
        if (interval_contained(f, b, a)) out.push_back(b);
    return Family(f.ground(), std::move(out));
}

inline int max_cardinality(const Family& f) {
    if (f.empty()) throw std::invalid_argument("max_cardinality: family is empty");
    int best = 0;
    for (Mask m : f.members()) best = std::max(best, popcount(m));
    return best;
}

inline Family family_union(const Family& a, const Family& b) {
    detail::require_same_ground(a, b, "family_union");
    std::vector<Mask> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                   b.members().end(), std::back_inserter(out));
    return Family(a.ground(), std::move(out));
}

inline Family family_intersection(const Family& a, const Family& b) {
    detail::require_same_ground(a, b, "family_intersection");
    std::vector<Mask> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return Family(a.ground(), std::move(out));
}

inline Family family_without(const Family& f, Mask a) {
    detail::require_valid(f, a, "family_without");
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.members())
        if (m != a) out.push_back(m);
    return Family(f.ground(), std::move(out));
}

inline Family family_with(const Family& f, Mask a) {
    detail::require_valid(f, a, "family_with");
    std::vector<Mask> out(f.members());
    out.push_back(a);
    return Family(f.ground(), std::move(out));
}

inline std::string set_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; m; ++i, m >>= 1) {
        if (!(m & 1)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    s += "}";
    return s;
}

inline std::string family_to_string(const Family& f) {
    std::string s = "{";
    bool first = true;
    for (Mask m : f.members()) {
        if (!first) s += ",";
        s += set_to_string(m);
        first = false;
    }
    s += "}";
    return s;
}

}  // namespace cubefam

#endif  // CUBEFAM_FAMILY_HPP
