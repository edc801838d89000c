#ifndef CUBEFAM_VERIFY_HPP
#define CUBEFAM_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubes.hpp"
#include "family.hpp"
#include "homology.hpp"

namespace cubefam {

enum class FamilyPredicate { all, simply_rooted, union_closed };

struct RandomMode {
    std::uint32_t sample_count = 0;
    std::uint64_t seed = 0;
    double member_probability = 0.5;
};

/// What to enumerate: exhaustive mode walks every family over [n] once
/// (n <= 4, optionally with the empty set pinned as a member); random mode
/// draws sample_count families with independent membership coin flips.
struct EnumSpec {
    int n = 1;
    bool require_empty_member = false;
    FamilyPredicate predicate = FamilyPredicate::all;
    std::optional<RandomMode> random;  // nullopt: exhaustive
};

inline void validate(const EnumSpec& spec) {
    if (spec.n < 1 || spec.n > GroundSet::kMaxElements)
        throw std::domain_error("enumeration: n out of range");
    if (!spec.random && spec.n > 4)
        throw std::domain_error("enumeration: exhaustive mode is capped at n = 4");
    if (spec.random) {
        const double p = spec.random->member_probability;
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("enumeration: member probability must lie in [0, 1]");
    }
}

inline bool satisfies(const Family& f, FamilyPredicate p) {
    switch (p) {
        case FamilyPredicate::all: return true;
        case FamilyPredicate::simply_rooted: return is_simply_rooted(f);
        case FamilyPredicate::union_closed: return is_union_closed(f);
    }
    return false;
}

/// One seeded draw: each subset of [n] becomes a member independently.
/// The comparison runs on the top 53 engine bits so identical seeds give
/// identical families on every platform.
inline Family random_family(const GroundSet& g, double member_probability,
                            std::mt19937_64& rng) {
    const auto threshold =
        static_cast<std::uint64_t>(std::ldexp(member_probability, 53));
    std::vector<Mask> members;
    for (Mask m = 0;; ++m) {
        if ((rng() >> 11) < threshold) members.push_back(m);
        if (m == g.full()) break;
    }
    return Family(g, std::move(members));
}

template <typename Fn>
void for_each_family(const EnumSpec& spec, Fn&& fn) {
    validate(spec);
    const GroundSet g(spec.n);
    if (spec.random) {
        std::mt19937_64 rng(spec.random->seed);
        for (std::uint32_t i = 0; i < spec.random->sample_count; ++i) {
            Family f = random_family(g, spec.random->member_probability, rng);
            if (spec.require_empty_member && !f.contains(0)) f = family_with(f, 0);
            if (satisfies(f, spec.predicate)) fn(f);
        }
    } else {
        const std::uint32_t cells = Mask{1} << spec.n;  // candidate members
        const std::uint64_t total = std::uint64_t{1} << cells;
        std::vector<Mask> members;
        for (std::uint64_t sel = 0; sel < total; ++sel) {
            if (spec.require_empty_member && !(sel & 1)) continue;
            members.clear();
            for (std::uint32_t m = 0; m < cells; ++m)
                if (sel >> m & 1) members.push_back(m);
            Family f(g, members);
            if (satisfies(f, spec.predicate)) fn(f);
        }
    }
}

inline std::vector<Family> enumerate_families(const EnumSpec& spec) {
    std::vector<Family> out;
    for_each_family(spec, [&](const Family& f) { out.push_back(f); });
    return out;
}

struct CheckFailure {
    Family family;
    std::string detail;  // first violated sub-assertion
};

struct CheckReport {
    std::string check_name;
    int n = 0;
    std::uint64_t families_tested = 0;
    std::vector<CheckFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
};

namespace detail {

template <typename Body>
CheckReport run_check(std::string name, int n, Body&& body) {
    CheckReport rep;
    rep.check_name = std::move(name);
    rep.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    body(rep);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const CheckFailure& a, const CheckFailure& b) {
                  if (a.family.members() != b.family.members())
                      return a.family.members() < b.family.members();
                  return a.detail < b.detail;
              });
    return rep;
}

inline std::string int_list(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string describe_homology(const HomologyReport& h) {
    std::string s = "betti=" + int_list(h.betti);
    bool torsion = false;
    for (const auto& t : h.torsion)
        if (!t.empty()) torsion = true;
    s += torsion ? ", with torsion" : ", no torsion";
    return s;
}

inline void require_sweep_range(int n, const char* check) {
    if (n < 1 || n > 4)
        throw std::domain_error(std::string(check) +
                                ": exhaustive sweep is capped at n = 4");
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Every simply rooted family over [n] containing the empty set has an
/// acyclic cubical set.
inline CheckReport check_theorem1(int n) {
    detail::require_sweep_range(n, "theorem1");
    return detail::run_check("theorem1", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, true, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                ++rep.families_tested;
                const HomologyReport h = homology_of(f);
                if (!h.acyclic)
                    rep.failures.push_back(
                        {f, "expected acyclic, got " + detail::describe_homology(h)});
            });
    });
}

/// Same sweep, alternating cube-count sum equals 1 exactly.
inline CheckReport check_corollary_eq1(int n) {
    detail::require_sweep_range(n, "corollary1");
    return detail::run_check("corollary1", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, true, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                ++rep.families_tested;
                const std::int64_t e = euler_from_cube_counts(f);
                if (e != 1)
                    rep.failures.push_back(
                        {f, "alternating cube-count sum is " + std::to_string(e) +
                                ", expected 1"});
            });
    });
}

/// Per-member alternating sums vanish, the graded counts with top set A
/// agree with the members of F_A by cardinality, and both match the
/// subset-with-a-root count. When phi(A) is empty the interval below A is
/// entirely inside F, so no subsets are excluded and the subtracted
/// binomial term drops out.
inline CheckReport check_lemma_per_set(int n) {
    detail::require_sweep_range(n, "lemma-per-set");
    return detail::run_check("lemma-per-set", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, true, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                ++rep.families_tested;
                for (Mask a : f.members()) {
                    if (a == 0) continue;
                    const auto counts = top_cube_counts(f, a);
                    const std::int64_t alt = detail::alternating_sum(counts);
                    if (alt != 0) {
                        rep.failures.push_back(
                            {f, "per-set alternating sum at A=" + set_to_string(a) +
                                    " is " + std::to_string(alt)});
                        return;
                    }
                    const Mask ph = phi(f, a);
                    const Family fa = subfamily_at(f, a);
                    const int card = popcount(a);
                    for (int k = 0; k <= card; ++k) {
                        std::int64_t by_card = 0;
                        for (Mask b : fa.members())
                            if (popcount(b) == card - k) ++by_card;
                        const std::int64_t expected =
                            detail::binomial(card, card - k) -
                            (ph == 0 ? 0 : detail::binomial(popcount(ph), card - k));
                        if (counts[std::size_t(k)] != by_card ||
                            counts[std::size_t(k)] != expected) {
                            rep.failures.push_back(
                                {f, "count mismatch at A=" + set_to_string(a) +
                                        ", k=" + std::to_string(k) + ": cubes " +
                                        std::to_string(counts[std::size_t(k)]) +
                                        ", F_A members " + std::to_string(by_card) +
                                        ", binomial " + std::to_string(expected)});
                            return;
                        }
                    }
                }
            });
    });
}

/// roots(F, A) = A minus phi(F, A) for every non-empty member of every
/// simply rooted family (the empty set need not be a member).
inline CheckReport check_prop_roots_phi(int n) {
    detail::require_sweep_range(n, "prop-roots");
    return detail::run_check("prop-roots", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, false, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                ++rep.families_tested;
                for (Mask a : f.members()) {
                    if (a == 0) continue;
                    const Mask r = roots(f, a);
                    const Mask ph = phi(f, a);
                    if (r != (a & ~ph)) {
                        rep.failures.push_back(
                            {f, "roots " + set_to_string(r) + " != A \\ phi(A) " +
                                    set_to_string(a & ~ph) + " at A=" +
                                    set_to_string(a)});
                        return;
                    }
                }
            });
    });
}

/// F_A is the union of the root intervals [{i}, A] when phi(A) is non-empty,
/// and the whole interval [empty, A] when phi(A) is empty.
inline CheckReport check_prop_fa(int n) {
    detail::require_sweep_range(n, "prop-fa");
    return detail::run_check("prop-fa", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, true, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                ++rep.families_tested;
                for (Mask a : f.members()) {
                    const Mask ph = phi(f, a);
                    const Family fa = subfamily_at(f, a);
                    std::vector<Mask> expect;
                    if (ph == 0) {
                        for (Mask c = a;; c = (c - 1) & a) {
                            expect.push_back(c);
                            if (c == 0) break;
                        }
                    } else {
                        const Mask r = roots(f, a);
                        for (Mask c = a;; c = (c - 1) & a) {
                            if (c & r) expect.push_back(c);
                            if (c == 0) break;
                        }
                    }
                    if (!(fa == Family(f.ground(), std::move(expect)))) {
                        rep.failures.push_back(
                            {f, std::string("F_A mismatch at A=") + set_to_string(a) +
                                    " (phi " + (ph == 0 ? "empty" : "non-empty") +
                                    " branch), got " + family_to_string(fa)});
                        return;
                    }
                }
            });
    });
}

/// The union of the realized cubes [{i}, [n]-{j}] over i <= k, j != i is
/// acyclic for every 2 <= n <= n_max, 1 <= k < n.
inline CheckReport check_lemma33(int n_max) {
    if (n_max < 2 || n_max > 6)
        throw std::domain_error("lemma33: n must lie in [2, 6]");
    return detail::run_check("lemma33", n_max, [&](CheckReport& rep) {
        for (int n = 2; n <= n_max; ++n)
            for (int k = 1; k < n; ++k) {
                ++rep.families_tested;
                const Family f = lemma_family(n, k);
                const HomologyReport h = homology_of(f);
                if (!h.acyclic)
                    rep.failures.push_back(
                        {f, "lemma family n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + " not acyclic: " +
                                detail::describe_homology(h)});
            }
    });
}

namespace detail {

inline std::vector<Cube> graded_set_op(const std::vector<Cube>& a,
                                       const std::vector<Cube>& b, bool inter) {
    std::vector<Cube> out;
    if (inter)
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
    else
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(out));
    return out;
}

/// Density schedule for the randomized sweeps: the default 0.5 plus a
/// sparse and a dense pass, cycled per sample.
inline double density_for(std::uint32_t i) {
    constexpr double densities[3] = {0.5, 0.2, 0.8};
    return densities[i % 3];
}

}  // namespace detail

/// Prop-3.1-style graded cube-set identity and the realized-intersection
/// identity for random family pairs.
inline CheckReport check_intersections(int n, std::uint32_t samples,
                                       std::uint64_t seed) {
    if (n < 1 || n > 6)
        throw std::domain_error("intersections: n is capped at 6");
    return detail::run_check("intersections", n, [&](CheckReport& rep) {
        const GroundSet g(n);
        std::mt19937_64 rng(seed);
        for (std::uint32_t i = 0; i < samples; ++i) {
            const double p = detail::density_for(i);
            const Family f = random_family(g, p, rng);
            const Family h = random_family(g, p, rng);
            ++rep.families_tested;

            const CubicalComplex cf = cubes(f);
            const CubicalComplex ch = cubes(h);
            const CubicalComplex ci = cubes(family_intersection(f, h));
            std::string bad;
            for (int k = 0; k <= n && bad.empty(); ++k) {
                if (detail::graded_set_op(cf.grade(k), ch.grade(k), true) !=
                    ci.grade(k))
                    bad = "graded cube-set intersection differs in degree " +
                          std::to_string(k);
            }
            for (int k1 = 0; k1 <= n && bad.empty(); ++k1)
                for (const Cube& c : cf.grade(k1)) {
                    if (!bad.empty()) break;
                    const RealizedCube rc = realize(g, c);
                    for (int k2 = 0; k2 <= n && bad.empty(); ++k2)
                        for (const Cube& d : ch.grade(k2)) {
                            const auto e = cube_intersect(c, d);
                            const auto r = realized_intersect(rc, realize(g, d));
                            if (e.has_value() != r.has_value()) {
                                bad = "empty/non-empty disagreement between cube and "
                                      "realized intersection";
                                break;
                            }
                            if (!e) continue;
                            if (!(realize(g, *e) == *r)) {
                                bad = "realized intersection differs from realization "
                                      "of the intersection cube";
                                break;
                            }
                            if (!ci.contains(*e)) {
                                bad = "intersection cube missing from the "
                                      "intersection family's complex";
                                break;
                            }
                        }
                }
            if (!bad.empty())
                rep.failures.push_back({f, "with G=" + family_to_string(h) + ": " + bad});
        }
    });
}

/// F union-closed iff its complement is simply rooted; exhaustive through
/// n = 3, seeded random families for 4 <= n <= 6.
inline CheckReport check_duality(int n, std::uint32_t samples = 10000,
                                 std::uint64_t seed = 1) {
    if (n < 1 || n > 6) throw std::domain_error("duality: n is capped at 6");
    return detail::run_check("duality", n, [&](CheckReport& rep) {
        auto test_one = [&](const Family& f) {
            ++rep.families_tested;
            const bool uc = is_union_closed(f);
            const bool sr = is_simply_rooted(complement(f));
            if (uc != sr)
                rep.failures.push_back(
                    {f, std::string("union-closed=") + (uc ? "true" : "false") +
                            " but complement simply-rooted=" + (sr ? "true" : "false")});
        };
        if (n <= 3) {
            for_each_family(EnumSpec{n, false, FamilyPredicate::all, std::nullopt},
                            test_one);
        } else {
            const GroundSet g(n);
            std::mt19937_64 rng(seed);
            for (std::uint32_t i = 0; i < samples; ++i)
                test_one(random_family(g, detail::density_for(i), rng));
        }
    });
}

/// Splitting F at a maximum-cardinality member A: the graded cube sets of
/// the parts union back to C(F), their graded intersection is the cube set
/// of F_A minus {A}, and the cubical set of F_A is acyclic.
inline CheckReport check_decomposition(int n) {
    detail::require_sweep_range(n, "decomposition");
    return detail::run_check("decomposition", n, [&](CheckReport& rep) {
        for_each_family(
            EnumSpec{n, true, FamilyPredicate::simply_rooted, std::nullopt},
            [&](const Family& f) {
                if (f.size() < 2) return;
                ++rep.families_tested;
                const Mask a = max_member(f);
                const auto [rest, at] = decompose_at_max(f);
                const CubicalComplex cx = cubes(f);
                const CubicalComplex cr = cubes(rest);
                const CubicalComplex ca = cubes(at);
                const CubicalComplex cm = cubes(family_without(at, a));
                if (!(family_intersection(rest, at) == family_without(at, a))) {
                    rep.failures.push_back({f, "family intersection is not F_A minus {A}"});
                    return;
                }
                for (int k = 0; k <= n; ++k) {
                    if (detail::graded_set_op(cr.grade(k), ca.grade(k), false) !=
                        cx.grade(k)) {
                        rep.failures.push_back(
                            {f, "cube-set union differs in degree " + std::to_string(k) +
                                    " at A=" + set_to_string(a)});
                        return;
                    }
                    if (detail::graded_set_op(cr.grade(k), ca.grade(k), true) !=
                        cm.grade(k)) {
                        rep.failures.push_back(
                            {f, "cube-set intersection differs from F_A minus {A} in "
                                "degree " + std::to_string(k)});
                        return;
                    }
                }
                const HomologyReport h = homology_of(at);
                if (!h.acyclic)
                    rep.failures.push_back(
                        {f, "F_A not acyclic at A=" + set_to_string(a) + ": " +
                                detail::describe_homology(h)});
            });
    });
}

}  // namespace cubefam

#endif  // CUBEFAM_VERIFY_HPP
