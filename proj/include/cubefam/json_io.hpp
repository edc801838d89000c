#ifndef CUBEFAM_JSON_IO_HPP
#define CUBEFAM_JSON_IO_HPP

#include <cstdint>
#include <fstream>
#include <limits>
#include <string>

#include "json.hpp"

#include "cubes.hpp"
#include "family.hpp"
#include "homology.hpp"
#include "verify.hpp"

namespace cubefam {

// Field order in emitted objects is part of the output contract, so all
// emission goes through ordered_json.
using Json = nlohmann::ordered_json;

inline Json set_to_json(Mask m) {
    Json arr = Json::array();
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) arr.push_back(i);
    return arr;
}

/// {"n": ..., "sets": [[...], ...]} with members and elements ascending.
inline Json family_to_json(const Family& f) {
    Json j;
    j["n"] = f.n();
    Json sets = Json::array();
    for (Mask m : f.members()) sets.push_back(set_to_json(m));
    j["sets"] = sets;
    return j;
}

/// Parse the family format. Elements are 1-based; the order of sets is
/// irrelevant but duplicate sets (and duplicate elements) are rejected.
inline Family family_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("family: expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("family: missing integer field \"n\"");
    const std::int64_t n64 = j["n"].get<std::int64_t>();
    if (n64 < 1 || n64 > GroundSet::kMaxElements)
        throw std::domain_error("family: n must lie in [1, 20]");
    const GroundSet g{int(n64)};
    if (!j.contains("sets") || !j["sets"].is_array())
        throw std::invalid_argument("family: missing array field \"sets\"");
    std::vector<Mask> members;
    for (const auto& set : j["sets"]) {
        if (!set.is_array())
            throw std::invalid_argument("family: each set must be an array of elements");
        Mask m = 0;
        for (const auto& el : set) {
            if (!el.is_number_integer())
                throw std::invalid_argument("family: elements must be integers");
            const std::int64_t v = el.get<std::int64_t>();
            if (v < 1 || v > g.size())
                throw std::domain_error("family: element " + std::to_string(v) +
                                        " outside [1, " + std::to_string(g.size()) + "]");
            const Mask bit = element(int(v));
            if (m & bit)
                throw std::invalid_argument("family: duplicate element " +
                                            std::to_string(v) + " in a set");
            m |= bit;
        }
        members.push_back(m);
    }
    std::vector<Mask> sorted(members);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("family: duplicate sets");
    return Family(g, std::move(members));
}

inline Family family_from_string(const std::string& text) {
    return family_from_json(Json::parse(text));
}

inline Family load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return family_from_json(Json::parse(in));
}

inline Json big_int_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

inline Json homology_report_to_json(const HomologyReport& h) {
    Json j;
    j["betti"] = h.betti;
    Json torsion = Json::array();
    for (const auto& degree : h.torsion) {
        Json t = Json::array();
        for (const BigInt& d : degree) t.push_back(big_int_to_json(d));
        torsion.push_back(t);
    }
    j["torsion"] = torsion;
    j["euler"] = h.euler_from_cubes;
    j["connected"] = h.connected;
    j["acyclic"] = h.acyclic;
    j["cube_counts"] = h.cube_counts;
    return j;
}

inline Json cube_to_json(const Cube& c) {
    Json j;
    j["lower"] = set_to_json(c.lower);
    j["upper"] = set_to_json(c.upper);
    return j;
}

inline Json check_report_to_json(const CheckReport& r) {
    Json j;
    j["check"] = r.check_name;
    j["n"] = r.n;
    j["tested"] = r.families_tested;
    Json failures = Json::array();
    for (const CheckFailure& f : r.failures) {
        Json e;
        e["family"] = family_to_json(f.family);
        e["detail"] = f.detail;
        failures.push_back(e);
    }
    j["failures"] = failures;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

/// Full single-family report: predicates, cube counts, maximal cubes,
/// homology, and (for simply rooted input) the per-member phi/roots table
/// plus the root-count Euler characteristic when the empty set is absent.
inline Json analysis_report(const Family& f) {
    Json j;
    j["family"] = family_to_json(f);
    const bool uc = is_union_closed(f);
    const bool sr = is_simply_rooted(f);
    const bool has_empty = f.contains(0);
    Json predicates;
    predicates["union_closed"] = uc;
    predicates["simply_rooted"] = sr;
    predicates["contains_empty"] = has_empty;
    j["predicates"] = predicates;
    j["max_cardinality"] = f.empty() ? Json(nullptr) : Json(max_cardinality(f));
    j["cube_counts"] = cubes(f).grade_sizes();
    Json maximal = Json::array();
    for (const Cube& c : maximal_cubes(f)) maximal.push_back(cube_to_json(c));
    j["maximal_cubes"] = maximal;
    j["homology"] = homology_report_to_json(homology_of(f));
    if (sr) {
        Json table = Json::array();
        for (Mask a : f.members()) {
            if (a == 0) continue;
            Json row;
            row["set"] = set_to_json(a);
            row["phi"] = set_to_json(phi(f, a));
            row["roots"] = set_to_json(roots(f, a));
            table.push_back(row);
        }
        j["phi_roots"] = table;
        if (!f.empty() && !has_empty) j["euler_without_empty"] = euler_without_empty(f);
    }
    return j;
}

}  // namespace cubefam

#endif  // CUBEFAM_JSON_IO_HPP
