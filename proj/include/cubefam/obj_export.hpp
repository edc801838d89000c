#ifndef CUBEFAM_OBJ_EXPORT_HPP
#define CUBEFAM_OBJ_EXPORT_HPP

#include <stdexcept>
#include <string>

#include "cubes.hpp"

namespace cubefam {

/// Wavefront OBJ text for the cubical set of a family over [n], n <= 3:
/// one vertex per 0-cube (coordinates 0.0/1.0, padded to three axes), one
/// line element per 1-cube, one quad per 2-cube, and the six quad faces of
/// each 3-cube. Everything follows the complex's basis order, so the output
/// is byte-identical across runs.
inline std::string export_obj(const Family& f) {
    const int n = f.n();
    if (n > 3) throw std::domain_error("export_obj: only supported for n <= 3");
    const CubicalComplex cx = cubes(f);
    const auto& verts = cx.grade(0);

    auto vertex_index = [&](Mask m) {
        const Cube v(m, m);
        const auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return 1 + int(it - verts.begin());  // OBJ indices are 1-based
    };
    std::string out;
    for (const Cube& v : verts) {
        out += "v";
        for (int i = 0; i < 3; ++i)
            out += (i < n && (v.lower >> i & 1)) ? " 1.0" : " 0.0";
        out += "\n";
    }
    if (n >= 1)
        for (const Cube& e : cx.grade(1))
            out += "l " + std::to_string(vertex_index(e.lower)) + " " +
                   std::to_string(vertex_index(e.upper)) + "\n";

    auto quad = [&](const Cube& c) {
        const Mask d1 = (c.upper & ~c.lower) & -(c.upper & ~c.lower);
        const Mask d2 = (c.upper & ~c.lower) ^ d1;
        out += "f " + std::to_string(vertex_index(c.lower)) + " " +
               std::to_string(vertex_index(c.lower | d1)) + " " +
               std::to_string(vertex_index(c.lower | d1 | d2)) + " " +
               std::to_string(vertex_index(c.lower | d2)) + "\n";
    };
    if (n >= 2)
        for (const Cube& c : cx.grade(2)) quad(c);
    if (n == 3)
        for (const Cube& c : cx.grade(3))
            for (Mask bits = c.upper & ~c.lower; bits; bits &= bits - 1) {
                const Mask i = bits & -bits;
                quad(Cube(c.lower, c.upper & ~i));
                quad(Cube(c.lower | i, c.upper));
            }
    return out;
}

}  // namespace cubefam

#endif  // CUBEFAM_OBJ_EXPORT_HPP
