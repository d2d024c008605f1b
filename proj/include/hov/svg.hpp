#pragma once

// Deterministic SVG rendering of planar order-k diagrams. All geometry is
// exact: cells are clipped to the bounding box by adding its four
// halfspaces, vertices are enumerated exactly, and rationals are rounded
// only at emission, to six decimal places.

#include "hov/polytope.hpp"
#include "hov/relations.hpp"
#include "hov/voronoi.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

struct BBox {
    Rat xmin, ymin, xmax, ymax;
};

namespace detail {

// Fixed-precision decimal emission: round(r * 10^prec) rendered exactly.
inline std::string fmt_decimal(const Rat& r, int prec = 6) {
    Int scale = 1;
    for (int i = 0; i < prec; ++i) scale *= 10;
    const Rat scaled = r * scale;
    // Round half away from zero.
    Int units;
    if (scaled >= 0) {
        const Rat t = scaled * 2 + 1;
        units = numerator(t) / (denominator(t) * 2);
    } else {
        const Rat t = -scaled * 2 + 1;
        units = -(numerator(t) / (denominator(t) * 2));
    }
    const bool neg = units < 0;
    if (neg) units = -units;
    const Int ip = units / scale;
    Int fp = units % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(prec) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.str();
    out += "." + frac;
    return out;
}

// Counterclockwise order around an interior reference point; exact
// half-plane-then-cross-product comparator.
inline void sort_ccw(std::vector<Point>& pts, const Point& ref) {
    const auto half = [&](const Point& p) {
        const Rat dx = p[0] - ref[0], dy = p[1] - ref[1];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rat ax = a[0] - ref[0], ay = a[1] - ref[1];
        const Rat bx = b[0] - ref[0], by = b[1] - ref[1];
        const Rat cross = ax * by - ay * bx;
        if (cross != 0) return cross > 0;
        return a < b;  // ties: lexicographic, keeps the sort total
    });
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Order-k Voronoi diagram of `sites`, clipped to `bbox`. n = 2 only.
// Byte-identical output for identical input.
inline std::string render_svg(const SiteSet& sites, std::size_t k, const BBox& bbox) {
    if (sites.ambient_dim != 2)
        throw std::invalid_argument("render_svg: only planar diagrams are supported");
    if (k < 1 || k > sites.sites.size())
        throw std::invalid_argument("render_svg: k out of range");
    static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                    "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
    constexpr int kPaletteSize = 12;
    const Rat view(800);
    const Rat sx = view / (bbox.xmax - bbox.xmin);
    const Rat sy = view / (bbox.ymax - bbox.ymin);
    const auto tx = [&](const Rat& x) { return detail::fmt_decimal((x - bbox.xmin) * sx); };
    const auto ty = [&](const Rat& y) { return detail::fmt_decimal(view - (y - bbox.ymin) * sy); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    std::vector<std::string> ids;
    for (const auto& s : sites.sites) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());

    std::ostringstream dots;  // cells first, points on top
    for (const auto& subset : detail::k_subsets(ids, k)) {
        const std::set<std::string> s_ids(subset.begin(), subset.end());
        const CellSpec spec(sites, s_ids);
        HPolyhedron H = cell_halfspaces(spec);
        H.inequalities.push_back({{Rat(1), Rat(0)}, bbox.xmax, Rel::LessEq});
        H.inequalities.push_back({{Rat(-1), Rat(0)}, -bbox.xmin, Rel::LessEq});
        H.inequalities.push_back({{Rat(0), Rat(1)}, bbox.ymax, Rel::LessEq});
        H.inequalities.push_back({{Rat(0), Rat(-1)}, -bbox.ymin, Rel::LessEq});
        auto verts = vertices_h(H);
        if (verts.empty()) continue;

        std::string key;
        for (const auto& id : subset) key += id + ",";
        const char* fill = palette[detail::fnv1a(key) % kPaletteSize];

        if (verts.size() == 1) {
            dots << "<circle cx=\"" << tx(verts[0][0]) << "\" cy=\"" << ty(verts[0][1])
                 << "\" r=\"4\" fill=\"" << fill << "\" stroke=\"#333333\"/>\n";
            continue;
        }
        Point centroid(2, Rat(0));
        for (const auto& v : verts) centroid = linalg::add(centroid, v);
        centroid = linalg::scale(centroid, Rat(1) / Rat(static_cast<int>(verts.size())));
        detail::sort_ccw(verts, centroid);
        svg << (verts.size() == 2 ? "<polyline" : "<polygon") << " points=\"";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) svg << " ";
            svg << tx(verts[i][0]) << "," << ty(verts[i][1]);
        }
        svg << "\" fill=\"" << (verts.size() == 2 ? "none" : fill)
            << "\" fill-opacity=\"0.55\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    svg << dots.str();

    for (const auto& s : sites.sites) {
        svg << "<circle cx=\"" << tx(s.point[0]) << "\" cy=\"" << ty(s.point[1])
            << "\" r=\"3\" fill=\"#000000\"/>\n"
            << "<text x=\"" << tx(s.point[0]) << "\" y=\"" << ty(s.point[1])
            << "\" dx=\"5\" dy=\"-5\" font-size=\"12\" font-family=\"monospace\">" << s.id
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hov
