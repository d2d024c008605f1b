#pragma once

#include "hov/geometry.hpp"
#include "hov/lp.hpp"
#include "hov/voronoi.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hovtest {

inline hov::Point pt(std::initializer_list<const char*> coords) {
    hov::Point p;
    for (const char* c : coords) p.push_back(hov::parse_scalar(c));
    return p;
}

inline hov::Rat q(const char* s) { return hov::parse_scalar(s); }

inline hov::LinearConstraint leq(std::initializer_list<const char*> normal, const char* rhs) {
    return {pt(normal), q(rhs), hov::Rel::LessEq};
}

inline hov::LinearConstraint eq(std::initializer_list<const char*> normal, const char* rhs) {
    return {pt(normal), q(rhs), hov::Rel::Eq};
}

// The dimension-1-in-R^3 configuration used throughout: S three points of
// the unit sphere, T\S the other three, cell = nonnegative z-axis.
inline hov::CellSpec axis_cell_spec() {
    hov::SiteSet sites(3, {{"s1", pt({"1", "0", "0"})},
                           {"s2", pt({"-1", "0", "0"})},
                           {"s3", pt({"0", "0", "1"})},
                           {"t1", pt({"0", "1", "0"})},
                           {"t2", pt({"0", "-1", "0"})},
                           {"t3", pt({"0", "0", "-1"})}});
    return hov::CellSpec(sites, {"s1", "s2", "s3"});
}

// Quadrant cell: one site of S at (1,1), three far corners; cell is the
// closed first quadrant.
inline hov::CellSpec quadrant_cell_spec() {
    hov::SiteSet sites(2, {{"s", pt({"1", "1"})},
                           {"a", pt({"-1", "1"})},
                           {"b", pt({"-1", "-1"})},
                           {"c", pt({"1", "-1"})}});
    return hov::CellSpec(sites, {"s"});
}

// Cocircular square corners, S = one diagonal; the cell is the origin.
inline hov::CellSpec square_diagonal_spec() {
    hov::SiteSet sites(2, {{"s1", pt({"1", "1"})},
                           {"s2", pt({"-1", "-1"})},
                           {"t1", pt({"-1", "1"})},
                           {"t2", pt({"1", "-1"})}});
    return hov::CellSpec(sites, {"s1", "s2"});
}

}  // namespace hovtest
