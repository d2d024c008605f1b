#pragma once

// The dimension pipeline: a certified ball from a relative-interior
// witness, the boundary partition, the intersection C of the two boundary
// hulls, the minimal faces containing C, and the predicted dimension
//   n                      if C is empty,
//   n - dim co{F_S, F_T}   otherwise,
// cross-checked against the LP dimension of the cell's H-representation.

#include "hov/polytope.hpp"
#include "hov/voronoi.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace hov {

struct DimensionReport {
    bool cell_empty = false;
    std::optional<BallCertificate> ball;
    bool C_empty = true;
    std::optional<VPolytope> F_S;
    std::optional<VPolytope> F_T;
    int dim_co_faces = -1;  // -1 when C is empty
    int predicted_dim = -1;
    int lp_dim = -1;
    bool agree = false;
};

// The ball certifying cell nonemptiness, centred at a canonical
// relative-interior witness of the cell. nullopt iff the cell is empty.
inline std::optional<BallCertificate> certified_ball(const CellSpec& spec) {
    const auto H = cell_halfspaces(spec);
    const auto x = relint_point_h(H);
    if (!x) return std::nullopt;
    auto cert = certificate_at(*x, spec);
    if (!cert) throw std::logic_error("certified_ball: relint witness failed membership");
    return cert;
}

// Sites on the certificate ball's boundary, split into the S side and the
// (T\S) side. The S side is never empty (the radius is attained).
inline std::pair<VPolytope, std::optional<VPolytope>> boundary_partition(
    const BallCertificate& cert, const CellSpec& spec) {
    validate_certificate(cert, spec);
    std::vector<Point> s_side, t_side;
    for (const auto& s : spec.s_sites())
        if (ball_position(cert.ball, s.point) == BallPosition::Boundary)
            s_side.push_back(s.point);
    for (const auto& t : spec.t_minus_s_sites())
        if (ball_position(cert.ball, t.point) == BallPosition::Boundary)
            t_side.push_back(t.point);
    std::optional<VPolytope> t_poly;
    if (!t_side.empty()) t_poly = VPolytope(spec.ambient_dim(), std::move(t_side));
    return {VPolytope(spec.ambient_dim(), std::move(s_side)), std::move(t_poly)};
}

inline DimensionReport predicted_dimension(const CellSpec& spec) {
    const int n = static_cast<int>(spec.ambient_dim());
    DimensionReport rep;
    auto cert = certified_ball(spec);
    if (!cert) {
        rep.cell_empty = true;
        return rep;
    }
    rep.ball = *cert;
    rep.lp_dim = dim_h(cell_halfspaces(spec));

    auto [s_hull, t_hull] = boundary_partition(*cert, spec);
    if (!t_hull) {
        // conv of the empty set is empty, so C is empty and the cell is
        // full-dimensional.
        rep.predicted_dim = n;
    } else {
        auto [C, c] = intersect_v(s_hull, *t_hull);
        (void)C;
        if (!c) {
            rep.predicted_dim = n;
        } else {
            rep.C_empty = false;
            rep.F_S = minimal_face(s_hull, *c);
            rep.F_T = minimal_face(*t_hull, *c);
            std::vector<Point> joint = rep.F_S->vertices;
            joint.insert(joint.end(), rep.F_T->vertices.begin(), rep.F_T->vertices.end());
            rep.dim_co_faces = affine_rank(joint);
            rep.predicted_dim = n - rep.dim_co_faces;
        }
    }
    rep.agree = rep.predicted_dim == rep.lp_dim;
    return rep;
}

// A nonempty cell can never have dimension n-1.
inline bool assert_no_codim_one(const CellSpec& spec) {
    const int n = static_cast<int>(spec.ambient_dim());
    return dim_h(cell_halfspaces(spec)) != n - 1;
}

}  // namespace hov
