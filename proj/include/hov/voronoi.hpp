#pragma once

// Higher-order Voronoi cells V_T(S) on a finite site set: halfspace
// construction, distance-definition membership, ball certificates, and the
// farthest-cell test with its constructive exposed ball.

#include "hov/geometry.hpp"
#include "hov/lp.hpp"
#include "hov/polytope.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

// A cell V_T(S): `sites` holds T (with S as a subset of its ids). The
// order of the cell is |S|. T\S is computed setwise.
struct CellSpec {
    SiteSet sites;
    std::set<std::string> s_ids;

    CellSpec() = default;
    CellSpec(SiteSet all, std::set<std::string> s) : sites(std::move(all)), s_ids(std::move(s)) {
        if (s_ids.empty()) throw std::invalid_argument("CellSpec: S must be nonempty");
        for (const auto& id : s_ids)
            if (!sites.find(id))
                throw std::invalid_argument("CellSpec: unknown site id '" + id + "' in S");
    }

    std::size_t ambient_dim() const { return sites.ambient_dim; }

    std::vector<Site> s_sites() const {
        std::vector<Site> out;
        for (const auto& s : sites.sites)
            if (s_ids.count(s.id)) out.push_back(s);
        return out;
    }

    std::vector<Site> t_minus_s_sites() const {
        std::vector<Site> out;
        for (const auto& s : sites.sites)
            if (!s_ids.count(s.id)) out.push_back(s);
        return out;
    }
};

// One halfspace per (s, t) in S x (T\S):  <t - s, x> <= (|t|^2 - |s|^2)/2.
// Duplicate halfspaces from distinct pairs are retained, with provenance;
// dedup_halfspaces below gives the reduced view.
inline HPolyhedron cell_halfspaces(const CellSpec& spec) {
    check_ambient_dim(spec.ambient_dim());
    HPolyhedron out;
    out.ambient_dim = spec.ambient_dim();
    for (const auto& s : spec.s_sites()) {
        const Rat s2 = linalg::dot(s.point, s.point);
        for (const auto& t : spec.t_minus_s_sites()) {
            const Rat t2 = linalg::dot(t.point, t.point);
            out.provenance[out.inequalities.size()] = {s.id, t.id};
            out.inequalities.push_back(
                {linalg::sub(t.point, s.point), (t2 - s2) / 2, Rel::LessEq});
        }
    }
    return out;
}

// Dedup view plus removal of inequalities implied by the remaining ones
// (one LP each). Provenance is dropped; use the raw list when pair
// evidence matters.
inline HPolyhedron irredundant_halfspaces(const HPolyhedron& P);

inline HPolyhedron dedup_halfspaces(const HPolyhedron& P) {
    HPolyhedron out;
    out.ambient_dim = P.ambient_dim;
    out.equalities = P.equalities;
    std::set<std::pair<Vec, Rat>> seen;
    for (const auto& c : P.inequalities) {
        Vec n = c.normal;
        Rat b = c.rhs;
        detail::canonicalize_halfspace(n, b);
        if (seen.insert({n, b}).second) out.inequalities.push_back(c);
    }
    return out;
}

inline HPolyhedron irredundant_halfspaces(const HPolyhedron& P) {
    HPolyhedron out = dedup_halfspaces(P);
    for (std::size_t i = out.inequalities.size(); i-- > 0;) {
        std::vector<LinearConstraint> others = out.equalities;
        for (std::size_t j = 0; j < out.inequalities.size(); ++j)
            if (j != i) others.push_back(out.inequalities[j]);
        auto r = solve(others, out.inequalities[i].normal, Sense::Max);
        if (r.status == LPStatus::Optimal && *r.value <= out.inequalities[i].rhs)
            out.inequalities.erase(out.inequalities.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return out;
}

// Eq. membership: max over S of sq_dist <= min over T\S; vacuously true
// when T\S is empty.
inline bool member(const Point& x, const CellSpec& spec) {
    if (x.size() != spec.ambient_dim())
        throw std::invalid_argument("member: dimension mismatch");
    std::optional<Rat> worst_s;
    for (const auto& s : spec.s_sites()) {
        const Rat d = sq_dist(x, s.point);
        if (!worst_s || d > *worst_s) worst_s = d;
    }
    for (const auto& t : spec.t_minus_s_sites())
        if (sq_dist(x, t.point) < *worst_s) return false;
    return true;
}

// A ball containing every S-site whose interior avoids every (T\S)-site,
// together with the exact boundary classification.
struct BallCertificate {
    Ball ball;
    std::vector<std::string> on_boundary_S;
    std::vector<std::string> on_boundary_T;
};

// Validates the certificate conditions for `spec`; throws when violated.
inline void validate_certificate(const BallCertificate& cert, const CellSpec& spec) {
    for (const auto& s : spec.s_sites()) {
        const auto pos = ball_position(cert.ball, s.point);
        if (pos == BallPosition::Exterior)
            throw std::logic_error("certificate: S-site '" + s.id + "' outside the ball");
        const bool listed = std::find(cert.on_boundary_S.begin(), cert.on_boundary_S.end(),
                                      s.id) != cert.on_boundary_S.end();
        if (listed != (pos == BallPosition::Boundary))
            throw std::logic_error("certificate: boundary list mismatch for '" + s.id + "'");
    }
    for (const auto& t : spec.t_minus_s_sites()) {
        const auto pos = ball_position(cert.ball, t.point);
        if (pos == BallPosition::Interior)
            throw std::logic_error("certificate: (T\\S)-site '" + t.id +
                                   "' inside the ball interior");
        const bool listed = std::find(cert.on_boundary_T.begin(), cert.on_boundary_T.end(),
                                      t.id) != cert.on_boundary_T.end();
        if (listed != (pos == BallPosition::Boundary))
            throw std::logic_error("certificate: boundary list mismatch for '" + t.id + "'");
    }
}

// For x in the cell, the ball centred at x with squared radius
// max_{s in S} sq_dist(x, s) certifies membership. nullopt when x is not a
// member.
inline std::optional<BallCertificate> certificate_at(const Point& x, const CellSpec& spec) {
    if (!member(x, spec)) return std::nullopt;
    Rat sq_r(0);
    for (const auto& s : spec.s_sites()) sq_r = std::max(sq_r, sq_dist(x, s.point));
    BallCertificate cert{Ball(x, sq_r), {}, {}};
    for (const auto& s : spec.s_sites())
        if (ball_position(cert.ball, s.point) == BallPosition::Boundary)
            cert.on_boundary_S.push_back(s.id);
    for (const auto& t : spec.t_minus_s_sites())
        if (ball_position(cert.ball, t.point) == BallPosition::Boundary)
            cert.on_boundary_T.push_back(t.id);
    validate_certificate(cert, spec);
    return cert;
}

struct RadiusRange {
    Rat sq_lo;
    std::optional<Rat> sq_hi;  // nullopt = +infinity (T\S empty)
};

// All squared radii for which the ball centred at x certifies membership;
// nullopt when x is not in the cell.
inline std::optional<RadiusRange> admissible_radius_range(const Point& x, const CellSpec& spec) {
    if (x.size() != spec.ambient_dim())
        throw std::invalid_argument("admissible_radius_range: dimension mismatch");
    Rat lo(0);
    for (const auto& s : spec.s_sites()) lo = std::max(lo, sq_dist(x, s.point));
    std::optional<Rat> hi;
    for (const auto& t : spec.t_minus_s_sites()) {
        const Rat d = sq_dist(x, t.point);
        if (!hi || d < *hi) hi = d;
    }
    if (hi && lo > *hi) return std::nullopt;
    return RadiusRange{lo, hi};
}

struct FarthestResult {
    bool nonempty = false;
    std::optional<Point> witness;
    std::optional<Ball> exposed_ball;  // centre 2x - s, sq_radius 4 sq_dist(x, s)
};

// Nonemptiness of the farthest cell of site `s_id` in T, i.e. the cell of
// S = T\{s} with the single remaining site s on the far side. On success
// the constructive exposed ball is returned and validated exactly:
// T\{s} strictly inside, s on the boundary.
inline FarthestResult farthest_nonempty(const SiteSet& T, const std::string& s_id) {
    if (T.sites.size() < 2)
        throw std::invalid_argument("farthest_nonempty: need at least two sites");
    const Site* s = T.find(s_id);
    if (!s) throw std::invalid_argument("farthest_nonempty: unknown site id '" + s_id + "'");
    std::set<std::string> others;
    for (const auto& site : T.sites)
        if (site.id != s_id) others.insert(site.id);
    const CellSpec spec(T, others);
    const auto H = cell_halfspaces(spec);
    const auto x = relint_point_h(H);
    if (!x) return {};

    Point centre = linalg::sub(linalg::scale(*x, Rat(2)), s->point);
    const Rat sq_r = 4 * sq_dist(*x, s->point);
    Ball exposed(centre, sq_r);
    if (sq_dist(s->point, exposed.center) != sq_r)
        throw std::logic_error("farthest_nonempty: exposed site not on the ball boundary");
    for (const auto& site : T.sites)
        if (site.id != s_id && sq_dist(site.point, exposed.center) >= sq_r)
            throw std::logic_error("farthest_nonempty: site '" + site.id +
                                   "' not strictly inside the exposed ball");
    return {true, *x, std::move(exposed)};
}

}  // namespace hov
