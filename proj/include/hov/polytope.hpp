#pragma once

// H- and V-representations of polyhedra and the exact operations on them:
// brute-force facet enumeration, dimension via implicit equalities,
// inclusion/equality by per-constraint LPs, minimal faces, vertex
// enumeration, and polyhedral-cone lineality/polar dimensions.
//
// Everything here is desk scale by contract (ambient dimension <= 4 by
// default, a couple dozen vertices); correctness under degeneracy is the
// point, not asymptotics.

#include "hov/geometry.hpp"
#include "hov/lp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hov {

// Global cap on the ambient dimension; operations refuse larger inputs.
inline std::size_t& max_ambient_dim() {
    static std::size_t cap = 4;
    return cap;
}

inline void check_ambient_dim(std::size_t n) {
    if (n > max_ambient_dim())
        throw std::invalid_argument("ambient dimension " + std::to_string(n) +
                                    " exceeds the configured cap of " +
                                    std::to_string(max_ambient_dim()));
}

struct HPolyhedron {
    std::size_t ambient_dim = 0;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;
    // For Voronoi cells: inequality index -> generating (s_id, t_id) pair.
    std::map<std::size_t, std::pair<std::string, std::string>> provenance;

    std::vector<LinearConstraint> all_constraints() const {
        std::vector<LinearConstraint> out = equalities;
        out.insert(out.end(), inequalities.begin(), inequalities.end());
        return out;
    }

    bool contains(const Point& x) const {
        for (const auto& c : equalities)
            if (linalg::dot(c.normal, x) != c.rhs) return false;
        for (const auto& c : inequalities)
            if (linalg::dot(c.normal, x) > c.rhs) return false;
        return true;
    }
};

namespace detail {

// Is p a convex combination of the given points?
inline bool in_convex_hull(const std::vector<Point>& pts, const Point& p) {
    if (pts.empty()) return false;
    const std::size_t n = p.size();
    const std::size_t m = pts.size();
    std::vector<LinearConstraint> cs;
    for (std::size_t d = 0; d < n; ++d) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = pts[j][d];
        cs.push_back({std::move(row), p[d], Rel::Eq});
    }
    cs.push_back({Vec(m, Rat(1)), Rat(1), Rel::Eq});
    for (std::size_t j = 0; j < m; ++j) {
        Vec row(m, Rat(0));
        row[j] = -1;
        cs.push_back({std::move(row), Rat(0), Rel::LessEq});
    }
    return feasible_point(cs, m).has_value();
}

// Positive rescaling to a canonical representative, for halfspace dedup.
inline void canonicalize_halfspace(Vec& normal, Rat& rhs) {
    for (const auto& x : normal) {
        if (x != 0) {
            const Rat f = x > 0 ? Rat(1) / x : Rat(-1) / x;
            for (auto& y : normal) y *= f;
            rhs *= f;
            return;
        }
    }
}

}  // namespace detail

// A polytope as the convex hull of its vertices. Construction strips every
// point expressible as a convex combination of the others, so the stored
// list is exactly the vertex set.
struct VPolytope {
    std::size_t ambient_dim = 0;
    std::vector<Point> vertices;

    VPolytope() = default;
    VPolytope(std::size_t dim, std::vector<Point> points) : ambient_dim(dim) {
        check_ambient_dim(dim);
        for (const auto& p : points) {
            if (p.size() != dim) throw std::invalid_argument("VPolytope: dimension mismatch");
            if (std::find(vertices.begin(), vertices.end(), p) == vertices.end())
                vertices.push_back(p);
        }
        for (std::size_t i = vertices.size(); i-- > 0;) {
            std::vector<Point> others;
            for (std::size_t j = 0; j < vertices.size(); ++j)
                if (j != i) others.push_back(vertices[j]);
            if (detail::in_convex_hull(others, vertices[i]))
                vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    bool empty() const { return vertices.empty(); }
};

// Facet enumeration by brute force: the affine hull comes from the
// nullspace of the vertex differences; every affinely independent d-subset
// of vertices spans a candidate hyperplane, kept iff all vertices lie
// weakly on one side. Duplicates collapse through a canonical form.
inline HPolyhedron hull_facets(const VPolytope& P) {
    if (P.empty()) throw std::invalid_argument("hull_facets: empty vertex list");
    const std::size_t n = P.ambient_dim;
    const auto& verts = P.vertices;
    HPolyhedron out;
    out.ambient_dim = n;

    Matrix diffs;
    for (std::size_t i = 1; i < verts.size(); ++i)
        diffs.push_back(linalg::sub(verts[i], verts[0]));
    const auto eq_normals = linalg::nullspace(diffs, n);
    for (const auto& a : eq_normals)
        out.equalities.push_back({a, linalg::dot(a, verts[0]), Rel::Eq});
    const std::size_t r = n - eq_normals.size();  // affine dimension
    if (r == 0) return out;

    // Basis of the affine hull's direction space.
    Matrix eqmat(eq_normals.begin(), eq_normals.end());
    const auto dir_basis = linalg::nullspace(eqmat, n);

    std::set<std::pair<Vec, Rat>> seen;
    std::vector<std::size_t> idx(r);
    // Enumerate r-subsets of vertices.
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    const std::size_t m = verts.size();
    if (m < r) return out;
    for (;;) {
        // Normal v = sum_k lambda_k dir_basis[k] orthogonal to the subset.
        Matrix eqs;
        for (std::size_t j = 1; j < r; ++j) {
            const Vec d = linalg::sub(verts[comb[j]], verts[comb[0]]);
            Vec row(dir_basis.size());
            for (std::size_t k = 0; k < dir_basis.size(); ++k)
                row[k] = linalg::dot(dir_basis[k], d);
            eqs.push_back(std::move(row));
        }
        const auto lam = linalg::nullspace(eqs, dir_basis.size());
        if (lam.size() == 1) {
            Vec v(n, Rat(0));
            for (std::size_t k = 0; k < dir_basis.size(); ++k)
                v = linalg::add(v, linalg::scale(dir_basis[k], lam[0][k]));
            if (!linalg::is_zero(v)) {
                Rat c = linalg::dot(v, verts[comb[0]]);
                bool any_below = false, any_above = false;
                for (const auto& p : verts) {
                    const Rat d = linalg::dot(v, p);
                    if (d < c) any_below = true;
                    if (d > c) any_above = true;
                }
                if (!(any_below && any_above)) {
                    if (any_above) {
                        v = linalg::scale(v, Rat(-1));
                        c = -c;
                    }
                    detail::canonicalize_halfspace(v, c);
                    if (seen.insert({v, c}).second)
                        out.inequalities.push_back({v, c, Rel::LessEq});
                }
            }
        }
        // Next combination.
        std::size_t k = r;
        while (k-- > 0) {
            if (comb[k] + 1 <= m - (r - k)) {
                ++comb[k];
                for (std::size_t j = k + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (k == 0) return out;
        }
    }
}

// Dimension of an H-polyhedron: -1 if empty, otherwise ambient dimension
// minus the rank of the explicit plus implicit equality normals.
inline int dim_h(const HPolyhedron& P) {
    check_ambient_dim(P.ambient_dim);
    const auto cs = P.all_constraints();
    const auto imp = implicit_equalities(cs, P.ambient_dim);
    if (!imp) return -1;
    Matrix normals;
    for (const auto& c : P.equalities) normals.push_back(c.normal);
    for (auto i : *imp) normals.push_back(cs[i].normal);
    return static_cast<int>(P.ambient_dim) - static_cast<int>(linalg::rank(std::move(normals)));
}

// True iff every constraint of Q is valid over P, i.e. P is contained in Q.
// The optional witness receives a point of P violating Q when the inclusion
// fails.
inline bool includes_h(const HPolyhedron& P, const HPolyhedron& Q, Point* witness = nullptr) {
    if (P.ambient_dim != Q.ambient_dim)
        throw std::invalid_argument("includes_h: ambient dimension mismatch");
    const auto cs = P.all_constraints();
    const auto check_upper = [&](const Vec& normal, const Rat& rhs) {
        auto out = solve(cs, normal, Sense::Max);
        if (out.status == LPStatus::Infeasible) return true;  // P empty
        if (out.status == LPStatus::Optimal && *out.value <= rhs) return true;
        if (witness && out.point) *witness = *out.point;
        return false;
    };
    for (const auto& c : Q.inequalities)
        if (!check_upper(c.normal, c.rhs)) return false;
    for (const auto& c : Q.equalities) {
        if (!check_upper(c.normal, c.rhs)) return false;
        if (!check_upper(linalg::scale(c.normal, Rat(-1)), -c.rhs)) return false;
    }
    return true;
}

inline bool equal_h(const HPolyhedron& P, const HPolyhedron& Q) {
    return includes_h(P, Q) && includes_h(Q, P);
}

inline std::optional<Point> relint_point_h(const HPolyhedron& P) {
    return relint_point(P.all_constraints(), P.ambient_dim);
}

// Intersection of two V-polytopes: the concatenated facet systems plus a
// relative-interior point of the intersection (nullopt when disjoint).
inline std::pair<HPolyhedron, std::optional<Point>> intersect_v(const VPolytope& A,
                                                                const VPolytope& B) {
    if (A.ambient_dim != B.ambient_dim)
        throw std::invalid_argument("intersect_v: ambient dimension mismatch");
    const HPolyhedron ha = hull_facets(A);
    const HPolyhedron hb = hull_facets(B);
    HPolyhedron both;
    both.ambient_dim = A.ambient_dim;
    both.equalities = ha.equalities;
    both.equalities.insert(both.equalities.end(), hb.equalities.begin(), hb.equalities.end());
    both.inequalities = ha.inequalities;
    both.inequalities.insert(both.inequalities.end(), hb.inequalities.begin(),
                             hb.inequalities.end());
    auto relint = relint_point_h(both);
    return {std::move(both), std::move(relint)};
}

// The face of P whose defining inequalities are those tight at c; when c is
// a relative-interior point of a convex subset C of P, this is the minimal
// face of P containing C.
inline VPolytope minimal_face(const VPolytope& P, const Point& c) {
    const HPolyhedron h = hull_facets(P);
    if (!h.contains(c)) throw std::invalid_argument("minimal_face: point outside hull");
    std::vector<const LinearConstraint*> tight;
    for (const auto& ineq : h.inequalities)
        if (linalg::dot(ineq.normal, c) == ineq.rhs) tight.push_back(&ineq);
    std::vector<Point> face;
    for (const auto& v : P.vertices) {
        bool on_all = true;
        for (const auto* t : tight)
            if (linalg::dot(t->normal, v) != t->rhs) {
                on_all = false;
                break;
            }
        if (on_all) face.push_back(v);
    }
    return VPolytope(P.ambient_dim, std::move(face));
}

// Vertex enumeration for an H-polyhedron: every subset of inequalities
// that, together with the equalities, pins down a unique point is solved
// exactly and kept if feasible. Non-pointed polyhedra simply yield no
// vertices.
inline std::vector<Point> vertices_h(const HPolyhedron& P) {
    check_ambient_dim(P.ambient_dim);
    const std::size_t n = P.ambient_dim;
    Matrix eqmat;
    Vec eqrhs;
    for (const auto& c : P.equalities) {
        eqmat.push_back(c.normal);
        eqrhs.push_back(c.rhs);
    }
    const std::size_t rank_eq = linalg::rank(eqmat);
    if (rank_eq > n) return {};
    const std::size_t k = n - rank_eq;
    const std::size_t m = P.inequalities.size();
    std::vector<Point> out;
    std::set<Vec> seen;

    const auto try_subset = [&](const std::vector<std::size_t>& subset) {
        Matrix a = eqmat;
        Vec b = eqrhs;
        for (auto i : subset) {
            a.push_back(P.inequalities[i].normal);
            b.push_back(P.inequalities[i].rhs);
        }
        auto x = linalg::solve_unique(std::move(a), b);
        if (!x || !P.contains(*x)) return;
        if (seen.insert(*x).second) out.push_back(*x);
    };

    if (k == 0) {
        try_subset({});
        return out;
    }
    if (m < k) return {};
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        try_subset(comb);
        std::size_t j = k;
        while (j-- > 0) {
            if (comb[j] + 1 <= m - (k - j)) {
                ++comb[j];
                for (std::size_t t = j + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
                break;
            }
            if (j == 0) return out;
        }
    }
}

// --- Polyhedral cones -------------------------------------------------

struct PolyCone {
    std::size_t ambient_dim = 0;
    std::vector<Vec> generators;  // nonzero direction vectors

    PolyCone(std::size_t dim, std::vector<Vec> gens)
        : ambient_dim(dim), generators(std::move(gens)) {
        check_ambient_dim(dim);
        for (const auto& g : generators) {
            if (g.size() != dim) throw std::invalid_argument("PolyCone: dimension mismatch");
            if (linalg::is_zero(g)) throw std::invalid_argument("PolyCone: zero generator");
        }
    }
};

// Membership of v in cone(generators), by LP feasibility in the
// multipliers.
inline bool in_cone(const PolyCone& K, const Vec& v) {
    const std::size_t m = K.generators.size();
    if (m == 0) return linalg::is_zero(v);
    std::vector<LinearConstraint> cs;
    for (std::size_t d = 0; d < K.ambient_dim; ++d) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = K.generators[j][d];
        cs.push_back({std::move(row), v[d], Rel::Eq});
    }
    for (std::size_t j = 0; j < m; ++j) {
        Vec row(m, Rat(0));
        row[j] = -1;
        cs.push_back({std::move(row), Rat(0), Rel::LessEq});
    }
    return feasible_point(cs, m).has_value();
}

// dim(K cap -K): the lineality space is spanned by exactly those
// generators whose negation stays in the cone.
inline int lineality_dim(const PolyCone& K) {
    Matrix span;
    for (const auto& g : K.generators)
        if (in_cone(K, linalg::scale(g, Rat(-1)))) span.push_back(g);
    return static_cast<int>(linalg::rank(std::move(span)));
}

// Dimension of the negative polar {y : <g,y> <= 0 for all generators g},
// computed independently through the H-representation route.
inline int polar_dim(const PolyCone& K) {
    HPolyhedron polar;
    polar.ambient_dim = K.ambient_dim;
    for (const auto& g : K.generators) polar.inequalities.push_back({g, Rat(0), Rel::LessEq});
    return dim_h(polar);
}

}  // namespace hov
