#pragma once

// Executable verifiers for the order-relations results: the cover
// decomposition V_T(S) = intersection of V_{T\S}(U), the order-k relation
// (reduced-sites equality plus the full-sites inclusion), and the
// descending inclusion chain between unions of lower-order cells, with its
// constructive drop-the-farthest-site step.

#include "hov/rng.hpp"
#include "hov/voronoi.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

struct SubsetFamily {
    std::set<std::string> base;
    std::vector<std::set<std::string>> members;
};

struct VerifyResult {
    bool holds = true;
    std::optional<Point> witness;  // a separating point when violated
    std::string detail;
};

namespace detail {

// All k-subsets of `ids` (assumed sorted), lexicographic.
inline std::vector<std::vector<std::string>> k_subsets(const std::vector<std::string>& ids,
                                                       std::size_t k) {
    std::vector<std::vector<std::string>> out;
    if (k > ids.size()) return out;
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        std::vector<std::string> subset;
        for (auto i : comb) subset.push_back(ids[i]);
        out.push_back(std::move(subset));
        std::size_t j = k;
        bool done = true;
        while (j-- > 0) {
            if (comb[j] + 1 <= ids.size() - (k - j)) {
                ++comb[j];
                for (std::size_t t = j + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
                done = false;
                break;
            }
        }
        if (done || k == 0) return out;
    }
}

inline std::vector<std::string> sorted_s_ids(const CellSpec& spec) {
    return {spec.s_ids.begin(), spec.s_ids.end()};  // std::set is ordered
}

// Spec for V_{T\S}(U): sites restricted to U together with T\S.
inline CellSpec reduced_spec(const CellSpec& spec, const std::set<std::string>& u) {
    std::vector<Site> kept;
    for (const auto& site : spec.sites.sites)
        if (!spec.s_ids.count(site.id) || u.count(site.id)) kept.push_back(site);
    return CellSpec(SiteSet(spec.ambient_dim(), std::move(kept)), u);
}

// Spec for V_T(U): same full site set, smaller S.
inline CellSpec subset_spec(const CellSpec& spec, const std::set<std::string>& u) {
    return CellSpec(spec.sites, u);
}

inline HPolyhedron concat_h(const std::vector<HPolyhedron>& parts, std::size_t n) {
    HPolyhedron out;
    out.ambient_dim = n;
    for (const auto& p : parts) {
        out.equalities.insert(out.equalities.end(), p.equalities.begin(), p.equalities.end());
        out.inequalities.insert(out.inequalities.end(), p.inequalities.begin(),
                                p.inequalities.end());
    }
    return out;
}

inline VerifyResult check_equal(const HPolyhedron& left, const HPolyhedron& right,
                                const std::string& what) {
    Point w;
    if (!includes_h(left, right, &w))
        return {false, w, what + ": left cell not contained in right"};
    if (!includes_h(right, left, &w))
        return {false, w, what + ": right cell not contained in left"};
    return {};
}

}  // namespace detail

// V_T(S) equals the intersection of V_{T\S}(U) over any family of
// subsets U covering S.
inline VerifyResult verify_cover_decomposition(const CellSpec& spec, const SubsetFamily& fam) {
    std::set<std::string> covered;
    for (const auto& u : fam.members) covered.insert(u.begin(), u.end());
    if (covered != spec.s_ids || fam.base != spec.s_ids)
        throw std::invalid_argument("verify_cover_decomposition: family does not cover S");

    const auto left = cell_halfspaces(spec);
    std::vector<HPolyhedron> parts;
    for (const auto& u : fam.members)
        parts.push_back(cell_halfspaces(detail::reduced_spec(spec, u)));
    return detail::check_equal(left, detail::concat_h(parts, spec.ambient_dim()),
                               "cover decomposition");
}

// Order-k relation:
//   V_T(S)  = intersection over k-subsets S' of V_{T\S}(S')   (exact equality)
//   V_T(S) >= intersection over k-subsets S' of V_T(S')       (inclusion only)
// The full-sites intersection is genuinely smaller in general: for the
// nonnegative-z-axis configuration, (0,0,1) is in the order-3 cell but not
// in V_T({(1,0,0)}) because it is strictly closer to (0,0,1) in T.
inline VerifyResult verify_order_k(const CellSpec& spec, std::size_t k) {
    if (k < 1 || k > spec.s_ids.size())
        throw std::invalid_argument("verify_order_k: k out of range");
    if (spec.t_minus_s_sites().empty())
        throw std::invalid_argument("verify_order_k: requires S to be a proper subset of T");

    const auto ids = detail::sorted_s_ids(spec);
    const auto left = cell_halfspaces(spec);
    std::vector<HPolyhedron> reduced, full;
    for (const auto& subset : detail::k_subsets(ids, k)) {
        const std::set<std::string> u(subset.begin(), subset.end());
        reduced.push_back(cell_halfspaces(detail::reduced_spec(spec, u)));
        full.push_back(cell_halfspaces(detail::subset_spec(spec, u)));
    }
    auto r1 = detail::check_equal(left, detail::concat_h(reduced, spec.ambient_dim()),
                                  "order-k (reduced sites)");
    if (!r1.holds) return r1;
    Point w;
    if (!includes_h(detail::concat_h(full, spec.ambient_dim()), left, &w))
        return {false, w, "order-k (full sites): intersection not contained in cell"};
    return {};
}

struct ChainLink {
    std::size_t from_card = 0;
    std::size_t to_card = 0;
    std::size_t points_tested = 0;
    bool holds = true;
    bool strict_evidence = false;  // reported, never asserted
};

struct ChainReport {
    bool holds = true;
    bool constructive_ok = true;  // drop-the-farthest-site step at every point
    std::vector<ChainLink> links;
    std::optional<Point> violation_witness;
    std::string violation_detail;
};

// Inclusion chain: the union of order-(j) cells over j-subsets of S descends;
// each link is certified point-wise at the left cells' vertices, relint
// points, and random points of the cells, via the constructive step: for
// x in V_T(S'), dropping a farthest site of S' keeps x in the smaller cell.
inline ChainReport verify_inclusion_chain(const CellSpec& spec, std::size_t num_samples = 20,
                                          std::uint64_t seed = 1) {
    if (spec.t_minus_s_sites().empty())
        throw std::invalid_argument("verify_inclusion_chain: requires S proper subset of T");
    ChainReport rep;
    const std::size_t K = spec.s_ids.size();
    if (K == 1) return rep;  // empty chain
    const auto ids = detail::sorted_s_ids(spec);
    Rng rng(seed);

    // Test points of one cell: exact vertices, the relint point, and random
    // convex combinations of those (all exact members by convexity).
    const auto cell_points = [&](const CellSpec& sub) {
        std::vector<Point> pts = vertices_h(cell_halfspaces(sub));
        if (auto c = relint_point_h(cell_halfspaces(sub))) pts.push_back(*c);
        const std::size_t base = pts.size();
        for (std::size_t i = 0; i < num_samples && base > 0; ++i) {
            Point x(sub.ambient_dim(), Rat(0));
            Rat total(0);
            std::vector<Rat> w(base);
            for (std::size_t j = 0; j < base; ++j) {
                w[j] = rng.unit_rational(16);
                total += w[j];
            }
            if (total == 0) continue;
            for (std::size_t j = 0; j < base; ++j)
                x = linalg::add(x, linalg::scale(pts[j], w[j] / total));
            pts.push_back(std::move(x));
        }
        return pts;
    };

    for (std::size_t j = K; j >= 2; --j) {
        ChainLink link;
        link.from_card = j;
        link.to_card = j - 1;
        const auto lefts = j == K ? std::vector<std::vector<std::string>>{ids}
                                  : detail::k_subsets(ids, j);
        for (const auto& subset : lefts) {
            const std::set<std::string> u(subset.begin(), subset.end());
            const CellSpec sub = detail::subset_spec(spec, u);
            for (const auto& x : cell_points(sub)) {
                ++link.points_tested;
                // Farthest site of S' from x, first in id order among ties.
                std::string far_id;
                std::optional<Rat> far_d;
                for (const auto& id : subset) {
                    const Rat d = sq_dist(x, spec.sites.find(id)->point);
                    if (!far_d || d > *far_d) {
                        far_d = d;
                        far_id = id;
                    }
                }
                std::set<std::string> dropped = u;
                dropped.erase(far_id);
                if (!member(x, detail::subset_spec(spec, dropped))) {
                    link.holds = false;
                    rep.holds = false;
                    rep.constructive_ok = false;
                    rep.violation_witness = x;
                    rep.violation_detail = "dropping farthest site '" + far_id +
                                           "' lost membership at order " + std::to_string(j);
                }
            }
        }
        // Strictness on the evidence: a point of the right union outside
        // every left cell.
        for (const auto& subset : detail::k_subsets(ids, j - 1)) {
            if (link.strict_evidence) break;
            const std::set<std::string> u(subset.begin(), subset.end());
            for (const auto& x : cell_points(detail::subset_spec(spec, u))) {
                bool in_left = false;
                for (const auto& ls : lefts) {
                    if (member(x, detail::subset_spec(
                                      spec, std::set<std::string>(ls.begin(), ls.end())))) {
                        in_left = true;
                        break;
                    }
                }
                if (!in_left) {
                    link.strict_evidence = true;
                    break;
                }
            }
        }
        rep.links.push_back(link);
    }
    return rep;
}

}  // namespace hov
