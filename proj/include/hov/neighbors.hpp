#pragma once

// Minimal neighbor sets: inclusion-minimal N in T\S with V_N(S) = V_T(S).
// Degenerate (cocircular) configurations can have several minimal sets, so
// the search is exhaustive over the deletion lattice with memoized
// equality tests and monotone pruning (reducing N only grows the cell, so
// once equality breaks it stays broken on subsets).

#include "hov/polytope.hpp"
#include "hov/relations.hpp"
#include "hov/voronoi.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

struct NeighborReport {
    std::vector<std::set<std::string>> minimal_sets;
    std::set<std::string> neighbor_set;  // union of the minimal sets
    bool unique = false;
    std::vector<std::pair<std::string, std::string>> facet_pairs;  // when full-dimensional
    bool interior_nonempty = false;
};

namespace detail {

// Raw halfspaces of V_N(S): the S x N slice of the full constraint list.
inline HPolyhedron restricted_halfspaces(const HPolyhedron& full,
                                         const std::set<std::string>& n_ids) {
    HPolyhedron out;
    out.ambient_dim = full.ambient_dim;
    for (std::size_t i = 0; i < full.inequalities.size(); ++i) {
        const auto& pair = full.provenance.at(i);
        if (n_ids.count(pair.second)) {
            out.provenance[out.inequalities.size()] = pair;
            out.inequalities.push_back(full.inequalities[i]);
        }
    }
    return out;
}

}  // namespace detail

// Exact equality of V_N(S) and V_T(S). V_N carries a subset of the full
// cell's constraints, so V_T(S) is always contained in V_N(S) and only the
// reverse inclusion needs an LP.
inline bool cells_equal_reduced(const CellSpec& spec, const std::set<std::string>& N) {
    for (const auto& id : N) {
        const Site* site = spec.sites.find(id);
        if (!site || spec.s_ids.count(id))
            throw std::invalid_argument("cells_equal_reduced: N must be a subset of T\\S");
    }
    const auto full = cell_halfspaces(spec);
    return includes_h(detail::restricted_halfspaces(full, N), full);
}

inline std::size_t neighbor_search_budget() { return 16; }

inline NeighborReport all_minimal_neighbor_sets(const CellSpec& spec) {
    std::vector<std::string> ground;
    for (const auto& t : spec.t_minus_s_sites()) ground.push_back(t.id);
    if (ground.size() > neighbor_search_budget())
        throw std::invalid_argument("all_minimal_neighbor_sets: |T\\S| exceeds the budget of " +
                                    std::to_string(neighbor_search_budget()));
    const auto full = cell_halfspaces(spec);
    const int n = static_cast<int>(spec.ambient_dim());

    std::map<std::uint32_t, bool> equal_memo;
    const auto equal = [&](std::uint32_t mask) {
        auto it = equal_memo.find(mask);
        if (it != equal_memo.end()) return it->second;
        std::set<std::string> ids;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (mask & (1u << i)) ids.insert(ground[i]);
        const bool eq = includes_h(detail::restricted_halfspaces(full, ids), full);
        equal_memo[mask] = eq;
        return eq;
    };

    const std::uint32_t full_mask =
        ground.empty() ? 0u : (std::uint32_t(1) << ground.size()) - 1u;
    equal_memo[full_mask] = true;  // V_{T\S}(S) is V_T(S) itself

    std::set<std::uint32_t> minimal, visited;
    std::vector<std::uint32_t> stack{full_mask};
    while (!stack.empty()) {
        const std::uint32_t mask = stack.back();
        stack.pop_back();
        if (!visited.insert(mask).second) continue;
        bool any_child_equal = false;
        for (std::size_t i = 0; i < ground.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            const std::uint32_t child = mask & ~(1u << i);
            if (equal(child)) {
                any_child_equal = true;
                stack.push_back(child);
            }
        }
        if (!any_child_equal) minimal.insert(mask);
    }

    NeighborReport rep;
    for (auto mask : minimal) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (mask & (1u << i)) ids.insert(ground[i]);
        rep.neighbor_set.insert(ids.begin(), ids.end());
        rep.minimal_sets.push_back(std::move(ids));
    }
    std::sort(rep.minimal_sets.begin(), rep.minimal_sets.end());
    rep.unique = rep.minimal_sets.size() == 1;
    rep.interior_nonempty = dim_h(full) == n;

    if (rep.interior_nonempty) {
        // Facet pairs: irredundant inequalities. A halfspace produced twice
        // by distinct pairs blocks its own removal, so coincident
        // constraints come out redundant and never define a facet.
        const auto cs = full.inequalities;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::vector<LinearConstraint> others;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (j != i) others.push_back(cs[j]);
            auto out = solve(others, cs[i].normal, Sense::Max);
            const bool irredundant =
                out.status == LPStatus::Unbounded ||
                (out.status == LPStatus::Optimal && *out.value > cs[i].rhs);
            if (irredundant) rep.facet_pairs.push_back(full.provenance.at(i));
        }
    }
    return rep;
}

enum class UniqueMinimal { Confirmed, NotApplicable, Violated };

// For cells with nonempty interior the minimal neighbor set
// is unique and each of its members defines a facet (the bisector cut has
// dimension n-1).
inline UniqueMinimal verify_unique_minimal(const CellSpec& spec) {
    if (spec.t_minus_s_sites().empty())
        throw std::invalid_argument("verify_unique_minimal: requires S proper subset of T");
    const auto full = cell_halfspaces(spec);
    const int n = static_cast<int>(spec.ambient_dim());
    if (dim_h(full) != n) return UniqueMinimal::NotApplicable;

    const auto rep = all_minimal_neighbor_sets(spec);
    if (rep.minimal_sets.size() != 1) return UniqueMinimal::Violated;
    for (const auto& t_id : rep.minimal_sets[0]) {
        bool defines_facet = false;
        for (std::size_t i = 0; i < full.inequalities.size() && !defines_facet; ++i) {
            if (full.provenance.at(i).second != t_id) continue;
            HPolyhedron cut = full;
            cut.equalities.push_back(
                {full.inequalities[i].normal, full.inequalities[i].rhs, Rel::Eq});
            if (dim_h(cut) == n - 1) defines_facet = true;
        }
        if (!defines_facet) return UniqueMinimal::Violated;
    }
    return UniqueMinimal::Confirmed;
}

enum class ChainStatus { Holds, NotApplicable, Violated };

struct NeighborChainResult {
    ChainStatus status = ChainStatus::Holds;
    std::string detail;
};

// Both neighbor chains: with reduced site sets (N over V_{T\S}(S')) and
// with the full site set (N over V_T(S')). The reduced chain is checked
// link by link on unions: every intermediate cell contains V_T(S), so its
// interior is automatically nonempty. The full chain is checked as the
// per-subset induction step N_T(W) in union of N_T(W \ {w}), and only for
// subsets W whose own cell has nonempty interior -- without that
// hypothesis the step genuinely fails (an intermediate V_T(W) can be empty
// while its deletion-minimal subconfigurations contribute stray sites).
inline NeighborChainResult verify_neighbor_chains(const CellSpec& spec) {
    if (spec.t_minus_s_sites().empty())
        throw std::invalid_argument("verify_neighbor_chains: requires S proper subset of T");
    const int n = static_cast<int>(spec.ambient_dim());
    if (dim_h(cell_halfspaces(spec)) != n) return {ChainStatus::NotApplicable, "empty interior"};
    const std::size_t K = spec.s_ids.size();
    if (K == 1) return {};

    const auto ids = detail::sorted_s_ids(spec);
    const auto neighbors_of = [&](const std::set<std::string>& u, bool reduced) {
        const CellSpec sub =
            reduced ? detail::reduced_spec(spec, u) : detail::subset_spec(spec, u);
        return all_minimal_neighbor_sets(sub).neighbor_set;
    };

    // Reduced chain, unions link by link.
    std::set<std::string> prev = all_minimal_neighbor_sets(spec).neighbor_set;
    for (std::size_t k = K - 1; k >= 1; --k) {
        std::set<std::string> cur;
        for (const auto& subset : detail::k_subsets(ids, k)) {
            const auto ns = neighbors_of({subset.begin(), subset.end()}, true);
            cur.insert(ns.begin(), ns.end());
        }
        for (const auto& id : prev)
            if (!cur.count(id))
                return {ChainStatus::Violated, "reduced chain broken at k=" + std::to_string(k) +
                                                   " for neighbour '" + id + "'"};
        prev = cur;
        if (k == 1) break;
    }

    // Full chain, induction step per full-dimensional subset.
    for (std::size_t k = K; k >= 2; --k) {
        for (const auto& subset : detail::k_subsets(ids, k)) {
            const std::set<std::string> w(subset.begin(), subset.end());
            if (dim_h(cell_halfspaces(detail::subset_spec(spec, w))) != n) continue;
            const auto left = neighbors_of(w, false);
            std::set<std::string> right;
            for (const auto& drop : subset) {
                auto sub = w;
                sub.erase(drop);
                const auto ns = neighbors_of(sub, false);
                right.insert(ns.begin(), ns.end());
            }
            for (const auto& id : left)
                if (!right.count(id))
                    return {ChainStatus::Violated,
                            "full chain step broken at |W|=" + std::to_string(k) +
                                " for neighbour '" + id + "'"};
        }
    }
    return {};
}

}  // namespace hov
