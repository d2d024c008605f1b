#pragma once

// Property-verification sweeps over generated instances. Each instance is
// pure and independently seeded, so a bounded worker pool runs them in any
// order and the report is merged in index order; output is deterministic
// regardless of the job count.

#include "hov/dimension.hpp"
#include "hov/generate.hpp"
#include "hov/json_io.hpp"
#include "hov/neighbors.hpp"
#include "hov/relations.hpp"
#include "hov/rng.hpp"
#include "hov/voronoi.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace hov {

struct SweepConfig {
    std::size_t ambient_dim = 2;
    std::size_t instances = 100;
    std::size_t num_sites = 7;
    std::size_t max_order = 4;
    Rat degenerate_fraction = Rat(1, 2);
    std::int64_t coordinate_bound = 6;
    std::uint64_t seed = 1;
    std::set<std::string> checks{"dimension"};
    std::size_t jobs = 1;
    std::size_t membership_points = 10;
    std::size_t chain_samples = 20;
};

struct SweepFailure {
    std::size_t index = 0;
    std::string detail;
    Json instance;
};

struct SweepReport {
    std::size_t instances = 0;
    std::map<int, std::size_t> cells_by_dim;
    std::size_t empty_cells = 0;
    std::size_t multi_minimal_instances = 0;
    std::size_t not_applicable = 0;
    std::size_t membership_points_checked = 0;
    std::size_t farthest_nonempty_count = 0;
    std::size_t farthest_empty_count = 0;
    std::vector<SweepFailure> failures;
};

namespace detail {

struct InstanceResult {
    int lp_dim = -2;  // -2: not measured
    bool empty = false;
    bool multi_minimal = false;
    bool not_applicable = false;
    std::size_t membership_points = 0;
    std::size_t farthest_nonempty = 0;
    std::size_t farthest_empty = 0;
    std::vector<std::string> failures;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline InstanceResult run_instance(const SweepConfig& cfg, std::size_t index,
                                   const GeneratedInstance& inst) {
    InstanceResult res;
    const CellSpec& spec = inst.spec;
    const int n = static_cast<int>(spec.ambient_dim());
    const auto fail = [&](const std::string& msg) { res.failures.push_back(msg); };

    // Generated cospherical points must sit exactly on the sphere.
    if (inst.sphere)
        for (const auto& id : inst.cospherical_ids)
            if (ball_position(*inst.sphere, spec.sites.find(id)->point) !=
                BallPosition::Boundary)
                fail("generated site '" + id + "' not exactly on the common sphere");

    if (cfg.checks.count("dimension")) {
        const auto rep = predicted_dimension(spec);
        if (rep.cell_empty) {
            res.empty = true;
        } else {
            res.lp_dim = rep.lp_dim;
            if (!rep.agree)
                fail("dimension mismatch: predicted " + std::to_string(rep.predicted_dim) +
                     ", lp " + std::to_string(rep.lp_dim));
            if (rep.lp_dim == n - 1) fail("nonempty cell of dimension n-1");
        }
    }

    if (cfg.checks.count("membership")) {
        Rng rng(mix_seed(cfg.seed ^ 0xABCDull, index));
        const auto H = cell_halfspaces(spec);
        std::vector<Point> probes;
        if (auto c = relint_point_h(H)) probes.push_back(*c);
        while (probes.size() < cfg.membership_points) {
            Point x(spec.ambient_dim());
            for (auto& v : x) v = rng.rational(cfg.coordinate_bound * 2, 8);
            probes.push_back(std::move(x));
        }
        for (const auto& x : probes) {
            ++res.membership_points;
            const bool by_dist = member(x, spec);
            const bool by_halfspace = H.contains(x);
            const bool by_ball = certificate_at(x, spec).has_value();
            if (by_dist != by_halfspace || by_dist != by_ball)
                fail("membership equivalence broken at " + to_string(x[0]) + ", ...");
        }
    }

    if (cfg.checks.count("chains") && !spec.t_minus_s_sites().empty()) {
        SubsetFamily singles{spec.s_ids, {}};
        for (const auto& id : spec.s_ids) singles.members.push_back({id});
        if (auto r = verify_cover_decomposition(spec, singles); !r.holds)
            fail("cover decomposition violated: " + r.detail);
        for (std::size_t k = 1; k <= spec.s_ids.size(); ++k)
            if (auto r = verify_order_k(spec, k); !r.holds)
                fail("order-k equality violated at k=" + std::to_string(k) + ": " + r.detail);
        const auto chain =
            verify_inclusion_chain(spec, cfg.chain_samples, mix_seed(cfg.seed, index));
        if (!chain.holds) fail("inclusion chain violated: " + chain.violation_detail);
    }

    if (cfg.checks.count("neighbors") && !spec.t_minus_s_sites().empty() &&
        spec.t_minus_s_sites().size() <= neighbor_search_budget()) {
        const auto rep = all_minimal_neighbor_sets(spec);
        res.multi_minimal = rep.minimal_sets.size() > 1;
        std::set<std::string> expected_union;
        for (const auto& ms : rep.minimal_sets) {
            if (!cells_equal_reduced(spec, ms)) fail("reported minimal set does not reproduce the cell");
            for (const auto& drop : ms) {
                auto smaller = ms;
                smaller.erase(drop);
                if (cells_equal_reduced(spec, smaller))
                    fail("reported minimal set is not minimal (can drop '" + drop + "')");
            }
            expected_union.insert(ms.begin(), ms.end());
        }
        if (expected_union != rep.neighbor_set) fail("neighbor_set is not the union of minimal sets");
        if (rep.interior_nonempty) {
            if (verify_unique_minimal(spec) != UniqueMinimal::Confirmed)
                fail("unique-minimal/facet correspondence violated");
            std::set<std::string> facet_ts;
            for (const auto& [s, t] : rep.facet_pairs) facet_ts.insert(t);
            if (facet_ts != rep.minimal_sets[0])
                fail("facet pairs do not match the unique minimal set");
            const auto chains = verify_neighbor_chains(spec);
            if (chains.status == ChainStatus::Violated)
                fail("neighbor chain violated: " + chains.detail);
        } else {
            res.not_applicable = true;
        }
    }

    if (cfg.checks.count("farthest")) {
        for (const auto& site : spec.sites.sites) {
            // farthest_nonempty validates the exposed ball internally and
            // throws on any inconsistency.
            const auto far = farthest_nonempty(spec.sites, site.id);
            if (far.nonempty)
                ++res.farthest_nonempty;
            else
                ++res.farthest_empty;
        }
    }
    return res;
}

}  // namespace detail

inline SweepReport run_sweep(const SweepConfig& cfg) {
    const std::size_t count = cfg.instances;
    std::vector<detail::InstanceResult> results(count);
    std::vector<Json> payloads(count);

    const auto work = [&](std::size_t i) {
        InstanceConfig icfg;
        icfg.ambient_dim = cfg.ambient_dim;
        icfg.num_sites = cfg.num_sites;
        icfg.order = 1 + i % std::min(cfg.max_order, cfg.num_sites - 1);
        icfg.degenerate_fraction = cfg.degenerate_fraction;
        icfg.coordinate_bound = cfg.coordinate_bound;
        icfg.seed = detail::mix_seed(cfg.seed, i);
        const auto inst = generate(icfg);
        payloads[i] = spec_to_json(inst.spec);
        try {
            results[i] = detail::run_instance(cfg, i, inst);
        } catch (const std::exception& e) {
            results[i].failures.push_back(std::string("exception: ") + e.what());
        }
    };

    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < cfg.jobs; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    work(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    SweepReport rep;
    rep.instances = count;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& r = results[i];
        if (r.empty) ++rep.empty_cells;
        if (r.lp_dim >= 0) ++rep.cells_by_dim[r.lp_dim];
        if (r.multi_minimal) ++rep.multi_minimal_instances;
        if (r.not_applicable) ++rep.not_applicable;
        rep.membership_points_checked += r.membership_points;
        rep.farthest_nonempty_count += r.farthest_nonempty;
        rep.farthest_empty_count += r.farthest_empty;
        for (const auto& msg : r.failures) rep.failures.push_back({i, msg, payloads[i]});
    }
    return rep;
}

inline Json sweep_report_to_json(const SweepReport& rep) {
    Json j;
    j["schema"] = 1;
    j["instances"] = rep.instances;
    Json by_dim;
    for (const auto& [d, c] : rep.cells_by_dim) by_dim[std::to_string(d)] = c;
    j["cells_by_dim"] = by_dim;
    j["empty_cells"] = rep.empty_cells;
    j["multi_minimal_instances"] = rep.multi_minimal_instances;
    j["neighbor_not_applicable"] = rep.not_applicable;
    j["membership_points_checked"] = rep.membership_points_checked;
    j["farthest_nonempty"] = rep.farthest_nonempty_count;
    j["farthest_empty"] = rep.farthest_empty_count;
    j["failures"] = Json::array();
    for (const auto& f : rep.failures)
        j["failures"].push_back(
            {{"index", f.index}, {"detail", f.detail}, {"instance", f.instance}});
    return j;
}

}  // namespace hov
