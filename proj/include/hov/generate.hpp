#pragma once

// Seeded instance generation. The degenerate share of sites is placed
// exactly on a common rational sphere through rational parametrizations
// (no square roots anywhere): the tangent-half-angle circle map in the
// plane and its stereographic lifts in R^3 and R^4.

#include "hov/geometry.hpp"
#include "hov/rng.hpp"
#include "hov/voronoi.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

struct InstanceConfig {
    std::size_t ambient_dim = 2;
    std::size_t num_sites = 6;
    std::size_t order = 2;  // |S|
    Rat degenerate_fraction = Rat(1, 2);
    std::int64_t coordinate_bound = 6;
    std::uint64_t seed = 1;

    void validate() const {
        if (ambient_dim < 2 || ambient_dim > 4)
            throw std::invalid_argument("InstanceConfig: ambient_dim must be in [2,4]");
        if (order < 1 || order >= num_sites)
            throw std::invalid_argument("InstanceConfig: need 1 <= order < num_sites");
        if (degenerate_fraction < 0 || degenerate_fraction > 1)
            throw std::invalid_argument("InstanceConfig: degenerate_fraction outside [0,1]");
        if (coordinate_bound < 1)
            throw std::invalid_argument("InstanceConfig: coordinate_bound must be positive");
    }
};

struct GeneratedInstance {
    CellSpec spec;
    std::optional<Ball> sphere;               // the common sphere, when any
    std::vector<std::string> cospherical_ids;  // sites placed exactly on it
};

namespace detail {

// Point on the unit sphere in R^n from n-1 rational parameters:
// ((2 u_1, ..., 2 u_{n-1}, q - 2)) / q with q = 1 + sum u_i^2.
inline Point unit_sphere_point(const std::vector<Rat>& params) {
    Rat q(1);
    for (const auto& u : params) q += u * u;
    Point p;
    for (const auto& u : params) p.push_back(2 * u / q);
    p.push_back((q - 2) / q);
    return p;
}

}  // namespace detail

inline GeneratedInstance generate(const InstanceConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.ambient_dim;

    const Int deg_count_int = numerator(cfg.degenerate_fraction * Rat(cfg.num_sites)) /
                              denominator(cfg.degenerate_fraction * Rat(cfg.num_sites));
    const std::size_t deg_count = static_cast<std::size_t>(deg_count_int);

    GeneratedInstance out;
    std::vector<Site> sites;
    const auto taken = [&](const Point& p) {
        for (const auto& s : sites)
            if (s.point == p) return true;
        return false;
    };

    std::optional<Ball> sphere;
    if (deg_count > 0) {
        Point center(n);
        for (auto& c : center) c = rng.rational(cfg.coordinate_bound, 2);
        const Rat radius(rng.int_in(1, cfg.coordinate_bound), rng.int_in(1, 2));
        sphere = Ball(center, radius * radius);
        for (std::size_t i = 0; i < deg_count; ++i) {
            Point p;
            do {
                std::vector<Rat> params(n - 1);
                for (auto& u : params) u = rng.rational(8, 8);
                p = detail::unit_sphere_point(params);
                for (std::size_t d = 0; d < n; ++d) p[d] = center[d] + radius * p[d];
            } while (taken(p));
            const std::string id = "p" + std::to_string(sites.size());
            out.cospherical_ids.push_back(id);
            sites.push_back({id, std::move(p)});
        }
    }
    while (sites.size() < cfg.num_sites) {
        Point p(n);
        do {
            for (auto& c : p) c = rng.rational(cfg.coordinate_bound, 4);
        } while (taken(p));
        sites.push_back({"p" + std::to_string(sites.size()), p});
    }

    // Random k-subset of T for S (partial Fisher-Yates).
    std::vector<std::size_t> idx(cfg.num_sites);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < cfg.order; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    std::set<std::string> s_ids;
    for (std::size_t i = 0; i < cfg.order; ++i) s_ids.insert(sites[idx[i]].id);

    out.sphere = std::move(sphere);
    out.spec = CellSpec(SiteSet(n, std::move(sites)), std::move(s_ids));
    return out;
}

}  // namespace hov
