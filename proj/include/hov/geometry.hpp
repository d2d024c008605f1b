#pragma once

// Points, site sets, balls and the basic exact predicates on them.
// Balls store their radius squared: the squared radius of a rational-center
// ball through rational points is rational even when the radius is not.

#include "hov/linalg.hpp"
#include "hov/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hov {

using Point = Vec;

inline Rat sq_dist(const Point& p, const Point& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("sq_dist: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rat d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

struct Ball {
    Point center;
    Rat sq_radius;  // >= 0

    Ball(Point c, Rat sq_r) : center(std::move(c)), sq_radius(std::move(sq_r)) {
        if (sq_radius < 0) throw std::invalid_argument("Ball: negative squared radius");
    }
};

enum class BallPosition { Interior, Boundary, Exterior };

inline BallPosition ball_position(const Ball& b, const Point& p) {
    const Rat d = sq_dist(b.center, p);
    if (d < b.sq_radius) return BallPosition::Interior;
    if (d == b.sq_radius) return BallPosition::Boundary;
    return BallPosition::Exterior;
}

// Dimension of the affine hull of `points`.
inline int affine_rank(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("affine_rank: empty point list");
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != points[0].size())
            throw std::invalid_argument("affine_rank: dimension mismatch");
        diffs.push_back(linalg::sub(points[i], points[0]));
    }
    return static_cast<int>(linalg::rank(std::move(diffs)));
}

struct Site {
    std::string id;
    Point point;
};

// A labeled finite site set. Ids are unique, points pairwise distinct.
struct SiteSet {
    std::size_t ambient_dim = 0;
    std::vector<Site> sites;

    SiteSet() = default;
    SiteSet(std::size_t dim, std::vector<Site> s) : ambient_dim(dim), sites(std::move(s)) {
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (sites[i].point.size() != ambient_dim)
                throw std::invalid_argument("SiteSet: point dimension mismatch for id '" +
                                            sites[i].id + "'");
            for (std::size_t j = 0; j < i; ++j) {
                if (sites[j].id == sites[i].id)
                    throw std::invalid_argument("SiteSet: duplicate id '" + sites[i].id + "'");
                if (sites[j].point == sites[i].point)
                    throw std::invalid_argument("SiteSet: duplicate point for ids '" +
                                                sites[j].id + "' and '" + sites[i].id + "'");
            }
        }
    }

    const Site* find(const std::string& id) const {
        for (const auto& s : sites)
            if (s.id == id) return &s;
        return nullptr;
    }
};

}  // namespace hov
