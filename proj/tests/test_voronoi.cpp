#include "hov/generate.hpp"
#include "hov/voronoi.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hov;
using hovtest::axis_cell_spec;
using hovtest::leq;
using hovtest::pt;
using hovtest::q;
using hovtest::quadrant_cell_spec;

TEST_CASE("cell_halfspaces: axis cell") {
    const auto h = cell_halfspaces(axis_cell_spec());
    CHECK(h.inequalities.size() == 9);
    CHECK(h.provenance.size() == 9);

    // Same cell as the hand-written system {+-x+-y <= 0, +-x-z <= 0, -z <= 0}.
    HPolyhedron hand;
    hand.ambient_dim = 3;
    hand.inequalities = {leq({"1", "1", "0"}, "0"),   leq({"1", "-1", "0"}, "0"),
                         leq({"-1", "1", "0"}, "0"),  leq({"-1", "-1", "0"}, "0"),
                         leq({"1", "0", "-1"}, "0"),  leq({"-1", "0", "-1"}, "0"),
                         leq({"0", "0", "-1"}, "0")};
    CHECK(equal_h(h, hand));

    // Redundancy removal shrinks the system but preserves the cell.  The
    // four +-x+-y <= 0 inequalities force x = y = 0, which makes most of the
    // remaining constraints redundant.
    const auto irr = irredundant_halfspaces(h);
    CHECK(irr.inequalities.size() == 5);
    CHECK(equal_h(irr, h));
}

TEST_CASE("cell_halfspaces: quadrant cell") {
    const auto h = cell_halfspaces(quadrant_cell_spec());
    CHECK(h.inequalities.size() == 3);
    // Equal to {x >= 0, y >= 0}.
    HPolyhedron quadrant;
    quadrant.ambient_dim = 2;
    quadrant.inequalities = {leq({"-2", "0"}, "0"), leq({"0", "-2"}, "0")};
    CHECK(equal_h(h, quadrant));
}

TEST_CASE("cell_halfspaces: S = T gives all of R^n") {
    const SiteSet sites(2, {{"a", pt({"0", "0"})}, {"b", pt({"1", "0"})}});
    const CellSpec spec(sites, {"a", "b"});
    CHECK(cell_halfspaces(spec).inequalities.empty());
    CHECK(member(pt({"100", "-100"}), spec));  // vacuously everywhere
}

TEST_CASE("member on the axis cell") {
    const auto spec = axis_cell_spec();
    CHECK(member(pt({"0", "0", "1"}), spec));
    CHECK(member(pt({"0", "0", "0"}), spec));
    CHECK_FALSE(member(pt({"0", "0", "-1"}), spec));
    CHECK_FALSE(member(pt({"1", "1", "1"}), spec));
    CHECK_THROWS_AS(member(pt({"0", "0"}), spec), std::invalid_argument);
}

TEST_CASE("member on the quadrant cell boundary") {
    CHECK(member(pt({"0", "0"}), quadrant_cell_spec()));
}

TEST_CASE("certificate_at") {
    const auto spec = axis_cell_spec();

    auto at_origin = certificate_at(pt({"0", "0", "0"}), spec);
    REQUIRE(at_origin);
    CHECK(at_origin->ball.sq_radius == Rat(1));
    CHECK(at_origin->on_boundary_S.size() == 3);
    CHECK(at_origin->on_boundary_T.size() == 3);

    auto above = certificate_at(pt({"0", "0", "2"}), spec);
    REQUIRE(above);
    CHECK(above->ball.sq_radius == Rat(5));
    CHECK(above->on_boundary_S == std::vector<std::string>{"s1", "s2"});

    CHECK_FALSE(certificate_at(pt({"0", "0", "-1"}), spec));

    auto far_corner = certificate_at(pt({"5", "5"}), quadrant_cell_spec());
    REQUIRE(far_corner);
    CHECK(far_corner->ball.sq_radius == Rat(32));
    CHECK(far_corner->on_boundary_S == std::vector<std::string>{"s"});
}

TEST_CASE("admissible_radius_range") {
    const auto spec = axis_cell_spec();

    auto unique = admissible_radius_range(pt({"0", "0", "0"}), spec);
    REQUIRE(unique);
    CHECK(unique->sq_lo == Rat(1));
    REQUIRE(unique->sq_hi);
    CHECK(*unique->sq_hi == Rat(1));

    // Every point of this degenerate cell is equidistant from (1,0,0) and
    // (0,1,0), so the radius is always unique: at (0,0,z), both sides give
    // 1 + z^2.
    auto above = admissible_radius_range(pt({"0", "0", "2"}), spec);
    REQUIRE(above);
    CHECK(above->sq_lo == Rat(5));
    CHECK(*above->sq_hi == Rat(5));

    // A genuinely open interval: the quadrant cell at (5,5).
    auto quad = admissible_radius_range(pt({"5", "5"}), quadrant_cell_spec());
    REQUIRE(quad);
    CHECK(quad->sq_lo == Rat(32));
    CHECK(*quad->sq_hi == Rat(52));

    CHECK_FALSE(admissible_radius_range(pt({"1", "1", "0"}), spec));

    // T\S empty: upper bound is +infinity.
    const SiteSet two(1, {{"a", pt({"0"})}, {"b", pt({"1"})}});
    auto open = admissible_radius_range(pt({"5"}), CellSpec(two, {"a", "b"}));
    REQUIRE(open);
    CHECK_FALSE(open->sq_hi);
}

TEST_CASE("admissible radii certify, radii outside violate") {
    const auto spec = quadrant_cell_spec();
    const Point x = pt({"5", "5"});
    auto range = admissible_radius_range(x, spec);
    REQUIRE(range);
    CHECK(range->sq_lo == Rat(32));
    CHECK(*range->sq_hi == Rat(52));
    for (const char* r : {"32", "40", "101/2", "52"}) {
        const Ball b(x, q(r));
        for (const auto& s : spec.s_sites())
            CHECK(ball_position(b, s.point) != BallPosition::Exterior);
        for (const auto& t : spec.t_minus_s_sites())
            CHECK(ball_position(b, t.point) != BallPosition::Interior);
    }
    // Below the range some S-site escapes; above it some (T\S)-site enters.
    const Ball low(x, q("31"));
    bool s_outside = false;
    for (const auto& s : spec.s_sites())
        s_outside |= ball_position(low, s.point) == BallPosition::Exterior;
    CHECK(s_outside);
    const Ball high(x, q("53"));
    bool t_inside = false;
    for (const auto& t : spec.t_minus_s_sites())
        t_inside |= ball_position(high, t.point) == BallPosition::Interior;
    CHECK(t_inside);
}

TEST_CASE("three-way membership equivalence on random instances") {
    Rng rng(59);
    for (int it = 0; it < 12; ++it) {
        InstanceConfig cfg;
        cfg.ambient_dim = 2 + it % 2;
        cfg.num_sites = 6;
        cfg.order = 1 + it % 3;
        cfg.degenerate_fraction = it % 2 ? Rat(1) : Rat(1, 2);
        cfg.seed = 100 + static_cast<std::uint64_t>(it);
        const auto spec = generate(cfg).spec;
        const auto h = cell_halfspaces(spec);
        for (int p = 0; p < 30; ++p) {
            Point x(cfg.ambient_dim);
            for (auto& c : x) c = rng.rational(12, 6);
            const bool by_dist = member(x, spec);
            CHECK(by_dist == h.contains(x));
            CHECK(by_dist == certificate_at(x, spec).has_value());
        }
    }
}

TEST_CASE("farthest_nonempty: square corner") {
    const SiteSet square(2, {{"a", pt({"1", "1"})},
                             {"b", pt({"-1", "1"})},
                             {"c", pt({"-1", "-1"})},
                             {"d", pt({"1", "-1"})}});
    const auto res = farthest_nonempty(square, "a");
    REQUIRE(res.nonempty);
    REQUIRE(res.witness);
    // The witness lies in the third quadrant, opposite (1,1).
    CHECK((*res.witness)[0] <= 0);
    CHECK((*res.witness)[1] <= 0);
    REQUIRE(res.exposed_ball);
    CHECK(sq_dist(pt({"1", "1"}), res.exposed_ball->center) == res.exposed_ball->sq_radius);
}

TEST_CASE("farthest_nonempty: collinear midpoint is empty") {
    const SiteSet line(2, {{"a", pt({"0", "0"})}, {"m", pt({"1", "0"})}, {"b", pt({"2", "0"})}});
    CHECK_FALSE(farthest_nonempty(line, "m").nonempty);
    CHECK(farthest_nonempty(line, "a").nonempty);
    CHECK(farthest_nonempty(line, "b").nonempty);
}

TEST_CASE("farthest_nonempty: |T| = 2 is always nonempty") {
    const SiteSet two(2, {{"a", pt({"0", "0"})}, {"b", pt({"3", "1"})}});
    CHECK(farthest_nonempty(two, "a").nonempty);
    CHECK(farthest_nonempty(two, "b").nonempty);
}

TEST_CASE("exposed ball validates exactly on random site sets") {
    Rng rng(61);
    for (int it = 0; it < 15; ++it) {
        InstanceConfig cfg;
        cfg.num_sites = 5;
        cfg.order = 1;
        cfg.degenerate_fraction = Rat(it % 3, 2);
        cfg.seed = 500 + static_cast<std::uint64_t>(it);
        const auto inst = generate(cfg);
        for (const auto& site : inst.spec.sites.sites) {
            // Throws if the constructed ball ever fails its exact checks.
            CHECK_NOTHROW(farthest_nonempty(inst.spec.sites, site.id));
        }
    }
}
