#include "hov/generate.hpp"
#include "hov/neighbors.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hov;
using hovtest::pt;
using hovtest::q;
using hovtest::quadrant_cell_spec;
using hovtest::square_diagonal_spec;

namespace {

// Five cocircular sites; the order-2 cell of the horizontal pair is {0}
// and admits more than one minimal neighbor set.
CellSpec cocircular_multi_spec() {
    SiteSet sites(2, {{"s1", pt({"1", "0"})},
                      {"s2", pt({"-1", "0"})},
                      {"t1", pt({"0", "1"})},
                      {"t2", pt({"0", "-1"})},
                      {"t3", pt({"3/5", "4/5"})}});
    return CellSpec(sites, {"s1", "s2"});
}

}  // namespace

TEST_CASE("cells_equal_reduced on the quadrant cell") {
    const auto spec = quadrant_cell_spec();
    CHECK(cells_equal_reduced(spec, {"a", "c"}));
    CHECK(cells_equal_reduced(spec, {"a", "b", "c"}));
    CHECK_FALSE(cells_equal_reduced(spec, {"a"}));
    CHECK_FALSE(cells_equal_reduced(spec, {"b"}));
    CHECK_FALSE(cells_equal_reduced(spec, {"a", "b"}));
    CHECK_THROWS_AS(cells_equal_reduced(spec, {"nope"}), std::invalid_argument);
    CHECK_THROWS_AS(cells_equal_reduced(spec, {"s"}), std::invalid_argument);
}

TEST_CASE("all_minimal_neighbor_sets: quadrant cell, opposite corner redundant") {
    auto rep = all_minimal_neighbor_sets(quadrant_cell_spec());
    REQUIRE(rep.minimal_sets.size() == 1);
    CHECK(rep.minimal_sets[0] == std::set<std::string>{"a", "c"});
    CHECK(rep.neighbor_set == std::set<std::string>{"a", "c"});
    CHECK(rep.unique);
    CHECK(rep.interior_nonempty);
    REQUIRE(rep.facet_pairs.size() == 2);
    for (const auto& [s_id, t_id] : rep.facet_pairs) {
        CHECK(s_id == "s");
        CHECK((t_id == "a" || t_id == "c"));
    }
}

TEST_CASE("all_minimal_neighbor_sets: cocircular point cell has several") {
    auto rep = all_minimal_neighbor_sets(cocircular_multi_spec());
    CHECK(rep.minimal_sets.size() >= 2);
    CHECK_FALSE(rep.unique);
    CHECK_FALSE(rep.interior_nonempty);
    const std::set<std::string> vertical{"t1", "t2"};
    const std::set<std::string> tilted{"t2", "t3"};
    CHECK(std::count(rep.minimal_sets.begin(), rep.minimal_sets.end(), vertical) == 1);
    CHECK(std::count(rep.minimal_sets.begin(), rep.minimal_sets.end(), tilted) == 1);
    // Every reported set reproduces the cell and is minimal.
    for (const auto& N : rep.minimal_sets) {
        CHECK(cells_equal_reduced(cocircular_multi_spec(), N));
        for (const auto& drop : N) {
            auto smaller = N;
            smaller.erase(drop);
            CHECK_FALSE(cells_equal_reduced(cocircular_multi_spec(), smaller));
        }
    }
}

TEST_CASE("all_minimal_neighbor_sets: singleton T\\S") {
    SiteSet sites(2, {{"s", pt({"0", "0"})}, {"t", pt({"2", "0"})}});
    auto rep = all_minimal_neighbor_sets(CellSpec(sites, {"s"}));
    REQUIRE(rep.minimal_sets.size() == 1);
    CHECK(rep.minimal_sets[0] == std::set<std::string>{"t"});
    CHECK(rep.unique);
    REQUIRE(rep.facet_pairs.size() == 1);
    CHECK(rep.facet_pairs[0] == std::pair<std::string, std::string>{"s", "t"});
}

TEST_CASE("all_minimal_neighbor_sets ignores a redundant far site") {
    SiteSet sites(2, {{"s", pt({"1", "1"})},
                      {"a", pt({"-1", "1"})},
                      {"b", pt({"-1", "-1"})},
                      {"c", pt({"1", "-1"})},
                      {"f", pt({"-5", "-5"})}});
    auto rep = all_minimal_neighbor_sets(CellSpec(sites, {"s"}));
    REQUIRE(rep.minimal_sets.size() == 1);
    CHECK(rep.minimal_sets[0] == std::set<std::string>{"a", "c"});
    CHECK_FALSE(rep.neighbor_set.count("f"));
}

TEST_CASE("all_minimal_neighbor_sets enforces the search budget") {
    std::vector<Site> sites{{"s", pt({"0", "-1"})}};
    for (int i = 0; i < 17; ++i)
        sites.push_back({"p" + std::to_string(i), {Rat(i), Rat(i) * Rat(i)}});
    CellSpec spec(SiteSet(2, sites), {"s"});
    CHECK_THROWS_AS(all_minimal_neighbor_sets(spec), std::invalid_argument);
}

TEST_CASE("verify_unique_minimal") {
    CHECK(verify_unique_minimal(quadrant_cell_spec()) == UniqueMinimal::Confirmed);
    // Lower-dimensional cells are outside the lemma's hypothesis.
    CHECK(verify_unique_minimal(square_diagonal_spec()) == UniqueMinimal::NotApplicable);
    CHECK(verify_unique_minimal(cocircular_multi_spec()) == UniqueMinimal::NotApplicable);

    SiteSet sites(2, {{"a", pt({"0", "0"})}, {"b", pt({"1", "0"})}});
    CHECK_THROWS_AS(verify_unique_minimal(CellSpec(sites, {"a", "b"})), std::invalid_argument);
}

TEST_CASE("verify_unique_minimal on random full-dimensional cells") {
    std::size_t confirmed = 0;
    for (unsigned seed = 40; seed < 52; ++seed) {
        InstanceConfig cfg;
        cfg.ambient_dim = 2;
        cfg.num_sites = 6;
        cfg.order = 1 + seed % 3;
        cfg.degenerate_fraction = Rat(0);
        cfg.coordinate_bound = 5;
        cfg.seed = seed;
        const auto spec = generate(cfg).spec;
        const auto res = verify_unique_minimal(spec);
        CHECK(res != UniqueMinimal::Violated);
        if (res == UniqueMinimal::Confirmed) ++confirmed;
    }
    CHECK(confirmed > 0);
}

TEST_CASE("verify_neighbor_chains: cone cell from square corners") {
    // S is the top edge of the square; the order-2 cell is the cone y >= |x|.
    SiteSet sites(2, {{"s1", pt({"1", "1"})},
                      {"s2", pt({"-1", "1"})},
                      {"t1", pt({"-1", "-1"})},
                      {"t2", pt({"1", "-1"})}});
    CellSpec spec(sites, {"s1", "s2"});
    REQUIRE(dim_h(cell_halfspaces(spec)) == 2);
    auto res = verify_neighbor_chains(spec);
    CHECK(res.status == ChainStatus::Holds);
}

TEST_CASE("verify_neighbor_chains: lower-dimensional cell is NotApplicable") {
    CHECK(verify_neighbor_chains(square_diagonal_spec()).status == ChainStatus::NotApplicable);
}

TEST_CASE("verify_neighbor_chains on random instances") {
    for (unsigned seed = 60; seed < 68; ++seed) {
        InstanceConfig cfg;
        cfg.ambient_dim = 2;
        cfg.num_sites = 6;
        cfg.order = 2 + seed % 2;
        cfg.degenerate_fraction = Rat(1, 3);
        cfg.coordinate_bound = 5;
        cfg.seed = seed;
        auto res = verify_neighbor_chains(generate(cfg).spec);
        INFO("seed " << seed << " " << res.detail);
        CHECK(res.status != ChainStatus::Violated);
    }
}
