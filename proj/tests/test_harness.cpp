#include <doctest.h>

#include "ghurwitz/harness.hpp"

using namespace ghurwitz;

TEST_CASE("equivalence suite smoke run: all faces agree on small batches") {
    RunConfig cfg;
    cfg.command = "equivalence";
    cfg.count = 6;
    cfg.seed = 2024;
    const auto rep = equivalence_suite(cfg, 2);
    CHECK(rep.aggregate_pass);
    CHECK(rep.inconclusive_count == 0);
    REQUIRE(rep.instances.size() == 13);
    // The named converse instance carries the pinned witness.
    const auto& named = rep.instances[6];
    CHECK(named.description.find("named") != std::string::npos);
    const auto& w = named.details.at("witness_search");
    CHECK(w.at("found") == true);
    CHECK(w.at("witness").at("rows") == json::array({1, 2}));
    CHECK(w.at("witness").at("cols") == json::array({2, 3}));
    CHECK(w.at("witness").at("value") == "-1");
    // The degenerate ride-along is flagged, not failed.
    CHECK(rep.instances.back().details.at("degenerate") == true);
}

TEST_CASE("equivalence suite reports are byte-identical across thread counts") {
    RunConfig cfg;
    cfg.command = "equivalence";
    cfg.count = 4;
    cfg.seed = 99;
    const auto a = equivalence_suite(cfg, 1);
    const auto b = equivalence_suite(cfg, 4);
    CHECK(dump_report(a.to_json()) == dump_report(b.to_json()));
}

TEST_CASE("quasi-stability suite smoke run") {
    RunConfig cfg;
    cfg.command = "quasi-stability";
    cfg.count = 8;
    cfg.seed = 7;
    cfg.samples = 400;
    const auto rep = quasi_stability_suite(cfg, 2);
    CHECK(rep.aggregate_pass);
    REQUIRE(rep.instances.size() == 8);
    for (const auto& inst : rep.instances) {
        CHECK(inst.details.at("agreement") == true);
    }
}

TEST_CASE("sector suite smoke run") {
    RunConfig cfg;
    cfg.command = "sector";
    cfg.count = 6;
    cfg.seed = 5;
    const auto rep = sector_suite(cfg, 2);
    CHECK(rep.aggregate_pass);
    // Instance 0 is (1+z)^6 at M=3: premise holds and the sector is clear.
    const auto& first = rep.instances[0];
    CHECK(first.details.at("premise") == true);
    CHECK(first.details.at("sector").at("pass") == true);
}
