#include <finsurg/campaigns.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

#ifndef FINSURG_DATA_DIR
#define FINSURG_DATA_DIR "data"
#endif

namespace {

const std::vector<finsurg::TableRow>& census() {
    static const std::vector<finsurg::TableRow> rows =
        finsurg::load_table_dir(FINSURG_DATA_DIR);
    return rows;
}

std::set<long long> hit_ps(const finsurg::SweepReport& rep) {
    std::set<long long> out;
    for (const auto& h : rep.hits) out.insert(h.at("p").get<long long>());
    return out;
}

}  // namespace

TEST_CASE("consecutive lens sweep, small prefixes") {
    auto r17 = finsurg::sweep_consecutive_lens(17);
    CHECK(r17.complete);
    CHECK(hit_ps(r17).empty());

    auto r31 = finsurg::sweep_consecutive_lens(31);
    CHECK(hit_ps(r31) == std::set<long long>{18, 30, 31});
    for (const auto& h : r31.hits) CHECK(h.at("distinct_count").get<int>() == 1);

    // prefix property
    auto r20 = finsurg::sweep_consecutive_lens(20);
    CHECK(hit_ps(r20) == std::set<long long>{18});
}

TEST_CASE("budget guard yields a partial report") {
    finsurg::CampaignOptions opt;
    opt.budget_ms = 0;
    auto rep = finsurg::sweep_consecutive_lens(60, opt);
    CHECK_FALSE(rep.complete);
    CHECK(rep.hits.empty());
}

TEST_CASE("O/D neighbor sweep") {
    auto rep = finsurg::sweep_dtype_neighbors(census());
    REQUIRE(rep.hits.size() == 3);
    CHECK(rep.hits[0].at("alpha") == 2);
    CHECK(rep.hits[0].at("dslope") == 4);
    CHECK(rep.hits[0].at("knot") == "T(3 2)");
    CHECK(rep.hits[1].at("alpha") == 50);
    CHECK(rep.hits[1].at("dslope") == 52);
    CHECK(rep.hits[1].at("knot") == "[17 3;3 2]");
    CHECK(rep.hits[2].at("alpha") == 58);
    CHECK(rep.hits[2].at("dslope") == 56);
    CHECK(rep.hits[2].at("knot") == "[19 3;3 2]");

    // determinism
    auto again = finsurg::sweep_dtype_neighbors(census());
    CHECK(rep.hits == again.hits);
}

TEST_CASE("I/D distance-3 sweep") {
    auto rep = finsurg::sweep_dtype_distance3(census());
    REQUIRE(rep.hits.size() == 1);
    CHECK(rep.hits[0].at("m") == 1);
    CHECK(rep.hits[0].at("knot") == "T(3 2)");

    auto again = finsurg::sweep_dtype_distance3(census());
    CHECK(rep.hits == again.hits);
}

TEST_CASE("prism determinant bound sweep") {
    auto rep = finsurg::sweep_prism_det_bound(200);
    CHECK(rep.hits.empty());
    CHECK(rep.complete);
}

TEST_CASE("report serialization") {
    auto rep = finsurg::sweep_prism_det_bound(5);
    auto j = rep.to_json();
    CHECK(j.at("campaign") == "prism-det-bound");
    CHECK(j.at("parameters").at("m_max") == 5);
    CHECK(j.at("hits").is_array());
    CHECK(j.contains("runtime_ms"));
    CHECK(j.at("complete") == true);
    CHECK(rep.summary().find("prism-det-bound") != std::string::npos);
}
