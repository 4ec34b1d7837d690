#include "helpers.hpp"
#include <fstream>

using namespace fuscat;

TEST_CASE("report output is deterministic and byte-identical") {
    auto d1 = th::load("yang_lee");
    auto d2 = th::load("yang_lee");
    ReportOptions opt;
    opt.maxDegree = 3;
    auto r1 = run_full(d1, opt);
    auto r2 = run_full(d2, opt);
    CHECK(r1.dump(1) == r2.dump(1));
    CHECK(report_to_text(r1) == report_to_text(r2));
    CHECK(r1.dump().find("time") == std::string::npos);
}

TEST_CASE("digest depends only on the category content") {
    auto d1 = th::load("yang_lee");
    auto d2 = th::load("yang_lee");
    CHECK(fnv1a64_hex(category_to_json(d1).dump()) ==
          fnv1a64_hex(category_to_json(d2).dump()));
    auto d3 = th::load("e6");
    CHECK(fnv1a64_hex(category_to_json(d1).dump()) !=
          fnv1a64_hex(category_to_json(d3).dump()));
}

TEST_CASE("save/load round trip is exact") {
    auto fair = th::load_fair("e6");
    save_category(fair, "/tmp/fuscat_roundtrip.json");
    auto back = load_category("/tmp/fuscat_roundtrip.json");
    REQUIRE(back.ring.labels == fair.ring.labels);
    REQUIRE(back.ring.mult == fair.ring.mult);
    for (auto& [key, M] : fair.blocks) {
        const Mat& B = back.blocks.at(key);
        CHECK((B - M).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("report fields flag failures") {
    auto data = th::load("yang_lee");
    data.blocks.at({1, 1, 1, 1})(0, 0) += 1e-3;
    ReportOptions opt;
    opt.runDY = false;
    auto r = run_full(data, opt);
    CHECK_FALSE(r["pentagon_ok"].get<bool>());
}

TEST_CASE("report covers the full pipeline") {
    ReportOptions opt;
    opt.maxDegree = 3;
    auto r = run_full(th::load("e6"), opt);
    for (const char* key :
         {"input_digest", "pentagon_residual", "dims", "pivotal_indicators",
          "orientable", "T_coherence_residual", "trace_table", "pivotal_structures",
          "fusion_homomorphisms", "dy_cochain_dims", "dy_cohomology",
          "dy_contraction"}) {
        INFO(key);
        CHECK(r.contains(key));
    }
    CHECK(r["pivotal_structures"].size() == 1);
    CHECK(!report_to_text(r).empty());
}
