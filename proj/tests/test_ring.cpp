#include "helpers.hpp"

using namespace fuscat;

TEST_CASE("bundled rings satisfy the fusion ring axioms") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto data = th::load(name);
        auto rep = validate_ring(data.ring);
        INFO(name);
        for (auto& v : rep.violations) INFO(v.what);
        CHECK(rep.ok());
    }
}

TEST_CASE("yang_lee ring shape") {
    auto data = th::load("yang_lee");
    REQUIRE(data.ring.size() == 2);
    CHECK(data.ring.unit == 0);
    CHECK(data.ring.dual == std::vector<int>({0, 1}));
    CHECK(data.ring.N(1, 1, 1) == 1); // tau x tau = 1 + tau
    CHECK(data.ring.N(0, 1, 1) == 1);
}

TEST_CASE("e6 ring shape") {
    auto data = th::load("e6");
    REQUIRE(data.ring.size() == 3);
    CHECK(data.ring.N(1, 1, 1) == 2); // x x = 1 + 2x + y
    CHECK(data.ring.N(2, 1, 1) == 1);
    CHECK(data.ring.N(0, 2, 2) == 1); // y y = 1
    CHECK(data.ring.N(1, 1, 2) == 1); // x y = x
}

TEST_CASE("ring violations are detected") {
    auto data = th::load("yang_lee");

    SECTION("broken dual involution") {
        auto r = data.ring;
        r.dual = {1, 0}; // dual(unit) != unit
        CHECK_FALSE(validate_ring(r).ok());
    }
    SECTION("broken associativity") {
        // drop y from x*x in the three-label ring: (xx)y != x(xy)
        auto r = th::load("e6").ring;
        r.N(2, 1, 1) = 0;
        auto rep = validate_ring(r);
        CHECK_FALSE(rep.ok());
        bool assoc = false;
        for (auto& v : rep.violations)
            if (v.what.find("associativity") != std::string::npos) assoc = true;
        CHECK(assoc);
    }
    SECTION("broken unit constraint") {
        auto r = data.ring;
        r.N(1, 0, 1) = 0;
        CHECK_FALSE(validate_ring(r).ok());
    }
}

TEST_CASE("loader rejects bad input") {
    CHECK_THROWS_AS(load_category("data/does_not_exist.json"), LoadError);
}

TEST_CASE("loader rejects truncated block tables") {
    auto data = th::load("yang_lee");
    data.blocks.erase({1, 1, 1, 1});
    save_category(data, "/tmp/fuscat_truncated.json");
    CHECK_THROWS_AS(load_category("/tmp/fuscat_truncated.json"), LoadError);
}
