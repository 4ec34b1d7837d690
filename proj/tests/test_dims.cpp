#include "helpers.hpp"

using namespace fuscat;

TEST_CASE("trivial dimensions") {
    auto dt = dimension_table(th::load("trivial"));
    CHECK(dt.fp[0] == Catch::Approx(1.0));
    CHECK(dt.fusion[0] == Catch::Approx(1.0));
    CHECK(dt.globalDim == Catch::Approx(1.0));
    CHECK(dt.pseudoUnitary);
}

TEST_CASE("yang_lee dimensions") {
    auto dt = dimension_table(th::load("yang_lee"));
    double phi = th::PHI;
    CHECK(dt.fp[1] == Catch::Approx(phi).epsilon(1e-12));
    CHECK(dt.fusion[1] == Catch::Approx(phi - 1.0).epsilon(1e-12));
    CHECK(dt.a[1].real() == Catch::Approx(-phi).epsilon(1e-12));
    CHECK(std::abs(dt.a[1].imag()) < 1e-12);
    CHECK(dt.paired[1].real() == Catch::Approx(2.0 - phi).epsilon(1e-12));
    CHECK(dt.globalDim == Catch::Approx((5.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(dt.fpDim == Catch::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK_FALSE(dt.pseudoUnitary);
}

TEST_CASE("e6 dimensions") {
    auto dt = dimension_table(th::load("e6"));
    double r3 = std::sqrt(3.0);
    CHECK(dt.fp[1] == Catch::Approx(1.0 + r3).epsilon(1e-12));
    CHECK(dt.fp[2] == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(dt.fusion[1] == Catch::Approx(1.0 + r3).epsilon(1e-12));
    CHECK(dt.fusion[2] == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(dt.a[1].real() == Catch::Approx(1.0 / (1.0 + r3)).epsilon(1e-12));
    CHECK(dt.globalDim == Catch::Approx(6.0 + 2.0 * r3).epsilon(1e-12));
    CHECK(dt.fpDim == Catch::Approx(6.0 + 2.0 * r3).epsilon(1e-12));
    CHECK(dt.pseudoUnitary);
}

TEST_CASE("paired dimensions are positive reals") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto dt = dimension_table(th::load(name));
        INFO(name);
        for (auto& z : dt.paired) {
            CHECK(std::abs(z.imag()) < 1e-9);
            CHECK(z.real() > 0.0);
        }
    }
}

TEST_CASE("fusion dimensions respect duality") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto data = th::load(name);
        auto dt = dimension_table(data);
        for (int i = 0; i < data.ring.size(); ++i)
            CHECK(dt.fusion[i] == Catch::Approx(dt.fusion[data.ring.dual[i]]));
    }
}
