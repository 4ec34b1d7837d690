#include "helpers.hpp"

using namespace fuscat;

TEST_CASE("yang_lee apex data") {
    auto fair = th::load_fair("yang_lee");
    auto p = pivotal_indicators(fair);
    CHECK(p == std::vector<int>({1, -1}));
    Mat S = apex_associator(fair, 1, 1, 1);
    REQUIRE(S.rows() == 1);
    CHECK(std::abs(S(0, 0) - cplx(1.0)) < 1e-12);
    Mat T = pivotal_operator(fair, p, 1, 1, 1);
    CHECK(std::abs(T(0, 0) - cplx(-1.0)) < 1e-12);
    Mat T0 = pivotal_operator(fair, p, 0, 1, 1);
    CHECK(std::abs(T0(0, 0) - cplx(1.0)) < 1e-12);
}

TEST_CASE("e6 apex data") {
    auto fair = th::load_fair("e6");
    auto p = pivotal_indicators(fair);
    CHECK(p == std::vector<int>({1, 1, 1}));
    Mat S = apex_associator(fair, 1, 1, 1);
    REQUIRE(S.rows() == 2);
    cplx w = std::exp(cplx(0.0, 7.0 * M_PI / 12.0)) / std::sqrt(2.0);
    Mat target(2, 2);
    target << w, w * cplx(0, -1), -w, w * cplx(0, -1);
    CHECK((S - target).cwiseAbs().maxCoeff() < 1e-9);
    Mat A = apex_monodromy(fair, 1, 1, 1);
    CHECK((A - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                int n = fair.ring.N(i, j, k);
                if (!n) continue;
                Mat T = pivotal_operator(fair, p, i, j, k);
                CHECK((T - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
            }
}

TEST_CASE("pivotal operators are involutions") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto rep = pivotal_report(th::load_fair(name));
        INFO(name);
        CHECK(rep.involutionResidual < 1e-9);
    }
}

TEST_CASE("trace identities") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto rep = pivotal_report(th::load_fair(name));
        INFO(name);
        CHECK(rep.homResidual < 1e-9);
        CHECK(rep.symResidual < 1e-9);
    }
}

TEST_CASE("trace table oracles") {
    auto rep = pivotal_report(th::load_fair("yang_lee"));
    CHECK(std::abs(rep.traceT.at({0, 1, 1}) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(rep.traceT.at({1, 1, 1}) - cplx(-1.0)) < 1e-12);
    auto rep6 = pivotal_report(th::load_fair("e6"));
    // all T = id, so traces equal multiplicities
    auto& r6 = rep6;
    auto fair = th::load_fair("e6");
    for (auto& [key, tr] : r6.traceT)
        CHECK(std::abs(tr - cplx(double(fair.ring.N(key[0], key[1], key[2])))) < 1e-9);
}

TEST_CASE("bundled categories are orientable and T-coherent") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto fair = th::load_fair(name);
        INFO(name);
        CHECK(pivotal_report(fair).orientable);
        CHECK(check_T_coherence(fair) < 1e-9);
    }
}

TEST_CASE("eigenbasis splits T with + before -") {
    auto fair = th::load_fair("yang_lee");
    auto p = pivotal_indicators(fair);
    Mat T = pivotal_operator(fair, p, 1, 1, 1);
    auto [G, sym] = pivotal_eigenbasis(T, 1e-9);
    REQUIRE(sym.size() == 1);
    CHECK(sym[0] == -1);
    Mat D = G.inverse() * T * G;
    CHECK(std::abs(D(0, 0) - cplx(-1.0)) < 1e-9);
}

TEST_CASE("root-sign flips rescale T by exactly x_i x_j x_k") {
    auto fair = th::load_fair("yang_lee");
    auto p = pivotal_indicators(fair);
    std::vector<int> x = {1, -1}; // flip the root choice at tau
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (!fair.ring.N(i, j, k)) continue;
                Mat T = pivotal_operator(fair, p, i, j, k);
                Mat Tx = pivotal_operator(fair, p, i, j, k, &x);
                double fac = double(x[i] * x[j] * x[k]);
                CHECK((Tx - fac * T).cwiseAbs().maxCoeff() == 0.0);
            }
}
