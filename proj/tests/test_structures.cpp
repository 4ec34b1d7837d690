#include "helpers.hpp"

using namespace fuscat;

TEST_CASE("smith form diagonalizes with unimodular factors") {
    IMat A(3, 2);
    A << 2, 4, 6, 8, 10, 12;
    auto s = smith_form(A);
    IMat lhs = s.U * A * s.V;
    CHECK(lhs == s.D);
    for (Eigen::Index r = 0; r < s.D.rows(); ++r)
        for (Eigen::Index c = 0; c < s.D.cols(); ++c)
            if (r != c) CHECK(s.D(r, c) == 0);
    CHECK(s.rank == 2);
}

// brute-force search over fourth-root tuples for comparison with the solver
static std::vector<std::vector<cplx>> brute_pivotal(const FusionCategoryData& fair) {
    const FusionRing& ring = fair.ring;
    int L = ring.size();
    auto p = pivotal_indicators(fair);
    std::vector<cplx> roots = {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
    std::vector<std::vector<cplx>> hits;
    std::vector<int> pick(L, 0);
    for (long long idx = 0; idx < (long long)std::pow(4, L); ++idx) {
        long long rem = idx;
        std::vector<cplx> g(L);
        for (int q = 0; q < L; ++q) { g[q] = roots[rem % 4]; rem /= 4; }
        bool ok = true;
        for (int i = 0; i < L && ok; ++i)
            for (int j = 0; j < L && ok; ++j)
                for (int k = 0; k < L && ok; ++k) {
                    int n = ring.N(i, j, k);
                    if (!n) continue;
                    Mat T = pivotal_operator(fair, p, i, j, k);
                    cplx eps = T(0, 0);
                    if (std::abs(g[j] * g[k] / g[i] - eps) > 1e-9) ok = false;
                }
        if (ok) hits.push_back(std::move(g));
    }
    return hits;
}

static bool same_solution_set(const std::vector<std::vector<cplx>>& a,
                              const std::vector<std::vector<cplx>>& b) {
    if (a.size() != b.size()) return false;
    for (auto& x : a) {
        bool found = false;
        for (auto& y : b) {
            bool eq = true;
            for (size_t q = 0; q < x.size(); ++q)
                if (std::abs(x[q] - y[q]) > 1e-9) eq = false;
            if (eq) found = true;
        }
        if (!found) return false;
    }
    return true;
}

TEST_CASE("pivotal structure solver oracles") {
    SECTION("trivial") {
        auto fair = th::load_fair("trivial");
        auto r = solve_pivotal(fair);
        REQUIRE(r.consistent);
        REQUIRE(r.solutions.size() == 1);
        CHECK(std::abs(r.solutions[0][0] - cplx(1.0)) < 1e-12);
        CHECK(r.spherical[0]);
    }
    SECTION("yang_lee") {
        auto fair = th::load_fair("yang_lee");
        auto r = solve_pivotal(fair);
        REQUIRE(r.consistent);
        REQUIRE(r.solutions.size() == 1);
        CHECK(std::abs(r.solutions[0][0] - cplx(1.0)) < 1e-12);
        CHECK(std::abs(r.solutions[0][1] - cplx(-1.0)) < 1e-12);
        CHECK(r.spherical[0]);
        CHECK(same_solution_set(r.solutions, brute_pivotal(fair)));
    }
    SECTION("e6") {
        auto fair = th::load_fair("e6");
        auto r = solve_pivotal(fair);
        REQUIRE(r.consistent);
        REQUIRE(r.solutions.size() == 1);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(r.solutions[0][i] - cplx(1.0)) < 1e-12);
        CHECK(r.spherical[0]);
        CHECK(same_solution_set(r.solutions, brute_pivotal(fair)));
    }
}

TEST_CASE("quantum dimensions") {
    auto fair = th::load_fair("yang_lee");
    auto dt = dimension_table(fair);
    auto r = solve_pivotal(fair);
    auto q = quantum_dims(dt, r.solutions[0]);
    CHECK(std::abs(q[0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(q[1] - cplx(1.0 - th::PHI)) < 1e-9);
}

TEST_CASE("Frobenius-Schur indicators") {
    SECTION("yang_lee") {
        auto fair = th::load_fair("yang_lee");
        auto r = solve_pivotal(fair);
        auto fs = frobenius_schur(fair, r.solutions[0]);
        CHECK(std::abs(fs.nu2[1] - cplx(1.0)) < 1e-9);
        CHECK(std::abs(fs.nu3[1] - cplx(1.0)) < 1e-9);
    }
    SECTION("e6") {
        auto fair = th::load_fair("e6");
        auto r = solve_pivotal(fair);
        auto fs = frobenius_schur(fair, r.solutions[0]);
        CHECK(std::abs(fs.nu2[1] - cplx(1.0)) < 1e-9);
        CHECK(std::abs(fs.nu2[2] - cplx(1.0)) < 1e-9);
        CHECK(std::abs(fs.nu3[1] - std::exp(cplx(0, M_PI / 3.0))) < 1e-9);
        // y does not appear in y (x) y (x) y, so its cubic indicator vanishes
        CHECK(std::abs(fs.nu3[2]) < 1e-12);
    }
}

TEST_CASE("fusion homomorphisms") {
    SECTION("trivial") {
        auto r = fusion_homomorphisms(th::load_fair("trivial"));
        REQUIRE(r.admissible.size() == 1);
        CHECK(std::abs(r.admissible[0][0] - cplx(1.0)) < 1e-9);
    }
    SECTION("yang_lee") {
        auto r = fusion_homomorphisms(th::load_fair("yang_lee"));
        REQUIRE(r.characters.size() == 2); // f(tau) in {phi, 1 - phi}
        REQUIRE(r.admissible.size() == 1);
        CHECK(std::abs(r.admissible[0][1] - cplx(1.0 - th::PHI)) < 1e-9);
    }
    SECTION("e6") {
        auto r = fusion_homomorphisms(th::load_fair("e6"));
        REQUIRE(r.admissible.size() == 1);
        CHECK(std::abs(r.admissible[0][1] - cplx(1.0 + std::sqrt(3.0))) < 1e-9);
        CHECK(std::abs(r.admissible[0][2] - cplx(1.0)) < 1e-9);
    }
}

TEST_CASE("yang_lee sphericalization") {
    auto fair = th::load_fair("yang_lee");
    auto sr = sphericalize(fair);
    CHECK(sr.leakage < 1e-12);
    REQUIRE(sr.cat.ring.size() == 4);
    CHECK(sr.cat.ring.labels ==
          std::vector<std::string>({"1+", "1-", "tau+", "tau-"}));
    CHECK(validate_ring(sr.cat.ring).ok());
    // fusion rules of the split: indices 0=1+, 1=1-, 2=tau+, 3=tau-
    const FusionRing& r2 = sr.cat.ring;
    CHECK(r2.N(0, 1, 1) == 1); // 1- 1- = 1+
    CHECK(r2.N(3, 2, 1) == 1); // tau+ 1- = tau-
    CHECK(r2.N(2, 3, 1) == 1); // tau- 1- = tau+
    CHECK(r2.N(0, 2, 2) == 1); // tau+ tau+ contains 1+
    CHECK(r2.N(3, 2, 2) == 1); // ... and tau-
    CHECK(r2.N(1, 2, 3) == 1); // tau+ tau- contains 1-
    CHECK(verify_pentagon(sr.cat).max_residual < 1e-9);

    auto [fair2, g2] = make_fair_basis(sr.cat);
    auto dt2 = dimension_table(fair2);
    auto ps2 = solve_pivotal(fair2);
    REQUIRE(ps2.consistent);
    // the canonical structure gamma = sign solves the equations
    bool canonFound = false;
    for (auto& g : ps2.solutions) {
        bool eq = true;
        for (size_t q = 0; q < g.size(); ++q)
            if (std::abs(g[q] - cplx(double(sr.canonicalT[q]))) > 1e-9) eq = false;
        if (eq) canonFound = true;
    }
    CHECK(canonFound);
    std::vector<cplx> canon;
    for (int s : sr.canonicalT) canon.push_back(cplx(double(s)));
    auto q2 = quantum_dims(dt2, canon);
    CHECK(std::abs(q2[2] - cplx(th::PHI - 1.0)) < 1e-9);
    CHECK(std::abs(q2[3] - cplx(1.0 - th::PHI)) < 1e-9);
    // global dimension doubles
    auto dt1 = dimension_table(fair);
    CHECK(dt2.globalDim == Catch::Approx(2.0 * dt1.globalDim).epsilon(1e-9));
}

TEST_CASE("e6 sphericalization doubles the global dimension") {
    auto fair = th::load_fair("e6");
    auto sr = sphericalize(fair);
    CHECK(sr.leakage < 1e-9);
    CHECK(validate_ring(sr.cat.ring).ok());
    CHECK(verify_pentagon(sr.cat).max_residual < 1e-9);
    auto dt1 = dimension_table(fair);
    auto [fair2, g2] = make_fair_basis(sr.cat);
    auto dt2 = dimension_table(fair2);
    CHECK(dt2.globalDim == Catch::Approx(2.0 * dt1.globalDim).epsilon(1e-9));
}
