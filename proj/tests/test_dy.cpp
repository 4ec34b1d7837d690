#include "helpers.hpp"

using namespace fuscat;

TEST_CASE("cochain dimensions") {
    auto dims = [](const char* name, int maxDeg) {
        auto fair = th::load_fair(name);
        std::vector<size_t> out;
        for (int n = 0; n <= maxDeg; ++n) out.push_back(cochain_space(fair, n).dim);
        return out;
    };
    CHECK(dims("trivial", 4) == std::vector<size_t>({1, 1, 1, 1, 1}));
    CHECK(dims("yang_lee", 4) == std::vector<size_t>({1, 2, 5, 15, 50}));
    CHECK(dims("e6", 4) == std::vector<size_t>({1, 3, 14, 100, 872}));
}

TEST_CASE("differential squares to zero") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto dy = build_dy_complex(th::load_fair(name), 4);
        INFO(name);
        for (size_t n = 1; n < dy.d.size(); ++n)
            CHECK(mat_norm(dy.d[n] * dy.d[n - 1]) < 1e-9);
    }
}

TEST_CASE("cohomology vanishes in degrees 1 to 3") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto dy = build_dy_complex(th::load_fair(name), 4);
        INFO(name);
        for (int n = 1; n <= 3; ++n) {
            auto h = cohomology_dim(dy, n);
            CHECK(h.dim == 0);
            CHECK_FALSE(h.ambiguous);
        }
    }
}

TEST_CASE("contracting homotopy identities") {
    for (const char* name : {"trivial", "yang_lee", "e6"}) {
        auto dy = build_dy_complex(th::load_fair(name), 3);
        auto rep = verify_contracting(dy);
        INFO(name);
        for (double v : rep.chiF0) CHECK(v < 1e-8);       // chi f_0 = id
        for (double v : rep.handleslide) CHECK(v < 1e-8); // chi f_1 = f_0 chi
        for (double v : rep.chiShift) CHECK(v < 1e-8);    // chi f_k = f_{k-1} chi
        for (double v : rep.homotopy) CHECK(v < 1e-8);    // d chi + chi d = id
    }
}

TEST_CASE("chi agrees with an independent move word") {
    // recompute the degree-1 homotopy with the closure transfer routed through
    // an explicitly chosen different intermediate shape and compare
    auto fair = th::load_fair("yang_lee");
    auto dy = build_dy_complex(fair, 2);
    const FusionRing& ring = fair.ring;
    DimensionTable dt = dimension_table(fair);
    CochainSpace C1 = cochain_space(fair, 1);
    CochainSpace C2 = cochain_space(fair, 2);
    Mat X = Mat::Zero(C1.dim, C2.dim);
    for (const TupleBlock& tb : C1.blocks) {
        int j1 = tb.tuple[0];
        for (int p = 0; p < ring.size(); ++p) {
            int ps = ring.dual[p];
            std::vector<int> Jc = {ps, p, j1};
            ShapeP Sc = node(node(leaf(0), leaf(1)), leaf(2));
            ShapeP Sp = node(leaf(0), node(leaf(1), leaf(2)));
            // independent word: one split move directly (no right-comb routing)
            auto mv = split_move(fair, Sc, Jc, {});
            REQUIRE(same_shape(mv.shape, Sp));
            Mat W = mv.matrix;
            Mat Winv = W.inverse();
            auto scBasis = tree_basis(ring, Sc, Jc);
            auto spBasis = tree_basis(ring, Sp, Jc);
            int embed = -1;
            for (size_t q = 0; q < scBasis.size(); ++q) {
                const auto& t = scBasis[q];
                if (t.root_label == j1 && t.nodes.at({0}).first == ring.unit)
                    embed = static_cast<int>(q);
            }
            REQUIRE(embed >= 0);
            const TupleBlock& ib = C2.blocks[C2.blockIndex.at({p, j1})];
            double wgt = dt.fusion[p] * dt.fusion[p] / dt.globalDim;
            for (int u = 0; u < (int)spBasis.size(); ++u)
                for (int v = 0; v < (int)spBasis.size(); ++v) {
                    const auto& tu = spBasis[u];
                    const auto& tv = spBasis[v];
                    if (tu.root_label != tv.root_label) continue;
                    if (tu.nodes.at({}) != tv.nodes.at({})) continue;
                    int mu = tu.nodes.at({1}).first, mv2 = tv.nodes.at({1}).first;
                    if (mu != mv2) continue;
                    int su = tu.nodes.at({1}).second, sv = tv.nodes.at({1}).second;
                    // vertex index within the root-mu sublist = the tuple's own
                    // left-comb basis position for 2 leaves
                    const auto& pos = ib.rootPos.at(mu);
                    int iu = -1, iv = -1;
                    for (size_t q = 0; q < pos.size(); ++q) {
                        const auto& bt = ib.basis[pos[q]];
                        if (bt.nodes.at({}).second == su) iu = (int)q;
                        if (bt.nodes.at({}).second == sv) iv = (int)q;
                    }
                    REQUIRE(iu >= 0);
                    REQUIRE(iv >= 0);
                    X(tb.coord(j1, 0, 0), ib.coord(mu, iu, iv)) +=
                        wgt * Winv(embed, u) * W(v, embed);
                }
        }
    }
    CHECK(mat_norm(X - dy.chi[1]) < 1e-10);
}

TEST_CASE("linear 2-cochains built from scalars are cocycles") {
    auto fair = th::load_fair("yang_lee");
    auto dy = build_dy_complex(fair, 3);
    const CochainSpace& C2 = dy.C[2];
    std::vector<double> c = {0.3, -1.7}; // arbitrary per-label scalars
    Vec psi = Vec::Zero(C2.dim);
    for (const TupleBlock& tb : C2.blocks) {
        int i = tb.tuple[0], j = tb.tuple[1];
        for (auto& [t, pos] : tb.rootPos)
            for (size_t a = 0; a < pos.size(); ++a)
                psi(tb.coord(t, int(a), int(a))) = c[i] + c[j] - c[t];
    }
    CHECK((dy.d[2] * psi).cwiseAbs().maxCoeff() < 1e-9);
    // and, since H^2 = 0, it is a coboundary of the matching 1-cochain
    const CochainSpace& C1 = dy.C[1];
    Vec phi = Vec::Zero(C1.dim);
    for (const TupleBlock& tb : C1.blocks)
        phi(tb.coord(tb.tuple[0], 0, 0)) = c[tb.tuple[0]];
    CHECK((dy.d[1] * phi - psi).cwiseAbs().maxCoeff() < 1e-9);
}
