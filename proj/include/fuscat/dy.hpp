#pragma once

#include "structures.hpp"
#include "trees.hpp"

namespace fuscat {

struct DYError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// left-comb fold of the given sub-shapes: (((s0 s1) s2) ... )
inline ShapeP fold_shapes(const std::vector<ShapeP>& parts) {
    ShapeP s = parts.at(0);
    for (size_t q = 1; q < parts.size(); ++q) s = node(s, parts[q]);
    return s;
}

inline ShapeP comb_slots(int lo, int hi) { // left comb on leaf slots lo..hi
    std::vector<ShapeP> parts;
    for (int q = lo; q <= hi; ++q) parts.push_back(leaf(q));
    return fold_shapes(parts);
}

// path of the q-th item in a left-comb fold of `count` items
inline Path comb_item_path(int count, int q) {
    Path p;
    if (q == 0) {
        for (int r = 0; r < count - 1; ++r) p.push_back(0);
    } else {
        for (int r = 0; r < count - 1 - q; ++r) p.push_back(0);
        p.push_back(1);
    }
    return p;
}

// extract the subtree of `t` hanging below `prefix` as a standalone tree
inline FusionTree sub_tree(const FusionTree& t, const ShapeP& shape,
                           const std::vector<int>& leaves, const Path& prefix,
                           int& rootLabel) {
    ShapeP sub = subtree(shape, prefix);
    FusionTree out;
    if (sub->is_leaf()) {
        rootLabel = leaves[sub->leaf];
        out.root_label = rootLabel;
        out.nodes[{}] = {rootLabel, 0};
        return out;
    }
    for (const auto& [p, lv] : t.nodes) {
        if (p.size() < prefix.size()) continue;
        if (!std::equal(prefix.begin(), prefix.end(), p.begin())) continue;
        Path rest(p.begin() + prefix.size(), p.end());
        out.nodes[rest] = lv;
    }
    rootLabel = out.nodes.at({}).first;
    out.root_label = rootLabel;
    return out;
}

} // namespace detail

// One tuple's summand of C^n: End of the left-comb hom spaces, root by root.
struct TupleBlock {
    std::vector<int> tuple;
    std::vector<FusionTree> basis;          // left-comb tree basis (empty if n=0)
    std::map<int, std::vector<int>> rootPos; // root label -> basis positions
    std::map<FusionTree, int> seqInRoot;     // tree -> position within its root list
    size_t offset = 0;                       // flat offset of this End block
    std::map<int, size_t> rootOffset;        // root -> offset of its k x k block

    size_t endDim() const {
        size_t s = 0;
        for (auto& [t, v] : rootPos) s += v.size() * v.size();
        return s;
    }
    // flat coordinate of matrix entry (a,b) in the root-t block
    size_t coord(int t, int a, int b) const {
        const auto& v = rootPos.at(t);
        return offset + rootOffset.at(t) + size_t(a) * v.size() + b;
    }
};

struct CochainSpace {
    int n = 0;
    std::vector<TupleBlock> blocks; // all L^n tuples in lex order
    std::map<std::vector<int>, int> blockIndex;
    size_t dim = 0;
};

inline CochainSpace cochain_space(const FusionCategoryData& data, int n) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    CochainSpace cs;
    cs.n = n;
    std::vector<std::vector<int>> tuples{{}};
    for (int q = 0; q < n; ++q) {
        std::vector<std::vector<int>> next;
        for (auto& t : tuples)
            for (int j = 0; j < L; ++j) {
                auto u = t;
                u.push_back(j);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    size_t off = 0;
    for (auto& t : tuples) {
        TupleBlock tb;
        tb.tuple = t;
        tb.offset = off;
        if (n == 0) {
            tb.rootPos[ring.unit] = {0};
            tb.rootOffset[ring.unit] = 0;
            off += 1;
        } else {
            tb.basis = tree_basis(ring, left_comb(n), t);
            for (size_t q = 0; q < tb.basis.size(); ++q) {
                auto& v = tb.rootPos[tb.basis[q].root_label];
                tb.seqInRoot[tb.basis[q]] = static_cast<int>(v.size());
                v.push_back(static_cast<int>(q));
            }
            size_t local = 0;
            for (auto& [root, v] : tb.rootPos) {
                tb.rootOffset[root] = local;
                local += v.size() * v.size();
            }
            off += local;
        }
        cs.blockIndex[t] = static_cast<int>(cs.blocks.size());
        cs.blocks.push_back(std::move(tb));
    }
    cs.dim = off;
    return cs;
}

// Full Davydov-Yetter tangent complex up to degree maxDeg, with the individual
// coface maps, the differentials, and the contracting homotopy chi.
struct DYComplex {
    int maxDeg = 0;
    std::vector<CochainSpace> C;        // C[0..maxDeg]
    std::vector<std::vector<Mat>> face; // face[n][k]: C^n -> C^{n+1}, k=0..n+1
    std::vector<Mat> d;                 // d[n] = sum (-1)^k face[n][k]
    std::vector<Mat> chi;               // chi[n]: C^{n+1} -> C^n
};

namespace detail {

// Scatter Winv * D(psi) * W into the face/chi matrix M: for each structurally
// matched pair (u,v) of intermediate-basis trees mapping to the input
// coordinate (tuple', root', su, sv), add the outer product of Winv entries at
// output coordinates with matching root labels.
struct Scatter {
    Mat& M;
    const CochainSpace& out;     // target cochain space
    const TupleBlock& outBlock;  // tuple block receiving the output
    const Mat& Winv;             // intermediate -> output-basis change
    const Mat& W;                // output-basis -> intermediate
    cplx weight;

    void add(int u, int v, const CochainSpace& in, const std::vector<int>& inTuple,
             int inRoot, int su, int sv) const {
        const TupleBlock& ib = in.blocks[in.blockIndex.at(inTuple)];
        size_t col = ib.coord(inRoot, su, sv);
        for (auto& [t, pos] : outBlock.rootPos) {
            for (size_t a = 0; a < pos.size(); ++a)
                for (size_t b = 0; b < pos.size(); ++b) {
                    cplx val = weight * Winv(pos[a], u) * W(v, pos[b]);
                    if (val != cplx(0)) M(outBlock.coord(t, int(a), int(b)), col) += val;
                }
        }
    }
};

} // namespace detail

inline DYComplex build_dy_complex(const FusionCategoryData& data, int maxDeg) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    DimensionTable dt = dimension_table(data);
    DYComplex dy;
    dy.maxDeg = maxDeg;
    for (int n = 0; n <= maxDeg; ++n) dy.C.push_back(cochain_space(data, n));

    // ---- coface maps ----
    dy.face.resize(maxDeg);
    for (int n = 0; n + 1 <= maxDeg; ++n) {
        const CochainSpace& src = dy.C[n];
        const CochainSpace& dst = dy.C[n + 1];
        dy.face[n].assign(n + 2, Mat::Zero(dst.dim, src.dim));
        if (n == 0) {
            // f_0 = f_1: 1 -> id on every object
            for (auto& tb : dst.blocks) {
                int j = tb.tuple[0];
                size_t c = tb.coord(j, 0, 0);
                dy.face[0][0](c, 0) = 1.0;
                dy.face[0][1](c, 0) = 1.0;
            }
            continue;
        }
        for (const TupleBlock& tb : dst.blocks) {
            const auto& J = tb.tuple; // n+1 labels
            if (tb.basis.empty()) continue;
            ShapeP lc = left_comb(n + 1);
            int dimJ = static_cast<int>(tb.basis.size());
            Mat I = Mat::Identity(dimJ, dimJ);

            for (int k = 0; k <= n + 1; ++k) {
                ShapeP mid;
                Path actPrefix;        // where the acted-on subtree lives
                Path fusedPath;        // middle faces: the fused vertex node
                std::vector<int> inTuple;
                if (k == 0) {
                    mid = node(leaf(0), detail::comb_slots(1, n));
                    actPrefix = {1};
                    inTuple.assign(J.begin() + 1, J.end());
                } else if (k == n + 1) {
                    mid = lc; // (LC on 0..n-1) with leaf n appended
                    actPrefix = {0};
                    inTuple.assign(J.begin(), J.end() - 1);
                } else {
                    std::vector<ShapeP> parts;
                    for (int q = 0; q <= n; ++q) {
                        if (q == k - 1) {
                            parts.push_back(node(leaf(k - 1), leaf(k)));
                            ++q;
                        } else parts.push_back(leaf(q));
                    }
                    mid = detail::fold_shapes(parts);
                    fusedPath = detail::comb_item_path(n, k - 1);
                    inTuple = J;
                    inTuple.erase(inTuple.begin() + k);
                    inTuple[k - 1] = -1; // filled per fused label below
                }

                Mat W = same_shape(mid, lc) ? I : transfer(data, lc, mid, J);
                Mat Winv = same_shape(mid, lc) ? I : W.inverse();
                auto midBasis = tree_basis(ring, mid, J);
                detail::Scatter sc{dy.face[n][k], dst, tb, Winv, W, cplx(1.0)};

                for (int u = 0; u < (int)midBasis.size(); ++u)
                    for (int v = 0; v < (int)midBasis.size(); ++v) {
                        const FusionTree& tu = midBasis[u];
                        const FusionTree& tv = midBasis[v];
                        if (k >= 1 && k <= n) {
                            if (tu.nodes.at(fusedPath) != tv.nodes.at(fusedPath))
                                continue;
                            int p = tu.nodes.at(fusedPath).first;
                            FusionTree su = tu, svt = tv;
                            su.nodes.erase(fusedPath);
                            svt.nodes.erase(fusedPath);
                            if (n == 1) { // skeleton is a bare strand
                                su.nodes[{}] = {p, 0}; su.root_label = p;
                                svt.nodes[{}] = {p, 0}; svt.root_label = p;
                            }
                            auto tupleP = inTuple;
                            tupleP[k - 1] = p;
                            const TupleBlock& ib =
                                src.blocks[src.blockIndex.at(tupleP)];
                            auto iu = ib.seqInRoot.find(su);
                            auto iv = ib.seqInRoot.find(svt);
                            if (iu == ib.seqInRoot.end() || iv == ib.seqInRoot.end())
                                throw DYError("skeleton tree not found");
                            if (su.root_label != svt.root_label) continue;
                            sc.add(u, v, src, tupleP, su.root_label,
                                   iu->second, iv->second);
                        } else {
                            // outer faces: delta on root data + the spectator leaf
                            if (tu.root_label != tv.root_label) continue;
                            if (tu.nodes.at({}) != tv.nodes.at({})) continue;
                            int mu, mv;
                            FusionTree su = detail::sub_tree(tu, mid, J, actPrefix, mu);
                            FusionTree svt = detail::sub_tree(tv, mid, J, actPrefix, mv);
                            if (mu != mv) continue;
                            const TupleBlock& ib =
                                src.blocks[src.blockIndex.at(inTuple)];
                            auto iu = ib.seqInRoot.find(su);
                            auto iv = ib.seqInRoot.find(svt);
                            if (iu == ib.seqInRoot.end() || iv == ib.seqInRoot.end())
                                throw DYError("spectator sub-tree not found");
                            sc.add(u, v, src, inTuple, mu, iu->second, iv->second);
                        }
                    }
            }
        }
    }

    // ---- differentials ----
    for (int n = 0; n + 1 <= maxDeg; ++n) {
        Mat D = Mat::Zero(dy.C[n + 1].dim, dy.C[n].dim);
        for (int k = 0; k <= n + 1; ++k)
            D += double(k % 2 == 0 ? 1 : -1) * dy.face[n][k];
        dy.d.push_back(std::move(D));
    }

    // ---- contracting homotopy ----
    for (int n = 0; n + 1 <= maxDeg; ++n) {
        const CochainSpace& src = dy.C[n + 1];
        const CochainSpace& dst = dy.C[n];
        Mat X = Mat::Zero(dst.dim, src.dim);
        if (n == 0) {
            // chi(phi) = (1/D) sum_p d_p^2 phi_{(p)}
            for (int p = 0; p < L; ++p) {
                const TupleBlock& ib = src.blocks[src.blockIndex.at({p})];
                X(0, ib.coord(p, 0, 0)) =
                    dt.fusion[p] * dt.fusion[p] / dt.globalDim;
            }
            dy.chi.push_back(std::move(X));
            continue;
        }
        for (const TupleBlock& tb : dst.blocks) {
            const auto& J = tb.tuple; // n labels
            if (tb.basis.empty()) continue;
            for (int p = 0; p < L; ++p) {
                int ps = ring.dual[p];
                // closure leaves: (p*, p, j1..jn) on slots 0..n+1
                std::vector<int> Jc;
                Jc.push_back(ps); Jc.push_back(p);
                Jc.insert(Jc.end(), J.begin(), J.end());
                ShapeP Sc = node(node(leaf(0), leaf(1)), detail::comb_slots(2, n + 1));
                ShapeP Sp = node(leaf(0), detail::comb_slots(1, n + 1));
                auto scBasis = tree_basis(ring, Sc, Jc);
                auto spBasis = tree_basis(ring, Sp, Jc);
                std::map<FusionTree, int> scIdx;
                for (size_t q = 0; q < scBasis.size(); ++q)
                    scIdx[scBasis[q]] = static_cast<int>(q);
                Mat W = transfer(data, Sc, Sp, Jc);
                Mat Winv = W.inverse();

                // embed each LC(J) basis tree as a closed-off Sc tree
                std::vector<int> embed(tb.basis.size(), -1);
                for (size_t q = 0; q < tb.basis.size(); ++q) {
                    const FusionTree& x = tb.basis[q];
                    FusionTree X2;
                    X2.root_label = x.root_label;
                    X2.nodes[{}] = {x.root_label, 0};
                    X2.nodes[{0}] = {ring.unit, 0};
                    if (n >= 2)
                        for (const auto& [pp, lv] : x.nodes) {
                            Path np{1};
                            np.insert(np.end(), pp.begin(), pp.end());
                            X2.nodes[np] = lv;
                        }
                    auto it = scIdx.find(X2);
                    if (it == scIdx.end()) throw DYError("closure tree not found");
                    embed[q] = it->second;
                }

                std::vector<int> inTuple = Jc; // (p, j1..jn) acted on by phi
                inTuple.erase(inTuple.begin());
                const TupleBlock& ib = src.blocks[src.blockIndex.at(inTuple)];
                double wgt = dt.fusion[p] * dt.fusion[p] / dt.globalDim;

                for (int u = 0; u < (int)spBasis.size(); ++u)
                    for (int v = 0; v < (int)spBasis.size(); ++v) {
                        const FusionTree& tu = spBasis[u];
                        const FusionTree& tv = spBasis[v];
                        if (tu.root_label != tv.root_label) continue;
                        if (tu.nodes.at({}) != tv.nodes.at({})) continue;
                        int mu, mv;
                        FusionTree su = detail::sub_tree(tu, Sp, Jc, {1}, mu);
                        FusionTree svt = detail::sub_tree(tv, Sp, Jc, {1}, mv);
                        if (mu != mv) continue;
                        auto iu = ib.seqInRoot.find(su);
                        auto iv = ib.seqInRoot.find(svt);
                        if (iu == ib.seqInRoot.end() || iv == ib.seqInRoot.end())
                            throw DYError("closure sub-tree not found");
                        size_t col = ib.coord(mu, iu->second, iv->second);
                        for (auto& [t, pos] : tb.rootPos)
                            for (size_t a = 0; a < pos.size(); ++a)
                                for (size_t b = 0; b < pos.size(); ++b) {
                                    cplx val = wgt * Winv(embed[pos[a]], u) *
                                               W(v, embed[pos[b]]);
                                    if (val != cplx(0))
                                        X(tb.coord(t, int(a), int(b)), col) += val;
                                }
                    }
            }
        }
        dy.chi.push_back(std::move(X));
    }
    return dy;
}

inline double mat_norm(const Mat& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// H^n = dim ker d^n - rank d^{n-1}, ranks by SVD with a relative threshold.
struct CohomologyDim {
    int dim = 0;
    bool ambiguous = false; // singular values within a decade of the cut
};

inline CohomologyDim cohomology_dim(const DYComplex& dy, int n, double tol = 1e-9) {
    if (n < 1 || n >= (int)dy.d.size())
        throw DYError("cohomology degree out of built range");
    auto rank_of = [&](const Mat& m, bool& amb) {
        if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) return 0;
        Eigen::JacobiSVD<Mat> svd(m);
        const auto& s = svd.singularValues();
        double cut = tol * s(0) * std::max<double>(m.rows(), m.cols());
        int r = 0;
        for (Eigen::Index q = 0; q < s.size(); ++q) {
            if (s(q) > cut) ++r;
            if (s(q) > cut / 10.0 && s(q) < cut * 10.0) amb = true;
        }
        return r;
    };
    CohomologyDim out;
    int rk_dn = rank_of(dy.d[n], out.ambiguous);
    int rk_dprev = rank_of(dy.d[n - 1], out.ambiguous);
    out.dim = static_cast<int>(dy.C[n].dim) - rk_dn - rk_dprev;
    return out;
}

struct ContractionReport {
    std::vector<double> dd;         // ||d^{n} d^{n-1}|| for n = 1..
    std::vector<double> chiF0;      // ||chi f_0 - id|| per degree
    std::vector<double> handleslide;// ||chi f_1 - f_0 chi||
    std::vector<double> chiShift;   // max_k ||chi f_k - f_{k-1} chi||, k >= 2
    std::vector<double> homotopy;   // ||d chi + chi d - id|| on C^n, n = 1..
};

inline ContractionReport verify_contracting(const DYComplex& dy) {
    ContractionReport rep;
    for (size_t n = 1; n < dy.d.size(); ++n)
        rep.dd.push_back(mat_norm(dy.d[n] * dy.d[n - 1]));
    for (size_t n = 0; n < dy.chi.size(); ++n) {
        Mat I = Mat::Identity(dy.C[n].dim, dy.C[n].dim);
        rep.chiF0.push_back(mat_norm(dy.chi[n] * dy.face[n][0] - I));
        if (n >= 1) {
            rep.handleslide.push_back(
                mat_norm(dy.chi[n] * dy.face[n][1] - dy.face[n - 1][0] * dy.chi[n - 1]));
            double worst = 0.0;
            for (size_t k = 2; k < dy.face[n].size(); ++k)
                worst = std::max(worst,
                                 mat_norm(dy.chi[n] * dy.face[n][k] -
                                          dy.face[n - 1][k - 1] * dy.chi[n - 1]));
            rep.chiShift.push_back(worst);
        }
    }
    for (size_t n = 1; n + 1 <= dy.chi.size(); ++n) {
        Mat I = Mat::Identity(dy.C[n].dim, dy.C[n].dim);
        rep.homotopy.push_back(
            mat_norm(dy.d[n - 1] * dy.chi[n - 1] + dy.chi[n] * dy.d[n] - I));
    }
    return rep;
}

} // namespace fuscat
