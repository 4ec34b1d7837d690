#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "category_data.hpp"

namespace fuscat {

// Binary parenthesization shape over n leaves. Leaves carry slot indices so a
// shape can be paired with any tuple of labels.
struct Shape {
    int leaf = -1; // >= 0 for a leaf slot
    std::shared_ptr<const Shape> l, r;

    bool is_leaf() const { return leaf >= 0; }
};
using ShapeP = std::shared_ptr<const Shape>;

inline ShapeP leaf(int slot) {
    auto s = std::make_shared<Shape>();
    s->leaf = slot;
    return s;
}
inline ShapeP node(ShapeP a, ShapeP b) {
    auto s = std::make_shared<Shape>();
    s->l = std::move(a);
    s->r = std::move(b);
    return s;
}

inline bool same_shape(const ShapeP& a, const ShapeP& b) {
    if (a->is_leaf() || b->is_leaf())
        return a->is_leaf() && b->is_leaf() && a->leaf == b->leaf;
    return same_shape(a->l, b->l) && same_shape(a->r, b->r);
}

// ((..(0 1) 2) .. n-1)
inline ShapeP left_comb(int n) {
    ShapeP s = leaf(0);
    for (int k = 1; k < n; ++k) s = node(s, leaf(k));
    return s;
}
// (0 (1 (.. (n-2 n-1))))
inline ShapeP right_comb(int n) {
    ShapeP s = leaf(n - 1);
    for (int k = n - 2; k >= 0; --k) s = node(leaf(k), s);
    return s;
}

using Path = std::vector<int>; // 0 = left child, 1 = right child

inline ShapeP subtree(ShapeP s, const Path& p) {
    for (int d : p) s = d == 0 ? s->l : s->r;
    return s;
}

inline ShapeP replace_at(const ShapeP& s, const Path& p, size_t depth, ShapeP sub) {
    if (depth == p.size()) return sub;
    if (p[depth] == 0) return node(replace_at(s->l, p, depth + 1, std::move(sub)), s->r);
    return node(s->l, replace_at(s->r, p, depth + 1, std::move(sub)));
}

// A fusion tree on a shape: internal nodes carry (label, vertex index) keyed by
// path; the root path is {}. Leaf labels come from the tuple.
struct FusionTree {
    int root_label = 0;
    std::map<Path, std::pair<int, int>> nodes; // path -> (label, vertex)

    bool operator<(const FusionTree& o) const {
        if (root_label != o.root_label) return root_label < o.root_label;
        return nodes < o.nodes;
    }
    bool operator==(const FusionTree& o) const {
        return root_label == o.root_label && nodes == o.nodes;
    }
};

namespace detail {

inline void enum_trees(const FusionRing& ring, const ShapeP& s,
                       const std::vector<int>& leaf_labels, const Path& at,
                       std::vector<std::pair<int, FusionTree>>& out) {
    if (s->is_leaf()) {
        FusionTree t;
        out.push_back({leaf_labels[s->leaf], t});
        return;
    }
    std::vector<std::pair<int, FusionTree>> lt, rt;
    Path pl = at; pl.push_back(0);
    Path pr = at; pr.push_back(1);
    enum_trees(ring, s->l, leaf_labels, pl, lt);
    enum_trees(ring, s->r, leaf_labels, pr, rt);
    for (const auto& [ll, la] : lt)
        for (const auto& [rl, ra] : rt)
            for (int root = 0; root < ring.size(); ++root)
                for (int v = 0; v < ring.N(root, ll, rl); ++v) {
                    FusionTree t;
                    t.nodes = la.nodes;
                    for (const auto& kv : ra.nodes) t.nodes.insert(kv);
                    t.nodes[at] = {root, v};
                    out.push_back({root, t});
                }
}

} // namespace detail

// Deterministic ordered basis of fusion trees on (shape, leaf labels); the
// tree's root label is nodes[{}].first.
inline std::vector<FusionTree> tree_basis(const FusionRing& ring, const ShapeP& s,
                                          const std::vector<int>& leaf_labels) {
    std::vector<std::pair<int, FusionTree>> raw;
    detail::enum_trees(ring, s, leaf_labels, {}, raw);
    std::vector<FusionTree> out;
    out.reserve(raw.size());
    for (auto& [root, t] : raw) {
        t.root_label = root;
        if (s->is_leaf()) t.nodes[{}] = {root, 0}; // degenerate single-leaf case
        out.push_back(std::move(t));
    }
    return out;
}

inline int label_at(const FusionTree& t, const ShapeP& s,
                    const std::vector<int>& leaf_labels, const Path& p) {
    ShapeP sub = subtree(s, p);
    if (sub->is_leaf()) return leaf_labels[sub->leaf];
    return t.nodes.at(p).first;
}

struct MoveResult {
    Mat matrix;   // new-basis coordinates = matrix * old-basis coordinates
    ShapeP shape; // resulting shape
};

// Elementary associator move at `path`, where the subtree has shape A(BC);
// result has shape (AB)C. Uses the stored block directly.
inline MoveResult fuse_move(const FusionCategoryData& data, const ShapeP& shape,
                            const std::vector<int>& leaf_labels, const Path& path) {
    const FusionRing& ring = data.ring;
    ShapeP old_sub = subtree(shape, path);
    ShapeP A = old_sub->l, B = old_sub->r->l, C = old_sub->r->r;
    ShapeP new_shape = replace_at(shape, path, 0, node(node(A, B), C));

    auto oldb = tree_basis(ring, shape, leaf_labels);
    auto newb = tree_basis(ring, new_shape, leaf_labels);
    std::map<FusionTree, int> nidx;
    for (size_t q = 0; q < newb.size(); ++q) nidx[newb[q]] = static_cast<int>(q);

    Path pR = path; pR.push_back(1);
    Path pA = path; pA.push_back(0);
    Path pB = pR;   pB.push_back(0);
    Path pC = pR;   pC.push_back(1);

    Mat M = Mat::Zero(newb.size(), oldb.size());
    for (size_t q = 0; q < oldb.size(); ++q) {
        const FusionTree& t = oldb[q];
        auto [i, alpha] = t.nodes.at(path);
        auto [m, beta] = t.nodes.at(pR);
        int ja = label_at(t, shape, leaf_labels, pA);
        int ka = label_at(t, shape, leaf_labels, pB);
        int la = label_at(t, shape, leaf_labels, pC);
        Mat F = data.f_block(i, ja, ka, la);
        auto rows = block_rows(ring, i, ja, ka, la);
        auto cols = block_cols(ring, i, ja, ka, la);
        int ci = detail::triple_pos(cols, {alpha, m, beta});
        for (size_t ridx = 0; ridx < rows.size(); ++ridx) {
            cplx v = F(ridx, ci);
            if (v == cplx(0)) continue;
            auto [g, n, dl] = rows[ridx];
            // rebuild the tree in the new shape: old paths under `path` move:
            // A-subpaths (0,...) -> (0,0,...); B (1,0,...) -> (0,1,...); C (1,1,...) -> (1,...)
            FusionTree nt;
            nt.root_label = t.root_label;
            for (const auto& [p, lv] : t.nodes) {
                if (p == path || p == pR) continue;
                if (p.size() > path.size() &&
                    std::equal(path.begin(), path.end(), p.begin())) {
                    Path rest(p.begin() + path.size(), p.end());
                    Path np = path;
                    if (rest[0] == 0) {
                        np.push_back(0); np.push_back(0);
                        np.insert(np.end(), rest.begin() + 1, rest.end());
                    } else if (rest.size() >= 2 && rest[1] == 0) {
                        np.push_back(0); np.push_back(1);
                        np.insert(np.end(), rest.begin() + 2, rest.end());
                    } else {
                        np.push_back(1);
                        np.insert(np.end(), rest.begin() + 2, rest.end());
                    }
                    nt.nodes[np] = lv;
                } else {
                    nt.nodes[p] = lv;
                }
            }
            nt.nodes[path] = {i, g};
            Path pAB = path; pAB.push_back(0);
            nt.nodes[pAB] = {n, dl};
            M(nidx.at(nt), q) += v;
        }
    }
    return {std::move(M), std::move(new_shape)};
}

// Inverse move: (AB)C -> A(BC).
inline MoveResult split_move(const FusionCategoryData& data, const ShapeP& shape,
                             const std::vector<int>& leaf_labels, const Path& path) {
    ShapeP old_sub = subtree(shape, path);
    ShapeP A = old_sub->l->l, B = old_sub->l->r, C = old_sub->r;
    ShapeP new_shape = replace_at(shape, path, 0, node(A, node(B, C)));
    MoveResult back = fuse_move(data, new_shape, leaf_labels, path);
    return {back.matrix.inverse(), std::move(new_shape)};
}

namespace detail {

inline bool find_splittable(const ShapeP& s, Path& p) {
    if (s->is_leaf()) return false;
    if (!s->l->is_leaf()) return true;
    p.push_back(1);
    if (find_splittable(s->r, p)) return true;
    p.pop_back();
    return false;
}

} // namespace detail

// Coordinate change from `shape` to the right comb on the same leaves.
inline Mat to_right_comb(const FusionCategoryData& data, ShapeP shape,
                         const std::vector<int>& leaf_labels, ShapeP* out_shape = nullptr) {
    size_t dim = tree_basis(data.ring, shape, leaf_labels).size();
    Mat M = Mat::Identity(dim, dim);
    for (;;) {
        Path p;
        if (!detail::find_splittable(shape, p)) break;
        MoveResult r = split_move(data, shape, leaf_labels, p);
        M = r.matrix * M;
        shape = r.shape;
    }
    if (out_shape) *out_shape = shape;
    return M;
}

// Coordinate change from shape `src` to shape `dst` (same leaf count),
// routed through the right comb.
inline Mat transfer(const FusionCategoryData& data, const ShapeP& src, const ShapeP& dst,
                    const std::vector<int>& leaf_labels) {
    Mat A = to_right_comb(data, src, leaf_labels);
    Mat B = to_right_comb(data, dst, leaf_labels);
    return B.inverse() * A;
}

// Pentagon: compare the 2-move and 3-move paths from j(k(lm)) to ((jk)l)m.
// Returns the max residual per root label i (index = i).
inline std::vector<double> pentagon_residuals(const FusionCategoryData& data, int j,
                                              int k, int l, int m) {
    const FusionRing& ring = data.ring;
    std::vector<int> ll = {j, k, l, m};
    ShapeP rc = right_comb(4);

    MoveResult a1 = fuse_move(data, rc, ll, {});
    MoveResult a2 = fuse_move(data, a1.shape, ll, {});
    Mat P1 = a2.matrix * a1.matrix;

    MoveResult b1 = fuse_move(data, rc, ll, {1});
    MoveResult b2 = fuse_move(data, b1.shape, ll, {});
    MoveResult b3 = fuse_move(data, b2.shape, ll, {0});
    Mat P2 = b3.matrix * b2.matrix * b1.matrix;

    Mat D = P1 - P2;
    auto src = tree_basis(ring, rc, ll);
    auto dst = tree_basis(ring, a2.shape, ll);
    std::vector<double> res(ring.size(), 0.0);
    for (Eigen::Index rq = 0; rq < D.rows(); ++rq)
        for (Eigen::Index cq = 0; cq < D.cols(); ++cq) {
            double v = std::abs(D(rq, cq));
            res[dst[rq].root_label] = std::max(res[dst[rq].root_label], v);
            res[src[cq].root_label] = std::max(res[src[cq].root_label], v);
        }
    return res;
}

struct PentagonReport {
    // per 5-tuple (i,j,k,l,m): max residual
    std::map<std::array<int, 5>, double> residuals;
    double max_residual = 0.0;
    bool ok(double tol) const { return max_residual < tol; }
};

inline PentagonReport verify_pentagon(const FusionCategoryData& data) {
    PentagonReport rep;
    int L = data.ring.size();
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < L; ++k)
            for (int l = 0; l < L; ++l)
                for (int m = 0; m < L; ++m) {
                    auto res = pentagon_residuals(data, j, k, l, m);
                    for (int i = 0; i < L; ++i) {
                        rep.residuals[{i, j, k, l, m}] = res[i];
                        rep.max_residual = std::max(rep.max_residual, res[i]);
                    }
                }
    return rep;
}

} // namespace fuscat
