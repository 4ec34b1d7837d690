#pragma once

#include "gauge.hpp"

namespace fuscat {

struct PivotalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Apex associator S_ijk: the block (1; i,j,k) read as a map from vertex space
// (i*; j,k) to (k*; i,j) — the eta vertices on the top strand are unique, so
// the stored block is exactly this matrix.
inline Mat apex_associator(const FusionCategoryData& data, int i, int j, int k) {
    const FusionRing& r = data.ring;
    int is = r.dual[i], ks = r.dual[k];
    if (r.N(is, j, k) != r.N(ks, i, j))
        throw PivotalError("ring symmetry violation: N^{i*}_{jk} != N^{k*}_{ij}");
    Mat F = data.f_block(r.unit, i, j, k);
    // rows: (eta_k, n=k*, delta in (k*;i,j)); cols: (eta_{i*}, m=i*, beta in (i*;j,k))
    return F;
}

// A_ijk = S_jki S_kij S_ijk, an endomorphism of (i*; j,k) coordinates.
inline Mat apex_monodromy(const FusionCategoryData& data, int i, int j, int k) {
    Mat s1 = apex_associator(data, i, j, k);
    Mat s2 = apex_associator(data, k, i, j);
    Mat s3 = apex_associator(data, j, k, i);
    if (s2.cols() != s1.rows() || s3.cols() != s2.rows())
        throw PivotalError("monodromy composition shape mismatch");
    return s3 * s2 * s1;
}

// Cyclic operator in a fair basis: C_ijk = p_k S_ijk.
inline Mat cyclic_operator(const FusionCategoryData& data, const std::vector<int>& p,
                           int i, int j, int k) {
    return double(p[k]) * apex_associator(data, i, j, k);
}

// Pivotal operator T^i_{jk} = p_i p_j p_k A_{i*,j,k} on the vertex space
// (i; j,k). Optional root-choice signs x (x_i = x_{i*} in {+-1}) rescale it by
// x_i x_j x_k.
inline Mat pivotal_operator(const FusionCategoryData& data, const std::vector<int>& p,
                            int i, int j, int k,
                            const std::vector<int>* rootSigns = nullptr) {
    int is = data.ring.dual[i];
    Mat T = double(p[i] * p[j] * p[k]) * apex_monodromy(data, is, j, k);
    if (rootSigns) {
        const auto& x = *rootSigns;
        T *= double(x[i] * x[j] * x[k]);
    }
    return T;
}

// Splits an involution into its +-1 eigenspaces via the projectors (id +- T)/2.
// Returns (gauge matrix whose columns are the eigenbasis, symbols ordered + before -).
inline std::pair<Mat, std::vector<int>> pivotal_eigenbasis(const Mat& T, double tol) {
    int n = static_cast<int>(T.rows());
    Mat I = Mat::Identity(n, n);
    if ((T * T - I).cwiseAbs().maxCoeff() > tol)
        throw PivotalError("pivotal operator is not an involution");
    Mat Pp = 0.5 * (I + T), Pm = 0.5 * (I - T);
    int np = static_cast<int>(std::lround(Pp.trace().real()));
    int nm = n - np;
    Mat G(n, n);
    std::vector<int> symbols;
    auto fill = [&](const Mat& P, int count, int offset) {
        if (count == 0) return;
        Eigen::ColPivHouseholderQR<Mat> qr(P);
        Mat Q = qr.householderQ();
        for (int c = 0; c < count; ++c) {
            // project the orthonormal candidates to be safe against rounding
            Vec v = P * Q.col(c);
            G.col(offset + c) = v / v.norm();
        }
    };
    fill(Pp, np, 0);
    fill(Pm, nm, np);
    for (int c = 0; c < np; ++c) symbols.push_back(1);
    for (int c = 0; c < nm; ++c) symbols.push_back(-1);
    return {std::move(G), std::move(symbols)};
}

struct PivotalReport {
    std::map<std::array<int, 3>, Mat> S, A, T;
    std::map<std::array<int, 3>, std::vector<int>> symbols;
    std::map<std::array<int, 3>, Mat> eigenbasis;
    std::map<std::array<int, 3>, cplx> traceT;
    std::vector<int> p;
    bool orientable = true;
    std::vector<std::array<int, 3>> nonOrientableTriples;
    double involutionResidual = 0.0;
    double homResidual = 0.0;  // Tr-weighted dimension identity
    double symResidual = 0.0;  // conjugate-cyclic trace symmetries
};

inline PivotalReport pivotal_report(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    PivotalReport rep;
    rep.p = pivotal_indicators(data);
    DimensionTable dt = dimension_table(data);

    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k) {
                rep.S[{i, j, k}] = apex_associator(data, i, j, k);
                rep.A[{i, j, k}] = apex_monodromy(data, i, j, k);
                Mat T = pivotal_operator(data, rep.p, i, j, k);
                int n = static_cast<int>(T.rows());
                if (n > 0) {
                    Mat I = Mat::Identity(n, n);
                    rep.involutionResidual = std::max(
                        rep.involutionResidual, (T * T - I).cwiseAbs().maxCoeff());
                    auto [G, sym] = pivotal_eigenbasis(T, std::max(data.tol, 1e-7));
                    rep.eigenbasis[{i, j, k}] = G;
                    rep.symbols[{i, j, k}] = sym;
                    // orientability: T must be a scalar +-1
                    bool scalar = true;
                    for (int s : sym)
                        if (s != sym[0]) scalar = false;
                    if ((T - double(sym[0]) * I).cwiseAbs().maxCoeff() > data.tol)
                        scalar = false;
                    if (!scalar) {
                        rep.orientable = false;
                        rep.nonOrientableTriples.push_back({i, j, k});
                    }
                }
                rep.traceT[{i, j, k}] = T.trace();
                rep.T[{i, j, k}] = std::move(T);
            }

    // Prop: d_j d_k = sum_i Tr(T^i_{jk}) d_i
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < L; ++k) {
            cplx s = 0;
            for (int i = 0; i < L; ++i) s += rep.traceT[{i, j, k}] * dt.fusion[i];
            rep.homResidual = std::max(rep.homResidual,
                                       std::abs(s - cplx(dt.fusion[j] * dt.fusion[k])));
        }
    // Tr(T^i_{jk}) = Tr(T^{k*}_{i*,j}) = Tr(T^{i*}_{k*,j*})
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k) {
                cplx t0 = rep.traceT[{i, j, k}];
                cplx t1 = rep.traceT[{ring.dual[k], ring.dual[i], j}];
                cplx t2 = rep.traceT[{ring.dual[i], ring.dual[k], ring.dual[j]}];
                rep.symResidual = std::max(rep.symResidual,
                                           std::max(std::abs(t0 - t1), std::abs(t0 - t2)));
            }
    return rep;
}

// Coherence of T with the associator: for every block (i;j,k,l),
// [T^i_{nl} (x) T^n_{jk} on rows] F = F [T^i_{jm} (x) T^m_{kl} on cols].
inline double check_T_coherence(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    auto p = pivotal_indicators(data);
    std::map<std::array<int, 3>, Mat> T;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                T[{i, j, k}] = pivotal_operator(data, p, i, j, k);

    double worst = 0.0;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                for (int l = 0; l < L; ++l) {
                    auto rows = block_rows(ring, i, j, k, l);
                    auto cols = block_cols(ring, i, j, k, l);
                    if (rows.empty()) continue;
                    Mat F = data.f_block(i, j, k, l);
                    Mat R = Mat::Zero(rows.size(), rows.size());
                    for (size_t a = 0; a < rows.size(); ++a)
                        for (size_t b = 0; b < rows.size(); ++b) {
                            if (rows[a][1] != rows[b][1]) continue;
                            int n = rows[a][1];
                            R(a, b) = T.at({i, n, l})(rows[a][0], rows[b][0]) *
                                      T.at({n, j, k})(rows[a][2], rows[b][2]);
                        }
                    Mat C = Mat::Zero(cols.size(), cols.size());
                    for (size_t a = 0; a < cols.size(); ++a)
                        for (size_t b = 0; b < cols.size(); ++b) {
                            if (cols[a][1] != cols[b][1]) continue;
                            int m = cols[a][1];
                            C(a, b) = T.at({i, j, m})(cols[a][0], cols[b][0]) *
                                      T.at({m, k, l})(cols[a][2], cols[b][2]);
                        }
                    worst = std::max(worst, (R * F - F * C).cwiseAbs().maxCoeff());
                }
    return worst;
}

} // namespace fuscat
