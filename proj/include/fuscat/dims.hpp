#pragma once

#include <cmath>

#include <Eigen/Eigenvalues>

#include "category_data.hpp"

namespace fuscat {

struct DimensionTable {
    std::vector<double> fp;      // Frobenius-Perron dims d+_i
    std::vector<cplx> a, b;      // associator expansion coefficients
    std::vector<cplx> paired;    // d_{{i,i*}}
    std::vector<double> fusion;  // d_i = +sqrt(paired)
    double globalDim = 0.0;
    double fpDim = 0.0;
    bool pseudoUnitary = false;
};

struct DimsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d+_i = spectral radius of left multiplication by X_i on the ring.
inline std::vector<double> frobenius_perron_dims(const FusionRing& ring, double tol = 1e-9) {
    int L = ring.size();
    std::vector<double> fp(L);
    for (int i = 0; i < L; ++i) {
        Eigen::MatrixXd Ni(L, L);
        for (int k = 0; k < L; ++k)
            for (int j = 0; j < L; ++j)
                Ni(k, j) = ring.N(k, i, j);
        Eigen::EigenSolver<Eigen::MatrixXd> es(Ni);
        if (es.info() != Eigen::Success) throw DimsError("eigensolver failure on N_i");
        double r = 0;
        for (int q = 0; q < L; ++q) r = std::max(r, std::abs(es.eigenvalues()(q)));
        fp[i] = r;
    }
    // certificate: d+_j d+_k = sum_i N^i_{jk} d+_i
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < L; ++k) {
            double s = 0;
            for (int i = 0; i < L; ++i) s += ring.N(i, j, k) * fp[i];
            if (std::abs(s - fp[j] * fp[k]) > tol * std::max(1.0, fp[j] * fp[k]))
                throw DimsError("Frobenius-Perron residual check failed");
        }
    return fp;
}

// Entry of block (i; i, i*, i) whose column is (canonical, m=unit, eta_i) and
// row is (canonical, n=unit, eta_{i*}); both vertex spaces are 1-dimensional,
// so the canonical enumeration puts them first in the m=unit / n=unit groups.
inline cplx extract_a(const FusionCategoryData& data, int i) {
    const FusionRing& r = data.ring;
    int is = r.dual[i];
    Mat F = data.f_block(i, i, is, i);
    auto rows = block_rows(r, i, i, is, i);
    auto cols = block_cols(r, i, i, is, i);
    int ri = detail::triple_pos(rows, {0, r.unit, 0});
    int ci = detail::triple_pos(cols, {0, r.unit, 0});
    if (ri < 0 || ci < 0) throw DimsError("channel-1 entry missing in (i;i,i*,i)");
    cplx a = F(ri, ci);
    if (std::abs(a) < data.tol)
        throw DimsError("a_i vanishes: F-data violates rigidity at label " +
                        std::to_string(i));
    return a;
}

inline cplx extract_b(const FusionCategoryData& data, int i) {
    const FusionRing& r = data.ring;
    int is = r.dual[i];
    Mat F = data.f_block_inv(i, i, is, i);
    auto rows = block_rows(r, i, i, is, i);
    auto cols = block_cols(r, i, i, is, i);
    // inverse block maps row coordinates back to column coordinates
    int ri = detail::triple_pos(rows, {0, r.unit, 0});
    int ci = detail::triple_pos(cols, {0, r.unit, 0});
    if (ri < 0 || ci < 0) throw DimsError("channel-1 entry missing in (i;i,i*,i)");
    cplx b = F(ci, ri);
    if (std::abs(b) < data.tol) throw DimsError("b_i vanishes");
    return b;
}

inline DimensionTable dimension_table(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    DimensionTable t;
    t.fp = frobenius_perron_dims(ring, data.tol);
    t.a.resize(L);
    t.b.resize(L);
    t.paired.resize(L);
    t.fusion.resize(L);
    for (int i = 0; i < L; ++i) {
        t.a[i] = extract_a(data, i);
        t.b[i] = extract_b(data, i);
    }
    for (int i = 0; i < L; ++i) {
        int is = ring.dual[i];
        t.paired[i] = cplx(1.0) / (t.a[is] * t.a[i]);
        if (std::abs(t.paired[i].imag()) > data.tol)
            throw DimsError("paired dimension not real at label " + std::to_string(i));
        if (t.paired[i].real() <= data.tol)
            throw DimsError("paired dimension not positive at label " + std::to_string(i) +
                            ": data is not a fusion category");
        t.fusion[i] = std::sqrt(t.paired[i].real());
    }
    for (int i = 0; i < L; ++i) {
        int is = ring.dual[i];
        if (std::abs(t.fusion[i] - t.fusion[is]) > data.tol)
            throw DimsError("d_i != d_{i*}");
    }
    t.globalDim = 0;
    t.fpDim = 0;
    bool pu = true;
    for (int i = 0; i < L; ++i) {
        t.globalDim += t.paired[i].real();
        t.fpDim += t.fp[i] * t.fp[i];
        if (std::abs(t.fp[i] - t.fusion[i]) > data.tol) pu = false;
    }
    t.pseudoUnitary = pu;
    return t;
}

} // namespace fuscat
