#pragma once

#include "dims.hpp"

namespace fuscat {

// Per-vertex-space basis changes; g[(i,j,k)] expresses the new basis in terms
// of the old (columns = new basis vectors). Unit-vertex spaces stay canonical.
struct GaugeTransform {
    std::map<std::array<int, 3>, Mat> g;

    Mat get(const FusionRing& ring, int i, int j, int k) const {
        auto it = g.find({i, j, k});
        if (it != g.end()) return it->second;
        return Mat::Identity(ring.N(i, j, k), ring.N(i, j, k));
    }
};

struct GaugeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline FusionCategoryData apply_gauge(const FusionCategoryData& data,
                                      const GaugeTransform& gt) {
    const FusionRing& ring = data.ring;
    for (const auto& [key, m] : gt.g) {
        if (m.rows() != m.cols() || m.rows() != ring.N(key[0], key[1], key[2]))
            throw GaugeError("gauge matrix shape mismatch");
        if (std::abs(m.determinant()) < 1e-14) throw GaugeError("singular gauge matrix");
        if ((key[1] == ring.unit || key[2] == ring.unit) &&
            (m - Mat::Identity(m.rows(), m.rows())).cwiseAbs().maxCoeff() > 1e-14)
            throw GaugeError("unit-vertex spaces keep canonical bases");
    }
    FusionCategoryData out = data;
    for (auto& [key, F] : out.blocks) {
        auto [i, j, k, l] = key;
        auto rows = block_rows(ring, i, j, k, l);
        auto cols = block_cols(ring, i, j, k, l);
        Mat GR = Mat::Zero(cols.size(), cols.size());
        for (size_t a = 0; a < cols.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b) {
                if (cols[a][1] != cols[b][1]) continue;
                int m = cols[a][1];
                GR(a, b) = gt.get(ring, i, j, m)(cols[a][0], cols[b][0]) *
                           gt.get(ring, m, k, l)(cols[a][2], cols[b][2]);
            }
        Mat GL = Mat::Zero(rows.size(), rows.size());
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < rows.size(); ++b) {
                if (rows[a][1] != rows[b][1]) continue;
                int n = rows[a][1];
                GL(a, b) = gt.get(ring, i, n, l)(rows[a][0], rows[b][0]) *
                           gt.get(ring, n, j, k)(rows[a][2], rows[b][2]);
            }
        F = GL.inverse() * F * GR;
    }
    return out;
}

// Rescale the channel-1 vertices eta_i so that a_i = a_{i*} with a_i > 0 for
// non-self-dual labels (principal square-root branch; then a sign fix).
inline std::pair<FusionCategoryData, GaugeTransform>
make_fair_basis(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    GaugeTransform gt;
    // lambda_i scales eta_i, the basis vector of Hom(1, X_{i*} (x) X_i);
    // under it a_i -> (lambda_i / lambda_{i*}) a_i.
    std::vector<cplx> lam(L, cplx(1.0));
    DimensionTable t = dimension_table(data);
    for (int i = 0; i < L; ++i) {
        int is = ring.dual[i];
        if (i == is || i > is) continue;
        cplx ratio = t.a[i] / t.a[is];
        cplx l = std::sqrt(ratio); // principal branch
        // after scaling eta_{i*} by l: a_i -> a_i / l = a_{i*} * l = a_{is,new}
        lam[is] = l;
        cplx anew = t.a[i] / l;
        if (anew.real() < 0) lam[is] = -l; // make a_i > 0 for non-self-dual pairs
    }
    for (int i = 0; i < L; ++i) {
        int is = ring.dual[i];
        Mat m(1, 1);
        m(0, 0) = lam[i];
        gt.g[{ring.unit, is, i}] = m; // eta_i spans (1; i*, i)
    }
    FusionCategoryData out = apply_gauge(data, gt);
    out.tol = data.tol;
    return {std::move(out), std::move(gt)};
}

// p_i = sign(a_i d_i) for self-dual labels, +1 otherwise. Requires fair basis.
inline std::vector<int> pivotal_indicators(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    DimensionTable t = dimension_table(data);
    std::vector<int> p(ring.size(), 1);
    for (int i = 0; i < ring.size(); ++i) {
        cplx ad = t.a[i] * t.fusion[i];
        if (std::abs(std::abs(ad) - 1.0) > data.tol || std::abs(ad.imag()) > data.tol)
            throw GaugeError("not a fair basis: |a_i d_i| != 1 at label " +
                             std::to_string(i));
        if (ring.dual[i] == i) p[i] = ad.real() > 0 ? 1 : -1;
        else if (ad.real() < 0)
            throw GaugeError("not a fair basis: a_i < 0 for non-self-dual label");
    }
    return p;
}

// Numeric cups and caps realizing the pairing convention: closed loops in both
// directions evaluate to d_i and the snake identities hold.
struct PairingKit {
    // coefficients relative to the eta basis vectors:
    std::vector<cplx> cup;      // eta_i in Hom(1, X_{i*} X_i): coefficient 1
    std::vector<cplx> cap;      // eps_i = (1/a_i) * dual of eta_{i*}
    std::vector<cplx> leftCap;  // e_i = d_i * dual of eta_i
    std::vector<cplx> leftCup;  // n_i = 1/(d_i a_{i*}) * eta_{i*}
    std::vector<double> root;   // the positive d_i
};

inline PairingKit pairing_kit(const FusionCategoryData& data) {
    DimensionTable t = dimension_table(data);
    int L = data.ring.size();
    PairingKit kit;
    kit.cup.assign(L, cplx(1.0));
    kit.cap.resize(L);
    kit.leftCap.resize(L);
    kit.leftCup.resize(L);
    kit.root.resize(L);
    for (int i = 0; i < L; ++i) {
        int is = data.ring.dual[i];
        kit.cap[i] = cplx(1.0) / t.a[i];
        kit.leftCap[i] = cplx(t.fusion[i]);
        kit.leftCup[i] = cplx(1.0) / (t.fusion[i] * t.a[is]);
        kit.root[i] = t.fusion[i];
    }
    // Both closed loops evaluate to d_i:
    //   left:  e_i . eta_i = d_i <eta^_i, eta_i> = d_i
    //   right: eps_i . n_i = (1/a_i) * 1/(d_i a_{i*}) = d_i^2 / d_i = d_i
    for (int i = 0; i < L; ++i) {
        int is = data.ring.dual[i];
        cplx left = kit.leftCap[i] * kit.cup[i];
        cplx right = kit.cap[i] / (t.fusion[i] * t.a[is]);
        if (std::abs(left - cplx(t.fusion[i])) > data.tol ||
            std::abs(right - cplx(t.fusion[i])) > data.tol)
            throw GaugeError("closed loop != d_i at label " + std::to_string(i));
    }
    return kit;
}

} // namespace fuscat
