#pragma once

#include "pivotal.hpp"

namespace fuscat {

struct StructuresError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Smith-style diagonalization over the integers: U A V = D with U, V
// unimodular and D diagonal (no divisibility chain; not needed here).
struct SmithForm {
    IMat U, D, V;
    int rank = 0;
};

inline SmithForm smith_form(const IMat& A) {
    const Eigen::Index m = A.rows(), n = A.cols();
    SmithForm s;
    s.D = A;
    s.U = IMat::Identity(m, m);
    s.V = IMat::Identity(n, n);
    Eigen::Index t = 0;
    while (t < m && t < n) {
        // locate the smallest nonzero entry in the trailing submatrix
        Eigen::Index pr = -1, pc = -1;
        long long best = 0;
        for (Eigen::Index r = t; r < m; ++r)
            for (Eigen::Index c = t; c < n; ++c) {
                long long v = std::llabs(s.D(r, c));
                if (v != 0 && (pr < 0 || v < best)) { best = v; pr = r; pc = c; }
            }
        if (pr < 0) break;
        s.D.row(t).swap(s.D.row(pr)); s.U.row(t).swap(s.U.row(pr));
        s.D.col(t).swap(s.D.col(pc)); s.V.col(t).swap(s.V.col(pc));
        bool dirty = false;
        for (Eigen::Index r = t + 1; r < m; ++r)
            if (s.D(r, t) != 0) {
                long long q = s.D(r, t) / s.D(t, t);
                s.D.row(r) -= q * s.D.row(t);
                s.U.row(r) -= q * s.U.row(t);
                if (s.D(r, t) != 0) dirty = true;
            }
        for (Eigen::Index c = t + 1; c < n; ++c)
            if (s.D(t, c) != 0) {
                long long q = s.D(t, c) / s.D(t, t);
                s.D.col(c) -= q * s.D.col(t);
                s.V.col(c) -= q * s.V.col(t);
                if (s.D(t, c) != 0) dirty = true;
            }
        if (dirty) continue; // re-pivot on a smaller remainder
        if (s.D(t, t) < 0) { s.D.row(t) = -s.D.row(t); s.U.row(t) = -s.U.row(t); }
        ++t;
    }
    s.rank = static_cast<int>(t);
    return s;
}

struct PivotalSolveResult {
    // each solution is the vector gamma_i of unit-modulus scalars
    std::vector<std::vector<cplx>> solutions;
    std::vector<bool> spherical;      // per solution: all gamma_i in {+-1}
    bool consistent = true;
    std::string certificate;          // inconsistency witness, if any
    double verifyResidual = 0.0;
    std::vector<int> p;               // fair-basis indicators used
};

// Solves gamma_j gamma_k / gamma_i = eps^i_{jk} over all admissible triples,
// where eps is the (scalar) pivotal operator. Writes gamma = exp(2 pi i t) and
// solves the affine lattice system t_j + t_k - t_i = b (mod 1), b in {0, 1/2}.
inline PivotalSolveResult solve_pivotal(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    PivotalSolveResult res;
    res.p = pivotal_indicators(data);

    std::vector<std::array<int, 3>> triples;
    std::vector<int> rhs; // numerators of b over denominator 2
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k) {
                int n = ring.N(i, j, k);
                if (n == 0) continue;
                Mat T = pivotal_operator(data, res.p, i, j, k);
                Mat I = Mat::Identity(n, n);
                int eps;
                if ((T - I).cwiseAbs().maxCoeff() < data.tol) eps = 1;
                else if ((T + I).cwiseAbs().maxCoeff() < data.tol) eps = -1;
                else throw StructuresError("non-scalar pivotal operator: category "
                                           "is not orientable, no pivotal structure");
                triples.push_back({i, j, k});
                rhs.push_back(eps == 1 ? 0 : 1);
            }

    const int m = static_cast<int>(triples.size());
    IMat A = IMat::Zero(m, L);
    for (int r = 0; r < m; ++r) {
        auto [i, j, k] = triples[r];
        A(r, j) += 1; A(r, k) += 1; A(r, i) -= 1;
    }
    SmithForm sf = smith_form(A);
    // U * (2b): numerators of the transformed right-hand side over 2
    std::vector<long long> ub(m, 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) ub[r] += sf.U(r, c) * rhs[c];

    for (int r = sf.rank; r < m; ++r)
        if (ub[r] % 2 != 0) {
            res.consistent = false;
            std::string cert = "inconsistent equation combination: sum over rows [";
            for (int c = 0; c < m; ++c)
                if (sf.U(r, c) != 0)
                    cert += std::to_string(sf.U(r, c)) + "*(" +
                            std::to_string(triples[c][0]) + ";" +
                            std::to_string(triples[c][1]) + "," +
                            std::to_string(triples[c][2]) + ") ";
            cert += "] forces 0 = 1/2 (mod 1)";
            res.certificate = cert;
            return res;
        }
    if (sf.rank < L)
        throw StructuresError("pivotal system has free parameters (continuous "
                              "family); the label grading is nontrivial");

    long long count = 1;
    for (int k = 0; k < sf.rank; ++k) {
        count *= sf.D(k, k);
        if (count > 4096) throw StructuresError("torsion solution count too large");
    }
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<double> sdiag(L, 0.0);
        long long rem = idx;
        for (int k = 0; k < sf.rank; ++k) {
            long long d = sf.D(k, k);
            long long mk = rem % d;
            rem /= d;
            sdiag[k] = (double(ub[k]) / 2.0 + double(mk)) / double(d);
        }
        std::vector<cplx> gamma(L);
        for (int i = 0; i < L; ++i) {
            double t = 0.0;
            for (int k = 0; k < L; ++k) t += double(sf.V(i, k)) * sdiag[k];
            gamma[i] = std::exp(cplx(0.0, 2.0 * M_PI * t));
        }
        // verify against the original equations
        double worst = 0.0;
        for (int r = 0; r < m; ++r) {
            auto [i, j, k] = triples[r];
            cplx lhs = gamma[j] * gamma[k] / gamma[i];
            cplx e = rhs[r] == 0 ? cplx(1.0) : cplx(-1.0);
            worst = std::max(worst, std::abs(lhs - e));
        }
        if (worst > 1e-8) continue;
        res.verifyResidual = std::max(res.verifyResidual, worst);
        res.solutions.push_back(std::move(gamma));
    }
    if (res.solutions.empty()) res.consistent = false;

    auto argOf = [](const cplx& z) {
        double a = std::arg(z);
        if (a <= -M_PI + 1e-12) a = M_PI; // principal value in (-pi, pi]
        return a;
    };
    std::sort(res.solutions.begin(), res.solutions.end(),
              [&](const std::vector<cplx>& x, const std::vector<cplx>& y) {
                  for (size_t q = 0; q < x.size(); ++q) {
                      double ax = argOf(x[q]), ay = argOf(y[q]);
                      if (std::abs(ax - ay) > 1e-9) return ax < ay;
                  }
                  return false;
              });
    res.solutions.erase(
        std::unique(res.solutions.begin(), res.solutions.end(),
                    [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
                        for (size_t q = 0; q < x.size(); ++q)
                            if (std::abs(x[q] - y[q]) > 1e-9) return false;
                        return true;
                    }),
        res.solutions.end());
    for (auto& g : res.solutions) {
        bool sph = true;
        for (auto& z : g)
            if (std::abs(z.imag()) > 1e-9 || std::abs(std::abs(z.real()) - 1.0) > 1e-9)
                sph = false;
        res.spherical.push_back(sph);
    }
    return res;
}

inline std::vector<cplx> quantum_dims(const DimensionTable& dt,
                                      const std::vector<cplx>& gamma) {
    std::vector<cplx> q(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) q[i] = gamma[i] * dt.fusion[i];
    return q;
}

struct FSIndicators {
    std::vector<cplx> nu2; // zero for non-self-dual labels
    std::vector<cplx> nu3;
};

inline FSIndicators frobenius_schur(const FusionCategoryData& data,
                                    const std::vector<cplx>& gamma) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    auto p = pivotal_indicators(data);
    FSIndicators fs;
    fs.nu2.assign(L, cplx(0.0));
    fs.nu3.assign(L, cplx(0.0));
    for (int i = 0; i < L; ++i) {
        if (ring.dual[i] == i) fs.nu2[i] = gamma[i] * double(p[i]);
        fs.nu3[i] = gamma[i] * cyclic_operator(data, p, i, i, i).trace();
    }
    return fs;
}

struct FusionHomResult {
    std::vector<std::vector<cplx>> characters; // all ring homs to C, f(1) = 1
    std::vector<std::vector<cplx>> admissible; // those with f(i) f(i*) = d_{{i,i*}}
};

inline FusionHomResult fusion_homomorphisms(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    DimensionTable dt = dimension_table(data);
    // (M_j)_{ik} = N^k_{ji}: a character is a simultaneous eigenvector with
    // v_1 = 1 and M_j v = f(j) v.
    std::vector<Mat> M(L, Mat::Zero(L, L));
    for (int j = 0; j < L; ++j)
        for (int i = 0; i < L; ++i)
            for (int k = 0; k < L; ++k) M[j](i, k) = double(ring.N(k, j, i));

    FusionHomResult out;
    auto seen = [&](const std::vector<cplx>& f) {
        for (auto& g : out.characters) {
            bool same = true;
            for (int q = 0; q < L; ++q)
                if (std::abs(f[q] - g[q]) > 1e-7) same = false;
            if (same) return true;
        }
        return false;
    };
    for (int attempt = 0; attempt < 3; ++attempt) {
        Mat W = Mat::Zero(L, L);
        for (int j = 0; j < L; ++j) W += std::cos(0.7 + 1.3 * j + 2.1 * attempt) * M[j];
        Eigen::ComplexEigenSolver<Mat> es(W);
        for (int c = 0; c < L; ++c) {
            Vec v = es.eigenvectors().col(c);
            if (std::abs(v(ring.unit)) < 1e-8) continue;
            v /= v(ring.unit);
            std::vector<cplx> f(L);
            bool good = true;
            for (int j = 0; j < L; ++j) {
                f[j] = (M[j] * v)(ring.unit);
                if ((M[j] * v - f[j] * v).cwiseAbs().maxCoeff() > 1e-7) good = false;
            }
            if (!good) continue;
            for (int i = 0; i < L && good; ++i)
                for (int j = 0; j < L && good; ++j) {
                    cplx s = 0;
                    for (int k = 0; k < L; ++k) s += double(ring.N(k, i, j)) * f[k];
                    if (std::abs(f[i] * f[j] - s) > 1e-7) good = false;
                }
            if (good && !seen(f)) out.characters.push_back(std::move(f));
        }
    }
    std::sort(out.characters.begin(), out.characters.end(),
              [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
                  for (size_t q = 0; q < x.size(); ++q) {
                      if (std::abs(x[q].real() - y[q].real()) > 1e-7)
                          return x[q].real() < y[q].real();
                      if (std::abs(x[q].imag() - y[q].imag()) > 1e-7)
                          return x[q].imag() < y[q].imag();
                  }
                  return false;
              });
    for (auto& f : out.characters) {
        bool adm = true;
        for (int i = 0; i < L; ++i)
            if (std::abs(f[i] * f[ring.dual[i]] - cplx(dt.paired[i])) > 1e-7) adm = false;
        if (adm) out.admissible.push_back(f);
    }
    return out;
}

struct SphericalizationResult {
    FusionCategoryData cat;
    std::vector<int> canonicalT;   // gamma_{(i,s)} = s for the new labels
    std::vector<int> parentLabel;  // new label -> old label
    std::vector<int> sign;         // new label -> s
    double leakage = 0.0;          // off-grading mass removed from F-blocks
};

// Z/2-equivariantization along the pivotal operator: labels split into signed
// copies (i,s); multiplicities are eigenspace dimensions of T^i_{jk}; F-blocks
// are the grading-diagonal sub-blocks in the pivotal eigenbasis.
inline SphericalizationResult sphericalize(const FusionCategoryData& data) {
    const FusionRing& ring = data.ring;
    int L = ring.size();
    PivotalReport rep = pivotal_report(data);

    // move to the pivotal eigenbasis everywhere (unit-vertex spaces stay put)
    GaugeTransform gt;
    for (auto& [key, G] : rep.eigenbasis) {
        if (key[1] == ring.unit || key[2] == ring.unit) continue;
        gt.g[key] = G;
    }
    FusionCategoryData gauged = apply_gauge(data, gt);

    // per-triple vertex symbols in the gauged basis
    auto p = pivotal_indicators(gauged);
    std::map<std::array<int, 3>, std::vector<int>> eps;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k) {
                int n = ring.N(i, j, k);
                if (n == 0) { eps[{i, j, k}] = {}; continue; }
                Mat T = pivotal_operator(gauged, p, i, j, k);
                Mat off = T;
                std::vector<int> e(n);
                for (int q = 0; q < n; ++q) {
                    double d = T(q, q).real();
                    if (std::abs(std::abs(d) - 1.0) > 1e-7 ||
                        std::abs(T(q, q).imag()) > 1e-7)
                        throw StructuresError("pivotal operator not diagonalized");
                    e[q] = d > 0 ? 1 : -1;
                    off(q, q) = 0;
                }
                if (off.cwiseAbs().maxCoeff() > 1e-7)
                    throw StructuresError("pivotal operator not diagonal in eigenbasis");
                eps[{i, j, k}] = std::move(e);
            }

    // new ring: label 2i + 0 is (i,+), 2i + 1 is (i,-)
    auto sgn = [](int t) { return t == 0 ? 1 : -1; };
    std::vector<std::string> labels2(2 * L);
    std::vector<int> dual2(2 * L), parent(2 * L), sign2(2 * L);
    for (int i = 0; i < L; ++i)
        for (int t = 0; t < 2; ++t) {
            labels2[2 * i + t] = ring.labels[i] + (t == 0 ? "+" : "-");
            parent[2 * i + t] = i;
            sign2[2 * i + t] = sgn(t);
        }
    FusionRing ring2 = FusionRing::make(labels2, 2 * ring.unit, dual2);
    for (int i2 = 0; i2 < 2 * L; ++i2)
        for (int j2 = 0; j2 < 2 * L; ++j2)
            for (int k2 = 0; k2 < 2 * L; ++k2) {
                const auto& e = eps.at({parent[i2], parent[j2], parent[k2]});
                int want = sign2[i2] * sign2[j2] * sign2[k2];
                int n = 0;
                for (int s : e)
                    if (s == want) ++n;
                ring2.N(i2, j2, k2) = n;
            }
    for (int j2 = 0; j2 < 2 * L; ++j2) {
        int found = -1;
        for (int k2 = 0; k2 < 2 * L; ++k2)
            if (ring2.N(ring2.unit, j2, k2) == 1) {
                if (found >= 0) throw StructuresError("ambiguous dual after split");
                found = k2;
            }
        if (found < 0) throw StructuresError("no dual after split");
        dual2[j2] = found;
    }
    ring2.dual = dual2;

    // positions of the sign-s vertices inside an old vertex space, in order
    auto select = [&](int i, int j, int k, int s) {
        std::vector<int> pos;
        const auto& e = eps.at({i, j, k});
        for (int q = 0; q < (int)e.size(); ++q)
            if (e[q] == s) pos.push_back(q);
        return pos;
    };

    SphericalizationResult out;
    out.parentLabel = parent;
    out.sign = sign2;
    out.cat.ring = ring2;
    out.cat.tol = data.tol;

    // grading leakage of the gauged blocks (must vanish)
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                for (int l = 0; l < L; ++l) {
                    auto rows = block_rows(ring, i, j, k, l);
                    auto cols = block_cols(ring, i, j, k, l);
                    if (rows.empty()) continue;
                    Mat F = gauged.f_block(i, j, k, l);
                    for (size_t r = 0; r < rows.size(); ++r)
                        for (size_t c = 0; c < cols.size(); ++c) {
                            int cr = eps.at({i, rows[r][1], l})[rows[r][0]] *
                                     eps.at({rows[r][1], j, k})[rows[r][2]];
                            int cc = eps.at({i, j, cols[c][1]})[cols[c][0]] *
                                     eps.at({cols[c][1], k, l})[cols[c][2]];
                            if (cr != cc)
                                out.leakage = std::max(out.leakage, std::abs(F(r, c)));
                        }
                }

    for (int i2 = 0; i2 < 2 * L; ++i2)
        for (int j2 = 0; j2 < 2 * L; ++j2)
            for (int k2 = 0; k2 < 2 * L; ++k2)
                for (int l2 = 0; l2 < 2 * L; ++l2) {
                    if (j2 == ring2.unit || k2 == ring2.unit || l2 == ring2.unit)
                        continue;
                    auto rows2 = block_rows(ring2, i2, j2, k2, l2);
                    auto cols2 = block_cols(ring2, i2, j2, k2, l2);
                    if (rows2.empty()) continue;
                    int i = parent[i2], j = parent[j2], k = parent[k2], l = parent[l2];
                    int si = sign2[i2], sj = sign2[j2], sk = sign2[k2], sl = sign2[l2];
                    auto rows = block_rows(ring, i, j, k, l);
                    auto cols = block_cols(ring, i, j, k, l);
                    Mat F = gauged.f_block(i, j, k, l);
                    auto oldRow = [&](const Triple& t2) {
                        int n2 = t2[1], n = parent[n2], sn = sign2[n2];
                        auto gpos = select(i, n, l, si * sn * sl);
                        auto dpos = select(n, j, k, sn * sj * sk);
                        return detail::triple_pos(rows, {gpos[t2[0]], n, dpos[t2[2]]});
                    };
                    auto oldCol = [&](const Triple& t2) {
                        int m2 = t2[1], mm = parent[m2], sm = sign2[m2];
                        auto apos = select(i, j, mm, si * sj * sm);
                        auto bpos = select(mm, k, l, sm * sk * sl);
                        return detail::triple_pos(cols, {apos[t2[0]], mm, bpos[t2[2]]});
                    };
                    Mat B(rows2.size(), cols2.size());
                    for (size_t r = 0; r < rows2.size(); ++r)
                        for (size_t c = 0; c < cols2.size(); ++c)
                            B(r, c) = F(oldRow(rows2[r]), oldCol(cols2[c]));
                    out.cat.blocks[{i2, j2, k2, l2}] = std::move(B);
                }

    out.canonicalT = sign2;
    return out;
}

} // namespace fuscat
