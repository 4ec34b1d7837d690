#pragma once

#include <complex>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>
#include <json.hpp>

#include "fusion_ring.hpp"

namespace fuscat {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex triple on the split side of a block: (vertex, middle label, vertex).
using Triple = std::array<int, 3>;
using BlockKey = std::array<int, 4>; // (i; j,k,l)

// Canonical enumeration of the row triples (gamma, n, delta) of block (i;j,k,l):
// gamma in (i; n,l), delta in (n; j,k), n ascending, then gamma, then delta.
inline std::vector<Triple> block_rows(const FusionRing& r, int i, int j, int k, int l) {
    std::vector<Triple> out;
    for (int n = 0; n < r.size(); ++n)
        for (int g = 0; g < r.N(i, n, l); ++g)
            for (int d = 0; d < r.N(n, j, k); ++d)
                out.push_back({g, n, d});
    return out;
}

/// Column triples (alpha, m, beta): alpha in (i; j,m), beta in (m; k,l).
inline std::vector<Triple> block_cols(const FusionRing& r, int i, int j, int k, int l) {
    std::vector<Triple> out;
    for (int m = 0; m < r.size(); ++m)
        for (int a = 0; a < r.N(i, j, m); ++a)
            for (int b = 0; b < r.N(m, k, l); ++b)
                out.push_back({a, m, b});
    return out;
}

struct FusionCategoryData {
    FusionRing ring;
    std::map<BlockKey, Mat> blocks; // nontrivial blocks only; unit blocks synthesized
    double tol = 1e-9;
    std::string notes;

    // Stored associator block: maps coordinates in the j(kl) tree basis (cols)
    // to coordinates in the (jk)l tree basis (rows). Blocks containing the unit
    // among j,k,l are identities on the canonical enumeration.
    Mat f_block(int i, int j, int k, int l) const {
        auto rows = block_rows(ring, i, j, k, l);
        auto cols = block_cols(ring, i, j, k, l);
        if (j == ring.unit || k == ring.unit || l == ring.unit) {
            if (rows.size() != cols.size())
                throw LoadError("unit block not square");
            return Mat::Identity(rows.size(), rows.size());
        }
        auto it = blocks.find({i, j, k, l});
        if (it != blocks.end()) return it->second;
        if (rows.empty() && cols.empty()) return Mat(0, 0);
        if (rows.empty() || cols.empty()) return Mat(rows.size(), cols.size());
        throw LoadError("missing nonempty block (" + std::to_string(i) + ";" +
                        std::to_string(j) + "," + std::to_string(k) + "," +
                        std::to_string(l) + ")");
    }

    Mat f_block_inv(int i, int j, int k, int l) const {
        Mat F = f_block(i, j, k, l);
        if (F.rows() == 0) return F;
        return F.inverse();
    }
};

namespace detail {

inline int triple_pos(const std::vector<Triple>& v, const Triple& t) {
    for (size_t q = 0; q < v.size(); ++q)
        if (v[q] == t) return static_cast<int>(q);
    return -1;
}

} // namespace detail

inline FusionCategoryData load_category(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open file: " + path);
    nlohmann::json js;
    try {
        in >> js;
    } catch (const std::exception& e) {
        throw LoadError(std::string("malformed JSON: ") + e.what());
    }

    FusionCategoryData data;
    try {
        auto labels = js.at("labels").get<std::vector<std::string>>();
        int unit = js.at("unit").get<int>();
        auto dual = js.at("dual").get<std::vector<int>>();
        data.ring = FusionRing::make(labels, unit, dual);
        int L = data.ring.size();
        for (const auto& e : js.at("fusion")) {
            int i = e.at(0), j = e.at(1), k = e.at(2), n = e.at(3);
            if (i < 0 || i >= L || j < 0 || j >= L || k < 0 || k >= L)
                throw LoadError("fusion index out of range");
            data.ring.N(i, j, k) = n;
        }
        if (js.contains("notes")) data.notes = js["notes"].get<std::string>();
        if (js.contains("tol")) data.tol = js["tol"].get<double>();

        for (const auto& b : js.at("F")) {
            int i = b.at("i"), j = b.at("j"), k = b.at("k"), l = b.at("l");
            if (i < 0 || i >= L || j < 0 || j >= L || k < 0 || k >= L || l < 0 || l >= L)
                throw LoadError("block index out of range");
            auto rows = block_rows(data.ring, i, j, k, l);
            auto cols = block_cols(data.ring, i, j, k, l);
            auto frows = b.at("rows").get<std::vector<std::vector<int>>>();
            auto fcols = b.at("cols").get<std::vector<std::vector<int>>>();
            if (frows.size() != rows.size() || fcols.size() != cols.size())
                throw LoadError("block row/col counts inconsistent with mult tensor");
            auto mat = b.at("matrix").get<std::vector<std::vector<double>>>();
            if (mat.size() != rows.size() * cols.size())
                throw LoadError("block matrix size mismatch (non-square or truncated)");
            // The file may order its vertex triples freely; re-index into the
            // canonical enumeration.
            std::vector<int> rmap(rows.size()), cmap(cols.size());
            for (size_t q = 0; q < frows.size(); ++q) {
                if (frows[q].size() != 3) throw LoadError("row triple arity");
                int p = detail::triple_pos(rows, {frows[q][0], frows[q][1], frows[q][2]});
                if (p < 0) throw LoadError("row triple not admissible");
                rmap[q] = p;
            }
            for (size_t q = 0; q < fcols.size(); ++q) {
                if (fcols[q].size() != 3) throw LoadError("col triple arity");
                int p = detail::triple_pos(cols, {fcols[q][0], fcols[q][1], fcols[q][2]});
                if (p < 0) throw LoadError("col triple not admissible");
                cmap[q] = p;
            }
            Mat M(rows.size(), cols.size());
            for (size_t rq = 0; rq < rows.size(); ++rq)
                for (size_t cq = 0; cq < cols.size(); ++cq) {
                    const auto& z = mat[rq * cols.size() + cq];
                    if (z.size() != 2) throw LoadError("matrix entry must be [re,im]");
                    M(rmap[rq], cmap[cq]) = cplx(z[0], z[1]);
                }
            data.blocks[{i, j, k, l}] = std::move(M);
        }
    } catch (const LoadError&) {
        throw;
    } catch (const std::exception& e) {
        throw LoadError(std::string("schema error: ") + e.what());
    }

    // Every nonempty non-unit block must be present.
    int L = data.ring.size();
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                for (int l = 0; l < L; ++l) {
                    if (j == data.ring.unit || k == data.ring.unit || l == data.ring.unit)
                        continue;
                    auto rows = block_rows(data.ring, i, j, k, l);
                    auto cols = block_cols(data.ring, i, j, k, l);
                    if (rows.size() != cols.size())
                        throw LoadError("block (i;j,k,l) not square by mult tensor");
                    if (!rows.empty() && !data.blocks.count({i, j, k, l}))
                        throw LoadError("missing block required by mult tensor");
                }
    return data;
}

inline nlohmann::json category_to_json(const FusionCategoryData& data) {
    nlohmann::json js;
    js["labels"] = data.ring.labels;
    js["unit"] = data.ring.unit;
    js["dual"] = data.ring.dual;
    if (!data.notes.empty()) js["notes"] = data.notes;
    auto fus = nlohmann::json::array();
    int L = data.ring.size();
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                if (data.ring.N(i, j, k))
                    fus.push_back({i, j, k, data.ring.N(i, j, k)});
    js["fusion"] = fus;
    auto fb = nlohmann::json::array();
    for (const auto& [key, M] : data.blocks) {
        auto [i, j, k, l] = key;
        nlohmann::json b;
        b["i"] = i; b["j"] = j; b["k"] = k; b["l"] = l;
        auto rows = block_rows(data.ring, i, j, k, l);
        auto cols = block_cols(data.ring, i, j, k, l);
        auto jr = nlohmann::json::array(), jc = nlohmann::json::array();
        for (auto& t : rows) jr.push_back({t[0], t[1], t[2]});
        for (auto& t : cols) jc.push_back({t[0], t[1], t[2]});
        b["rows"] = jr; b["cols"] = jc;
        auto m = nlohmann::json::array();
        for (Eigen::Index rq = 0; rq < M.rows(); ++rq)
            for (Eigen::Index cq = 0; cq < M.cols(); ++cq)
                m.push_back({M(rq, cq).real(), M(rq, cq).imag()});
        b["matrix"] = m;
        fb.push_back(b);
    }
    js["F"] = fb;
    return js;
}

inline void save_category(const FusionCategoryData& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot write file: " + path);
    out << category_to_json(data).dump(1) << "\n";
}

} // namespace fuscat
