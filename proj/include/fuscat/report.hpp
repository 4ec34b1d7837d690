#pragma once

#include "dy.hpp"
#include <cstdio>

namespace fuscat {

inline std::string fnv1a64_hex(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

namespace detail {

// stabilize floating output: 12 significant digits, -0 folded into +0
inline double round12(double x) {
    if (x == 0.0 || std::abs(x) < 1e-13) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline nlohmann::ordered_json jnum(double x) { return round12(x); }
inline nlohmann::ordered_json jcplx(const cplx& z) {
    return nlohmann::ordered_json::array({round12(z.real()), round12(z.imag())});
}

} // namespace detail

struct ReportOptions {
    double tol = 1e-9;
    int maxDegree = 3;
    bool runDY = true;
};

inline nlohmann::ordered_json run_full(const FusionCategoryData& input,
                                       const ReportOptions& opt = {}) {
    using detail::jcplx;
    using detail::jnum;
    nlohmann::ordered_json rep;
    FusionCategoryData data = input;
    data.tol = opt.tol;
    rep["input_digest"] = fnv1a64_hex(category_to_json(data).dump());
    rep["labels"] = data.ring.labels;
    rep["unit"] = data.ring.unit;
    rep["dual"] = data.ring.dual;

    auto vr = validate_ring(data.ring);
    rep["ring_valid"] = vr.ok();
    if (!vr.ok()) {
        auto arr = nlohmann::ordered_json::array();
        for (auto& v : vr.violations) arr.push_back(v.what);
        rep["ring_violations"] = arr;
        return rep;
    }
    auto pent = verify_pentagon(data);
    rep["pentagon_residual"] = jnum(pent.max_residual);
    rep["pentagon_ok"] = pent.max_residual < opt.tol;

    try {
        auto [fair, gt] = make_fair_basis(data);
        fair.tol = opt.tol;
        DimensionTable dt = dimension_table(fair);
        rep["dims"] = {{"fp", nlohmann::ordered_json::array()},
                       {"fusion", nlohmann::ordered_json::array()},
                       {"paired", nlohmann::ordered_json::array()},
                       {"a", nlohmann::ordered_json::array()}};
        for (int i = 0; i < data.ring.size(); ++i) {
            rep["dims"]["fp"].push_back(jnum(dt.fp[i]));
            rep["dims"]["fusion"].push_back(jnum(dt.fusion[i]));
            rep["dims"]["paired"].push_back(jcplx(dt.paired[i]));
            rep["dims"]["a"].push_back(jcplx(dt.a[i]));
        }
        rep["global_dim"] = jnum(dt.globalDim);
        rep["fp_dim"] = jnum(dt.fpDim);
        rep["pseudo_unitary"] = dt.pseudoUnitary;

        PivotalReport pr = pivotal_report(fair);
        rep["pivotal_indicators"] = pr.p;
        rep["orientable"] = pr.orientable;
        rep["T_involution_residual"] = jnum(pr.involutionResidual);
        rep["trace_hom_residual"] = jnum(pr.homResidual);
        rep["trace_sym_residual"] = jnum(pr.symResidual);
        rep["T_coherence_residual"] = jnum(check_T_coherence(fair));
        {
            auto tt = nlohmann::ordered_json::array();
            int L = data.ring.size();
            for (int i = 0; i < L; ++i)
                for (int j = 0; j < L; ++j)
                    for (int k = 0; k < L; ++k)
                        if (data.ring.N(i, j, k))
                            tt.push_back({{"triple", {i, j, k}},
                                          {"trace", jcplx(pr.traceT.at({i, j, k}))}});
            rep["trace_table"] = tt;
        }

        try {
            PivotalSolveResult ps = solve_pivotal(fair);
            rep["pivotal_consistent"] = ps.consistent;
            if (!ps.consistent) rep["pivotal_certificate"] = ps.certificate;
            auto sols = nlohmann::ordered_json::array();
            for (size_t q = 0; q < ps.solutions.size(); ++q) {
                nlohmann::ordered_json s;
                auto g = nlohmann::ordered_json::array();
                for (auto& z : ps.solutions[q]) g.push_back(jcplx(z));
                s["gamma"] = g;
                s["spherical"] = static_cast<bool>(ps.spherical[q]);
                auto qd = nlohmann::ordered_json::array();
                for (auto& z : quantum_dims(dt, ps.solutions[q])) qd.push_back(jcplx(z));
                s["quantum_dims"] = qd;
                FSIndicators fs = frobenius_schur(fair, ps.solutions[q]);
                auto n2 = nlohmann::ordered_json::array(), n3 = nlohmann::ordered_json::array();
                for (auto& z : fs.nu2) n2.push_back(jcplx(z));
                for (auto& z : fs.nu3) n3.push_back(jcplx(z));
                s["nu2"] = n2;
                s["nu3"] = n3;
                sols.push_back(std::move(s));
            }
            rep["pivotal_structures"] = sols;
        } catch (const std::exception& e) {
            rep["pivotal_structures_error"] = e.what();
        }

        FusionHomResult fh = fusion_homomorphisms(fair);
        {
            auto all = nlohmann::ordered_json::array(), adm = nlohmann::ordered_json::array();
            for (auto& f : fh.characters) {
                auto v = nlohmann::ordered_json::array();
                for (auto& z : f) v.push_back(jcplx(z));
                all.push_back(v);
            }
            for (auto& f : fh.admissible) {
                auto v = nlohmann::ordered_json::array();
                for (auto& z : f) v.push_back(jcplx(z));
                adm.push_back(v);
            }
            rep["ring_characters"] = all;
            rep["fusion_homomorphisms"] = adm;
        }

        if (opt.runDY) {
            DYComplex dy = build_dy_complex(fair, opt.maxDegree);
            auto dims = nlohmann::ordered_json::array();
            for (auto& c : dy.C) dims.push_back(c.dim);
            rep["dy_cochain_dims"] = dims;
            auto hs = nlohmann::ordered_json::array();
            for (int n = 1; n < (int)dy.d.size(); ++n) {
                auto h = cohomology_dim(dy, n, opt.tol);
                hs.push_back({{"n", n}, {"dim", h.dim}, {"ambiguous", h.ambiguous}});
            }
            rep["dy_cohomology"] = hs;
            ContractionReport cr = verify_contracting(dy);
            nlohmann::ordered_json c;
            auto put = [&](const char* key, const std::vector<double>& v) {
                auto arr = nlohmann::ordered_json::array();
                for (double x : v) arr.push_back(jnum(x));
                c[key] = arr;
            };
            put("dd", cr.dd);
            put("chi_f0_minus_id", cr.chiF0);
            put("handleslide", cr.handleslide);
            put("chi_shift", cr.chiShift);
            put("homotopy_minus_id", cr.homotopy);
            rep["dy_contraction"] = c;
        }
    } catch (const std::exception& e) {
        rep["analysis_error"] = e.what();
    }
    return rep;
}

namespace detail {

inline void render_text(const nlohmann::ordered_json& j, const std::string& prefix,
                        std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                        out);
    } else if (j.is_array()) {
        bool scalarOnly = true;
        for (auto& v : j)
            if (v.is_object() || (v.is_array() && v.size() > 2)) scalarOnly = false;
        if (scalarOnly) {
            out += prefix + ": " + j.dump() + "\n";
        } else {
            int q = 0;
            for (auto& v : j)
                render_text(v, prefix + "[" + std::to_string(q++) + "]", out);
        }
    } else {
        out += prefix + ": " + j.dump() + "\n";
    }
}

} // namespace detail

inline std::string report_to_text(const nlohmann::ordered_json& rep) {
    std::string out;
    detail::render_text(rep, "", out);
    return out;
}

} // namespace fuscat
