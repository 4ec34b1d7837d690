// fuscat command line tool: validate, analyze, and transform fusion-category
// data files.  Exit codes: 0 success, 1 invariant failure, 2 input error.
#include "fuscat/report.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

using namespace fuscat;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string input;
    std::string out;
    std::string format = "text";
    double tol = 1e-9;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("input", c.input, "category data file (JSON)")->required();
    sub->add_option("--tol", c.tol, "numerical tolerance");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", c.out, "write output to file instead of stdout");
}

void emit(const CommonOpts& c, const ordered_json& rep) {
    std::string body = c.format == "json" ? rep.dump(1) + "\n" : report_to_text(rep);
    if (c.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + c.out);
        f << body;
    }
}

FusionCategoryData load_input(const CommonOpts& c) { return load_category(c.input); }

ordered_json dims_json(const DimensionTable& dt) {
    ordered_json j;
    ordered_json fp = ordered_json::array(), fus = ordered_json::array(),
                 pr = ordered_json::array(), av = ordered_json::array();
    for (double v : dt.fp) fp.push_back(detail::jnum(v));
    for (double v : dt.fusion) fus.push_back(detail::jnum(v));
    for (auto& z : dt.paired) pr.push_back(detail::jcplx(z));
    for (auto& z : dt.a) av.push_back(detail::jcplx(z));
    j["fp"] = fp;
    j["fusion"] = fus;
    j["paired"] = pr;
    j["a"] = av;
    j["global_dim"] = detail::jnum(dt.globalDim);
    j["fp_dim"] = detail::jnum(dt.fpDim);
    j["pseudo_unitary"] = dt.pseudoUnitary;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion category analysis tool"};
    app.require_subcommand(1);

    CommonOpts c;
    int maxDegree = 3;
    std::string gaugeMode = "fair";

    auto* validate = app.add_subcommand("validate", "check ring axioms and pentagon");
    add_common(validate, c);

    auto* dims = app.add_subcommand("dims", "dimension tables");
    add_common(dims, c);

    auto* gauge = app.add_subcommand("gauge", "apply a canonical gauge");
    gauge->add_option("mode", gaugeMode, "gauge mode")->check(CLI::IsMember({"fair"}));
    add_common(gauge, c);

    auto* pivotal = app.add_subcommand("pivotal", "pivotal operators and traces");
    add_common(pivotal, c);

    auto* solve = app.add_subcommand("solve", "solve for pivotal structures");
    add_common(solve, c);

    auto* sph = app.add_subcommand("sphericalize", "spherical double of the input");
    add_common(sph, c);

    auto* homs = app.add_subcommand("fusion-homs", "ring homomorphisms to C");
    add_common(homs, c);

    auto* dy = app.add_subcommand("dy", "deformation complex and cohomology");
    dy->add_option("--max-degree", maxDegree, "highest cochain degree");
    add_common(dy, c);

    auto* report = app.add_subcommand("report", "full analysis report");
    report->add_option("--max-degree", maxDegree, "highest cochain degree");
    add_common(report, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            auto data = load_input(c);
            auto vr = validate_ring(data.ring);
            ordered_json j;
            j["ring_valid"] = vr.ok();
            if (!vr.ok()) {
                ordered_json arr = ordered_json::array();
                for (auto& v : vr.violations) arr.push_back(v.what);
                j["ring_violations"] = arr;
                emit(c, j);
                return 1;
            }
            auto pent = verify_pentagon(data);
            j["pentagon_residual"] = detail::jnum(pent.max_residual);
            j["pentagon_ok"] = pent.ok(c.tol);
            emit(c, j);
            return pent.ok(c.tol) ? 0 : 1;
        }
        if (dims->parsed()) {
            auto data = load_input(c);
            emit(c, dims_json(dimension_table(data)));
            return 0;
        }
        if (gauge->parsed()) {
            auto data = load_input(c);
            auto [fair, gt] = make_fair_basis(data);
            std::string body = category_to_json(fair).dump(1) + "\n";
            if (c.out.empty()) {
                std::cout << body;
            } else {
                std::ofstream f(c.out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open output file: " + c.out);
                f << body;
            }
            return 0;
        }
        if (pivotal->parsed()) {
            auto data = load_input(c);
            auto [fair, gt] = make_fair_basis(data);
            auto pr = pivotal_report(fair);
            ordered_json j;
            j["pivotal_indicators"] = pr.p;
            j["orientable"] = pr.orientable;
            j["T_involution_residual"] = detail::jnum(pr.involutionResidual);
            j["trace_hom_residual"] = detail::jnum(pr.homResidual);
            j["trace_sym_residual"] = detail::jnum(pr.symResidual);
            j["T_coherence_residual"] = detail::jnum(check_T_coherence(fair));
            ordered_json tt = ordered_json::array();
            for (auto& [key, tr] : pr.traceT) {
                ordered_json e;
                e["triple"] = {key[0], key[1], key[2]};
                e["trace"] = detail::jcplx(tr);
                tt.push_back(e);
            }
            j["trace_table"] = tt;
            emit(c, j);
            bool ok = pr.involutionResidual < c.tol && pr.homResidual < c.tol &&
                      pr.symResidual < c.tol;
            return ok ? 0 : 1;
        }
        if (solve->parsed()) {
            auto data = load_input(c);
            auto [fair, gt] = make_fair_basis(data);
            auto ps = solve_pivotal(fair);
            auto dt = dimension_table(fair);
            ordered_json j;
            j["consistent"] = ps.consistent;
            if (!ps.consistent) {
                j["certificate"] = ps.certificate;
                emit(c, j);
                return 1;
            }
            ordered_json sols = ordered_json::array();
            for (size_t q = 0; q < ps.solutions.size(); ++q) {
                ordered_json s;
                ordered_json g = ordered_json::array();
                for (auto& z : ps.solutions[q]) g.push_back(detail::jcplx(z));
                s["gamma"] = g;
                s["spherical"] = (bool)ps.spherical[q];
                ordered_json qd = ordered_json::array();
                for (auto& z : quantum_dims(dt, ps.solutions[q]))
                    qd.push_back(detail::jcplx(z));
                s["quantum_dims"] = qd;
                auto fs = frobenius_schur(fair, ps.solutions[q]);
                ordered_json n2 = ordered_json::array(), n3 = ordered_json::array();
                for (auto& z : fs.nu2) n2.push_back(detail::jcplx(z));
                for (auto& z : fs.nu3) n3.push_back(detail::jcplx(z));
                s["nu2"] = n2;
                s["nu3"] = n3;
                sols.push_back(s);
            }
            j["solutions"] = sols;
            j["verify_residual"] = detail::jnum(ps.verifyResidual);
            emit(c, j);
            return ps.verifyResidual < c.tol ? 0 : 1;
        }
        if (sph->parsed()) {
            auto data = load_input(c);
            auto [fair, gt] = make_fair_basis(data);
            auto sr = sphericalize(fair);
            if (c.format == "json" || !c.out.empty()) {
                // emit the new category itself plus diagnostics
                ordered_json j;
                j["category"] = category_to_json(sr.cat);
                j["canonical_pivotal"] = sr.canonicalT;
                j["leakage"] = detail::jnum(sr.leakage);
                emit(c, j);
            } else {
                ordered_json j;
                ordered_json labs = ordered_json::array();
                for (auto& l : sr.cat.ring.labels) labs.push_back(l);
                j["labels"] = labs;
                j["canonical_pivotal"] = sr.canonicalT;
                j["leakage"] = detail::jnum(sr.leakage);
                emit(c, j);
            }
            return sr.leakage < c.tol ? 0 : 1;
        }
        if (homs->parsed()) {
            auto data = load_input(c);
            auto fh = fusion_homomorphisms(data);
            ordered_json j;
            ordered_json all = ordered_json::array(), adm = ordered_json::array();
            for (auto& ch : fh.characters) {
                ordered_json row = ordered_json::array();
                for (auto& z : ch) row.push_back(detail::jcplx(z));
                all.push_back(row);
            }
            for (auto& ch : fh.admissible) {
                ordered_json row = ordered_json::array();
                for (auto& z : ch) row.push_back(detail::jcplx(z));
                adm.push_back(row);
            }
            j["ring_characters"] = all;
            j["fusion_homomorphisms"] = adm;
            emit(c, j);
            return 0;
        }
        if (dy->parsed()) {
            auto data = load_input(c);
            auto [fair, gt] = make_fair_basis(data);
            auto dyc = build_dy_complex(fair, maxDegree);
            ordered_json j;
            ordered_json dimsArr = ordered_json::array();
            for (auto& sp : dyc.C) dimsArr.push_back(sp.dim);
            j["cochain_dims"] = dimsArr;
            ordered_json coh = ordered_json::array();
            bool ok = true;
            for (int n = 1; n < maxDegree; ++n) {
                auto h = cohomology_dim(dyc, n, c.tol);
                ordered_json e;
                e["degree"] = n;
                e["dim"] = h.dim;
                e["ambiguous"] = h.ambiguous;
                coh.push_back(e);
                if (h.ambiguous) ok = false;
            }
            j["cohomology"] = coh;
            auto cr = verify_contracting(dyc);
            j["dd"] = cr.dd;
            j["homotopy_minus_id"] = cr.homotopy;
            for (double v : cr.dd)
                if (v > c.tol) ok = false;
            for (double v : cr.homotopy)
                if (v > 100 * c.tol) ok = false;
            emit(c, j);
            return ok ? 0 : 1;
        }
        if (report->parsed()) {
            auto data = load_input(c);
            ReportOptions opt;
            opt.tol = c.tol;
            opt.maxDegree = maxDegree;
            auto rep = run_full(data, opt);
            emit(c, rep);
            bool ok = rep.value("ring_valid", false) && rep.value("pentagon_ok", false) &&
                      !rep.contains("analysis_error");
            return ok ? 0 : 1;
        }
    } catch (const LoadError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
