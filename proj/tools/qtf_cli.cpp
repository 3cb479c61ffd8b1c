#include "qtf/analysis.hpp"
#include "qtf/dft.hpp"
#include "qtf/directional.hpp"
#include "qtf/errors.hpp"
#include "qtf/fixtures.hpp"
#include "qtf/json_io.hpp"
#include "qtf/report_json.hpp"
#include "qtf/sampler.hpp"
#include "qtf/smoothness.hpp"
#include "qtf/specfact.hpp"
#include "qtf/verify.hpp"
#include "qtf/vmconstruct.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qtf;

namespace {

struct Global {
    std::string output;
    bool quiet = false;
    bool compact = false;
};

Global g;

void note(const std::string& s) {
    if (!g.quiet) std::cerr << s << '\n';
}

void emit(const json& j) {
    std::string text = g.compact ? j.dump() : j.dump(2);
    if (g.output.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(g.output);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write " + g.output);
        out << text << '\n';
    }
}

QtfBank load_bank(const std::string& spec) { return bank_from_json(load_input(spec)); }

std::string vmo_text(int v) { return v == kInfiniteVmo ? "inf" : std::to_string(v); }

int cmd_cosets(const std::string& input) {
    json doc = load_input(input);
    if (!doc.contains("dilation")) throw Error(Errc::SchemaError, "/dilation: missing field");
    DilationContext ctx = make_context(int_matrix_from_json(doc["dilation"], "/dilation"));
    json gamma = json::array(), omega = json::array();
    for (auto& gm : ctx.gamma()) gamma.push_back(gm);
    for (auto& w : ctx.omega()) {
        json r = json::array();
        for (auto& c : w) r.push_back(to_string(c));
        omega.push_back(r);
    }
    json out = {{"dm", ctx.dm()}, {"spectral_radius", ctx.spectral_radius()}, {"gamma", gamma}, {"omega", omega}};
    if (doc.contains("lowpass")) {
        Laurent a = laurent_from_json(doc["lowpass"], "/lowpass");
        json parts = json::array();
        for (auto& p : coset_split(a, ctx)) parts.push_back(to_json(p));
        out["lowpass_cosets"] = parts;
    }
    note("dm = " + std::to_string(ctx.dm()) + ", " + std::to_string(ctx.gamma().size()) + " cosets");
    emit(out);
    return 0;
}

int cmd_analyze(const std::string& input) {
    QtfBank b = load_bank(input);
    FilterReport r = analyze(b.lowpass, b.ctx);
    note("sr = " + std::to_string(r.sr) + ", vmo(u_a) = " + vmo_text(r.vmo_ua) + ", ceiling = " + vmo_text(r.vm_ceiling));
    emit(to_json(r));
    return 0;
}

int emit_bank(QtfBank bank, const std::string& name) {
    bank.meta.name = name;
    VerificationReport r = verify_bank(bank);
    note(bank.meta.source + ": " + std::to_string(bank.highpass.size()) + " high-pass filters, min vmo " +
         vmo_text(r.min_vmo) + (r.passes ? ", verified" : ", VERIFICATION FAILED"));
    emit(to_json(bank));
    return r.passes ? 0 : 1;
}

int cmd_specfact(const std::string& input) {
    LaurentMatrix A = laurent_matrix_from_json(load_input(input));
    HermitianFactorization f = factor_hermitian(A);
    bool ok = reconstruct(f, A.dim()) == A;
    note(std::to_string(f.terms.size()) + " Hermitian squares, reconstruction " + (ok ? "exact" : "FAILED"));
    json out = to_json(f);
    out["reconstructs"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& input, int samples) {
    QtfBank b = load_bank(input);
    VerificationReport r = verify_bank(b);
    json out = to_json(r);
    if (samples > 0) out["spot_check_max_error"] = spot_check_frequency(b, samples);
    note(std::string(r.passes ? "PASS" : "FAIL") + ": " + std::to_string(b.highpass.size()) + " filters, min vmo " +
         vmo_text(r.min_vmo));
    emit(out);
    return r.passes ? 0 : 1;
}

int cmd_smoothness(const std::string& input, const SmoothnessOptions& opts) {
    QtfBank b = load_bank(input);
    SmoothnessEstimate e = smoothness_l2(b.lowpass, b.ctx, opts);
    std::ostringstream s;
    s.precision(7);
    s << "sm2 = " << e.sm2 << " (m = " << e.m_used << ", rho_m = " << e.rho_m << ")";
    if (e.cross_rho_m) s << ", power-ratio rho_m = " << *e.cross_rho_m;
    note(s.str());
    if (e.sm2 > 0) note("phi in L2 (sufficient condition met)");
    emit(to_json(e));
    return 0;
}

int cmd_transform(const std::string& input, const std::string& bank_spec, int levels, bool inverse) {
    QtfBank b = load_bank(bank_spec);
    json doc = load_input(input);
    if (inverse) {
        Laurent v = synthesize(tree_from_json(doc), b);
        note("synthesized " + std::to_string(v.size()) + " coefficients");
        emit(to_json(v));
    } else {
        Laurent v = laurent_from_json(doc.contains("data") ? doc["data"] : doc, doc.contains("data") ? "/data" : "");
        TransformTree t = analyze(v, b, levels);
        note(std::to_string(levels) + " level(s), " + std::to_string(b.highpass.size()) + " detail bands per level");
        emit(to_json(t));
    }
    return 0;
}

int cmd_sample(const std::string& input, int depth, const std::string& which, const std::string& out) {
    QtfBank b = load_bank(input);
    GridSamples phi = sample_refinable(b.lowpass, b.ctx, depth);
    GridSamples s;
    if (which == "phi") {
        s = std::move(phi);
    } else if (which.rfind("psi:", 0) == 0) {
        std::size_t l = 0;
        try {
            l = std::stoul(which.substr(4));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--which", "expected psi:<index>");
        }
        if (l < 1 || l > b.highpass.size())
            throw Error(Errc::InvalidArgument, "psi index " + std::to_string(l) + " outside 1.." + std::to_string(b.highpass.size()));
        s = sample_framelet(b.highpass[l - 1].filter, phi, b.ctx);
    } else {
        throw CLI::ValidationError("--which", "expected phi or psi:<index>");
    }
    std::string path = out.empty() ? g.output : out;
    if (path.empty()) {
        write_csv(std::cout, s, b.ctx);
    } else {
        std::ofstream f(path);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
        write_csv(f, s, b.ctx);
    }
    note(std::to_string(s.values.size()) + " samples at depth " + std::to_string(s.depth));
    return 0;
}

int cmd_fixtures_verify_all() {
    json rows = json::array();
    bool all = true;
    for (auto& name : bank_fixture_names()) {
        QtfBank b = load_fixture(name);
        VerificationReport r = verify_bank(b);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < r.residual.rows(); ++i)
            for (std::size_t k = 0; k < r.residual.cols(); ++k) nonzero += r.residual(i, k).size();
        all = all && r.passes;
        note(std::string(r.passes ? "PASS " : "FAIL ") + name + ": " + std::to_string(b.highpass.size()) +
             " filters, residual terms " + std::to_string(nonzero) + ", min vmo " + vmo_text(r.min_vmo));
        rows.push_back({{"name", name}, {"passes", r.passes}, {"filters", b.highpass.size()},
                        {"residual_terms", nonzero}, {"min_vmo", vmo_json(r.min_vmo)}});
    }
    emit({{"all_pass", all}, {"fixtures", rows}});
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-tight framelet filter banks: analysis, construction, verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("-o,--output", g.output, "Write the JSON result to this file");
    app.add_flag("-q,--quiet", g.quiet, "Suppress the summary on stderr");
    app.add_flag("--json", g.compact, "Single-line JSON output");

    std::string input, bank_spec, which = "phi", csv_out, name;
    int m = 1, max_expand = 4, samples = 0, levels = 1, depth = 6;
    bool merge = false, inverse = false;
    SmoothnessOptions sopts;
    std::string method = "transition";

    auto add_input = [&](CLI::App* c) {
        c->add_option("-i,--input", input, "JSON file or fixture:<name>")->required();
    };

    auto* cosets = app.add_subcommand("cosets", "Coset representatives and the low-pass polyphase split");
    add_input(cosets);
    auto* an = app.add_subcommand("analyze", "Sum rules, vanishing-moment ceiling, tightness condition, filter count");
    add_input(an);

    auto* construct = app.add_subcommand("construct", "Build a quasi-tight bank from a low-pass filter");
    construct->require_subcommand(1);
    auto* c_dir = construct->add_subcommand("directional", "Two-tap elimination construction");
    add_input(c_dir);
    c_dir->add_flag("--merge", merge, "Fold proportional filters");
    std::vector<CLI::App*> vm_cmds;
    for (const char* n : {"vm-sos", "vm-linear", "differencing"}) {
        auto* c = construct->add_subcommand(n, std::string("Vanishing-moment construction: ") + n);
        add_input(c);
        c->add_option("--m", m, "Required vanishing moments")->required()->check(CLI::PositiveNumber);
        if (std::string(n) != "vm-sos") c->add_option("--max-expand", max_expand, "Support box expansion limit")->check(CLI::NonNegativeNumber);
        vm_cmds.push_back(c);
    }

    auto* sf = app.add_subcommand("specfact", "Factor a Hermitian Laurent matrix into signed Hermitian squares");
    add_input(sf);
    auto* ver = app.add_subcommand("verify", "Exact verification of a bank");
    add_input(ver);
    ver->add_option("--samples", samples, "Also run a frequency-domain spot check")->check(CLI::NonNegativeNumber);

    auto* sm = app.add_subcommand("smoothness", "L2 smoothness exponent of the refinable function");
    add_input(sm);
    sm->add_option("--tol", sopts.tol, "Power-ratio tolerance");
    sm->add_option("--nmax", sopts.nmax, "Power-ratio iteration limit");
    sm->add_option("--method", method, "transition or ratio")->check(CLI::IsMember({"transition", "ratio"}));
    sm->add_flag("--cross-check", sopts.cross_check, "Also run the power-ratio estimate");

    auto* tr = app.add_subcommand("transform", "Discrete framelet transform");
    add_input(tr);
    tr->add_option("--bank", bank_spec, "Bank JSON or fixture:<name>")->required();
    tr->add_option("--levels", levels, "Decomposition levels")->check(CLI::PositiveNumber);
    tr->add_flag("--inverse", inverse, "Input is a coefficient tree; reconstruct");

    auto* sa = app.add_subcommand("sample", "Sample phi or a framelet on a refined lattice (CSV)");
    add_input(sa);
    sa->add_option("--depth", depth, "Refinement depth of phi")->check(CLI::PositiveNumber);
    sa->add_option("--which", which, "phi or psi:<index>, 1-based");
    sa->add_option("--out", csv_out, "CSV file");

    auto* fx = app.add_subcommand("fixtures", "Shipped example filters and banks");
    fx->require_subcommand(1);
    auto* fx_list = fx->add_subcommand("list", "List fixture names");
    auto* fx_show = fx->add_subcommand("show", "Print a fixture document");
    fx_show->add_option("name", name, "Fixture name")->required();
    auto* fx_all = fx->add_subcommand("verify-all", "Verify every shipped bank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cosets) return cmd_cosets(input);
        if (*an) return cmd_analyze(input);
        if (*c_dir) {
            QtfBank b = load_bank(input);
            DirectionalOptions o;
            o.merge = merge;
            return emit_bank(construct_directional(b.lowpass, b.ctx, o), b.meta.name);
        }
        for (auto* c : vm_cmds) {
            if (!*c) continue;
            QtfBank b = load_bank(input);
            std::string n = c->get_name();
            if (n == "vm-sos") return emit_bank(construct_vm_sos(b.lowpass, b.ctx, m), b.meta.name);
            if (n == "vm-linear") return emit_bank(construct_vm_linear(b.lowpass, b.ctx, m, max_expand), b.meta.name);
            return emit_bank(construct_differencing(b.lowpass, b.ctx, m, max_expand), b.meta.name);
        }
        if (*sf) return cmd_specfact(input);
        if (*ver) return cmd_verify(input, samples);
        if (*sm) {
            sopts.method = method == "ratio" ? SmoothnessMethod::PowerRatio : SmoothnessMethod::TransitionEigen;
            return cmd_smoothness(input, sopts);
        }
        if (*tr) return cmd_transform(input, bank_spec, levels, inverse);
        if (*sa) return cmd_sample(input, depth, which, csv_out);
        if (*fx_list) {
            emit(fixture_names());
            return 0;
        }
        if (*fx_show) {
            emit(fixture_json(name));
            return 0;
        }
        if (*fx_all) return cmd_fixtures_verify_all();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
