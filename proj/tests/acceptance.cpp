// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "properties.hpp"
#include "support.hpp"

#include "qtf/analysis.hpp"
#include "qtf/directional.hpp"
#include "qtf/errors.hpp"
#include "qtf/fixtures.hpp"
#include "qtf/smoothness.hpp"
#include "qtf/verify.hpp"
#include "qtf/vmconstruct.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

using namespace qtf;
using namespace qtf::testing;

namespace {

// Every bank built or loaded during the run, for the ceiling check in criterion 7.
std::vector<QtfBank> g_seen;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (pass) note << what;
            else note << "; " << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> kLowpass{"haar",          "aI4",           "ex2_1_lowpass", "ex2_3_lowpass", "ex2_4_lowpass",
                                        "ex4_2_lowpass", "ex4_3_lowpass", "ex4_4_lowpass", "intro_qt_lowpass"};

std::map<int, int> histogram(const std::vector<int>& v) {
    std::map<int, int> h;
    for (int x : v) ++h[x];
    return h;
}

void fixture_verification(Outcome& o) {
    const std::map<std::string, std::size_t> counts{{"ex2_1", 13}, {"ex2_2", 7}, {"ex2_3", 8}, {"ex2_4", 18},
                                                    {"ex4_1", 9},  {"ex4_2", 7}, {"ex4_3", 19}, {"ex4_3_three", 3},
                                                    {"ex4_4", 5},  {"intro_qt", 2}};
    auto t0 = std::chrono::steady_clock::now();
    for (auto& [name, n] : counts) {
        QtfBank b = load_fixture(name);
        g_seen.push_back(b);
        o.require(b.highpass.size() == n, name + " has " + std::to_string(b.highpass.size()) + " filters");
        auto r = verify_bank(b);
        o.require(r.passes && r.residual.is_zero(), name + " residual nonzero");
    }
    double dt = seconds_since(t0);
    o.require(dt < 5, "took " + std::to_string(dt) + " s");
    if (o.pass) o.note << counts.size() << " banks exact";
}

void directional_reconstruction(Outcome& o) {
    for (auto [low, full] : {std::pair<const char*, const char*>{"ex2_1_lowpass", "ex2_1"}, {"aI4", "ex2_2"}}) {
        auto t0 = std::chrono::steady_clock::now();
        QtfBank in = load_fixture(low);
        QtfBank out = construct_directional(in.lowpass, in.ctx);
        double dt = seconds_since(t0);
        g_seen.push_back(out);
        QtfBank ref = load_fixture(full);
        o.require(filter_multiset(out) == filter_multiset(ref), std::string(full) + " multiset differs");
        o.require(dt < 1, std::string(full) + " took " + std::to_string(dt) + " s");
        o.require(verify_bank(out).passes, std::string(full) + " output fails verification");
    }
    QtfBank e22 = construct_directional(load_fixture("aI4").lowpass, dyadic());
    std::vector<int> signs;
    for (auto& h : e22.highpass) signs.push_back(h.sign);
    o.require(histogram(signs) == std::map<int, int>{{-1, 3}, {1, 4}}, "aI4 sign pattern");
    if (o.pass) o.note << "13 and 7 filters match as multisets";
}

void counts_and_conditions(Outcome& o) {
    auto check = [&](const char* name, const std::string& what, long got, long want) {
        o.require(got == want, std::string(name) + " " + what + " = " + std::to_string(got));
    };
    QtfBank aI4 = load_fixture("aI4");
    QtfBank e21 = load_fixture("ex2_1_lowpass");
    QtfBank e23 = load_fixture("ex2_3_lowpass");
    QtfBank e24 = load_fixture("ex2_4_lowpass");
    check("aI4", "s", predicted_count(aI4.lowpass, aI4.ctx), 7);
    check("ex2_3", "s", predicted_count(e23.lowpass, e23.ctx), 8);
    check("ex2_4", "s", predicted_count(e24.lowpass, e24.ctx), 18);
    bool negative = false;
    for (auto& [k, c] : e21.lowpass.terms()) negative = negative || c < 0;
    o.require(negative && tightness_condition(e21.lowpass, e21.ctx), "ex2_1 tightness");
    o.require(!tightness_condition(aI4.lowpass, aI4.ctx), "aI4 tightness");
    check("aI4", "sr", sum_rule_order(aI4.lowpass, aI4.ctx), 4);
    check("aI4", "vmo(u_a)", vmo(ua(aI4.lowpass)), 4);
    for (auto name : {"ex4_2_lowpass", "ex4_3_lowpass"}) {
        QtfBank b = load_fixture(name);
        check(name, "sr", sum_rule_order(b.lowpass, b.ctx), 2);
        check(name, "vmo(u_a)", vmo(ua(b.lowpass)), 4);
    }
    if (o.pass) o.note << "all integers match";
}

void vm_constructions(Outcome& o) {
    int built = 0;
    double slowest = 0;
    auto timed = [&](const std::string& tag, const std::function<QtfBank()>& f, int m) -> std::optional<QtfBank> {
        auto t0 = std::chrono::steady_clock::now();
        try {
            QtfBank b = f();
            double dt = seconds_since(t0);
            slowest = std::max(slowest, dt);
            o.require(dt < 30, tag + " took " + std::to_string(dt) + " s");
            auto r = verify_bank(b);
            o.require(r.passes, tag + " fails verification");
            o.require(r.min_vmo >= m, tag + " min vmo " + std::to_string(r.min_vmo));
            g_seen.push_back(b);
            ++built;
            return b;
        } catch (const Error& e) {
            o.require(false, tag + ": " + e.what());
            return std::nullopt;
        }
    };
    for (auto& name : kLowpass) {
        QtfBank in = load_fixture(name);
        int ceiling = vm_ceiling(in.lowpass, in.ctx);
        for (int m = 1; m <= ceiling; ++m)
            timed(name + " vm-sos m=" + std::to_string(m), [&] { return construct_vm_sos(in.lowpass, in.ctx, m); }, m);
        if (in.ctx.dim() == 1)
            timed(name + " differencing m=" + std::to_string(ceiling),
                  [&] { return construct_differencing(in.lowpass, in.ctx, ceiling); }, ceiling);
    }
    auto b = timed("aI4 differencing m=2", [] { return construct_differencing(load_fixture("aI4").lowpass, dyadic(), 2); }, 2);
    if (b) {
        std::vector<int> signs, vm;
        for (auto& h : b->highpass) {
            signs.push_back(h.sign);
            vm.push_back(vmo(h.filter.base()));
        }
        o.require(histogram(signs) == std::map<int, int>{{-1, 3}, {1, 6}}, "aI4 differencing signs");
        o.require(histogram(vm) == std::map<int, int>{{2, 2}, {3, 7}}, "aI4 differencing vmo");
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, ", slowest %.2f s", slowest);
        o.note << built << " banks verified" << buf;
    }
}

void haar_pipeline(Outcome& o) {
    Laurent a = seq(0, {q(1, 2), q(1, 2)});
    ASolution s = solve_A_system(a, dyadic(), 1, Box{{0}, {0}});
    LaurentMatrix want(2, 2, 1);
    want(0, 0) = Laurent::constant(1, q(1, 4));
    o.require(s.A.size() == 1 && s.A.at({0, 0}) == want, "S1 solution is not diag(1/4, 0)");
    QtfBank b = assemble_bank(a, dyadic(), s);
    g_seen.push_back(b);
    o.require(b.highpass.size() == 1, std::to_string(b.highpass.size()) + " filters");
    if (b.highpass.size() == 1) {
        o.require(b.highpass[0].sign == 1, "sign");
        o.require(comparison_form(b.highpass[0].filter, dyadic()) == ScaledFilter(q(1, 4), seq(0, {1, -1})), "filter");
    }
    o.require(verify_bank(b).passes, "verification");
    if (o.pass) o.note << "(1/2)(1 - e^{-i xi}), sign +1";
}

void smoothness(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<const char*, double>> values{
        {"ex2_1_lowpass", 0.992335}, {"aI4", 2.440765},          {"ex2_3_lowpass", 1.577645}, {"ex2_4_lowpass", 1.657138},
        {"ex4_2_lowpass", 0.235724}, {"ex4_3_lowpass", 1.801593}, {"ex4_4_lowpass", 0.885296}};
    double worst = 0;
    for (auto& [name, want] : values) {
        QtfBank b = load_fixture(name);
        double got = smoothness_l2(b.lowpass, b.ctx).sm2;
        worst = std::max(worst, std::abs(got - want));
        o.require(std::abs(got - want) < 5e-3, std::string(name) + " sm2 " + std::to_string(got));
    }
    double haar = smoothness_l2(seq(0, {q(1, 2), q(1, 2)}), dyadic()).sm2;
    o.require(std::abs(haar - 0.5) < 1e-9, "Haar sm2 " + std::to_string(haar));
    double cross = 0;
    for (auto& name : kLowpass) {
        QtfBank b = load_fixture(name);
        if (b.ctx.dim() != 1) continue;
        SmoothnessOptions opts;
        SmoothnessEstimate e = smoothness_l2(b.lowpass, b.ctx, opts);
        opts.method = SmoothnessMethod::PowerRatio;
        try {
            SmoothnessEstimate r = smoothness_l2(b.lowpass, b.ctx, opts);
            cross = std::max(cross, std::abs(r.sm2 - e.sm2));
            o.require(std::abs(r.sm2 - e.sm2) < 1e-4, name + " methods disagree");
        } catch (const Error& err) {
            o.require(false, name + ": " + err.what());
        }
    }
    double dt = seconds_since(t0);
    o.require(dt < 60, "took " + std::to_string(dt) + " s");
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "max error %.2e, 1-D method gap %.2e, %.1f s", worst, cross, dt);
        o.note << buf;
    }
}

void properties(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto need = [&](const char* what, const PropertyResult& r) { o.require(r.ok(), std::string(what) + ": " + r.summary()); };
    need("ring axioms", ring_axioms(200, 1));
    need("coset reassembly", coset_reassembly(200, 2));
    need("spectral factorization", specfact_reconstruction(100, 3));
    need("vanishing-moment round trips", vm_round_trips(100, 4));
    double spot = polyphase_spot_check(100, 5);
    o.require(spot < 1e-10, "polyphase identity error " + std::to_string(spot));
    for (auto& name : bank_fixture_names()) {
        QtfBank b = load_fixture(name);
        need(name.c_str(), perfect_reconstruction(b, 100, 6));
    }
    int bounded = 0;
    for (auto& b : g_seen) {
        bool ok = ceiling_bound(b);
        o.require(ok, "ceiling bound broken by " + b.meta.source);
        bounded += ok;
    }
    double dt = seconds_since(t0);
    o.require(dt < 120, "took " + std::to_string(dt) + " s");
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "ceiling bound on %d banks, polyphase error %.1e", bounded, spot);
        o.note << buf;
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
        {"fixture verification", fixture_verification},
        {"directional reconstruction", directional_reconstruction},
        {"counts and conditions", counts_and_conditions},
        {"vanishing-moment constructions", vm_constructions},
        {"Haar S1-S3 pipeline", haar_pipeline},
        {"smoothness", smoothness},
        {"property suites", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s  criterion %zu  %-32s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    seconds_since(t0), o.note.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
