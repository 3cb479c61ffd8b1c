#include "support.hpp"

#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"
#include "qtf/fixtures.hpp"
#include "qtf/linsolve.hpp"
#include "qtf/verify.hpp"
#include "qtf/vmconstruct.hpp"
#include "qtf/vmdecomp.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>

using namespace qtf;
using namespace qtf::testing;

namespace {

Laurent haar() { return seq(0, {q(1, 2), q(1, 2)}); }

Errc error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

Laurent reassemble_parts(const std::map<Index, Laurent>& parts, int d) {
    Laurent s(d);
    for (auto& [nu, p] : parts) {
        Laurent t = nabla(nu) * p;
        s += t;
    }
    return s;
}

} // namespace

TEST_SUITE("linsolve") {
    TEST_CASE("unique solution") {
        SparseSystem s(2);
        s.add_equation({{0, 1}, {1, 1}}, 3);
        s.add_equation({{0, 1}, {1, -1}}, q(1, 2));
        auto x = s.solve();
        REQUIRE(x);
        CHECK((*x)[0] == q(7, 4));
        CHECK((*x)[1] == q(5, 4));
    }

    TEST_CASE("free variables are zero") {
        SparseSystem s(3);
        s.add_equation({{0, 2}, {2, 4}}, 2);
        auto x = s.solve();
        REQUIRE(x);
        CHECK(2 * (*x)[0] + 4 * (*x)[2] == 2);
        CHECK((*x)[1] == 0);
    }

    TEST_CASE("inconsistent") {
        SparseSystem s(2);
        s.add_equation({{0, 1}, {1, 1}}, 1);
        s.add_equation({{0, 2}, {1, 2}}, 3);
        CHECK_FALSE(s.solve());
    }

    TEST_CASE("random consistent systems") {
        Rng rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = static_cast<std::size_t>(rng.integer(1, 8));
            std::vector<Rational> x0(n);
            for (auto& v : x0) v = rng.rational();
            SparseSystem s(n);
            std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
            std::vector<Rational> rhs;
            int m = static_cast<int>(rng.integer(1, 10));
            for (int i = 0; i < m; ++i) {
                std::vector<std::pair<std::size_t, Rational>> r;
                Rational b = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (rng.integer(0, 2) == 0) {
                        Rational c = rng.rational();
                        if (c == 0) continue;
                        r.push_back({j, c});
                        b += c * x0[j];
                    }
                s.add_equation(r, b);
                rows.push_back(r);
                rhs.push_back(b);
            }
            auto x = s.solve();
            REQUIRE(x);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Rational v = 0;
                for (auto& [j, c] : rows[i]) v += c * (*x)[j];
                CHECK(v == rhs[i]);
            }
        }
    }
}

TEST_SUITE("vmdecomp") {
    TEST_CASE("examples") {
        auto a = nabla_decompose(nabla({2}), 2);
        REQUIRE(a.size() == 1);
        CHECK(a.at(Index{2}) == delta(1));
        auto b = nabla_decompose(seq(0, {1, 0, -1}), 1);
        CHECK(b.at(Index{1}) == seq(0, {1, 1}));
        Laurent u = nabla({1, 1});
        auto c = nabla_decompose(u, 2);
        CHECK(reassemble_parts(c, 2) == u);
        for (auto& [nu, p] : c) CHECK(nu[0] + nu[1] == 2);
    }

    TEST_CASE("insufficient moments") {
        CHECK(error_of([] { nabla_decompose(seq(0, {1, 1}), 1); }) == Errc::InsufficientVM);
        CHECK(error_of([] { signed_squares_vm(seq(-1, {1, 1, 1}), 1); }) == Errc::InsufficientVM);
    }

    TEST_CASE("signed squares") {
        auto a = signed_squares_vm(seq(-1, {-1, 2, -1}), 1);
        REQUIRE(a.size() == 1);
        CHECK(a[0].sign == 1);
        CHECK(comparison_form(a[0].filter, dyadic()) == ScaledFilter(1, seq(0, {1, -1})));
        Laurent uh = ua(haar());
        auto h = signed_squares_vm(uh, 1);
        REQUIRE(h.size() == 1);
        CHECK(h[0].sign == 1);
        CHECK(h[0].filter.scale_sq() == q(1, 4));
        CHECK(sum_of_squares(h, 1) == uh);
        CHECK(signed_squares_vm(Laurent(1), 3).empty());
    }

    TEST_CASE("signed squares on fixture u_a") {
        for (auto name : {"aI4", "ex2_3_lowpass", "ex4_3_lowpass", "ex4_4_lowpass"}) {
            CAPTURE(name);
            QtfBank b = load_fixture(name);
            Laurent u = ua(b.lowpass);
            int m = vmo(u) / 2;
            auto sq = signed_squares_vm(u, m);
            CHECK(sum_of_squares(sq, b.ctx.dim()) == u);
            for (auto& t : sq) CHECK(vmo(t.filter.base()) >= m);
        }
    }

    TEST_CASE("random round trips") {
        Rng rng(11);
        for (int i = 0; i < 100; ++i) {
            int d = 1 + i % 2;
            int m = 1 + static_cast<int>(rng.integer(0, 2));
            Laurent u(d);
            for (auto& nu : multi_indices(d, m)) u += nabla(nu) * rng.laurent(d, 2, 2);
            auto parts = nabla_decompose(u, m);
            CHECK(reassemble_parts(parts, d) == u);
            // Hermitian with vmo >= 2m
            Laurent w(d);
            for (int r = 0; r < 2; ++r) {
                Laurent g(d);
                for (auto& nu : multi_indices(d, m)) g += nabla(nu) * rng.laurent(d, 1, 1);
                w += (g * g.adjoint()) * (rng.integer(0, 1) ? Rational(1) : Rational(-1));
            }
            auto sq = signed_squares_vm(w, m);
            CHECK(sum_of_squares(sq, d) == w);
            for (auto& t : sq) CHECK(vmo(t.filter.base()) >= m);
        }
    }
}

TEST_SUITE("vmconstruct") {
    TEST_CASE("E matrix examples") {
        LaurentMatrix I = build_E_matrix(delta(1), dyadic());
        CHECK(I == LaurentMatrix::identity(2, 1));
        LaurentMatrix E = build_E_matrix(nabla({1}), dyadic());
        CHECK(E(0, 0) == Laurent::constant(1, 1));
        CHECK(E(0, 1) == Laurent::constant(1, -1));
        CHECK(E(1, 0) == seq(1, {-1}));
        CHECK(E(1, 1) == Laurent::constant(1, 1));
    }

    TEST_CASE("E matrix phase must be real") {
        auto c3 = ctx1(3);
        CHECK(error_of([&] { build_E_matrix(nabla({1}), {q(1, 3)}, c3); }) == Errc::IrrationalPhase);
        LaurentMatrix E = build_E_matrix(nabla({1}), {q(1, 2)}, dyadic());
        CHECK(E(0, 1) == Laurent::constant(1, 1));
    }

    TEST_CASE("polyphase identity against the Fourier matrix") {
        // F(xi) D(xi) F(xi)^* = dm E(M^T xi) with D = diag(b^(xi + 2 pi omega)), F_jw = e^{-i gamma_j.(xi + 2 pi omega_w)}
        Rng rng(3);
        double worst = 0;
        for (const auto& c : {dyadic(), ctx1(3), quincunx(), make_context(IntMatrix{{1, -2}, {2, -1}})}) {
            int d = c.dim();
            std::size_t n = c.gamma().size();
            for (int trial = 0; trial < 10; ++trial) {
                Laurent b = rng.laurent(d, 5, 3);
                LaurentMatrix E = build_E_matrix(b, c);
                std::vector<double> xi(static_cast<std::size_t>(d));
                for (auto& x : xi) x = rng.real(-M_PI, M_PI);
                std::vector<double> mxi(static_cast<std::size_t>(d), 0.0);
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < d; ++s) mxi[r] += static_cast<double>(c.matrix()(s, r)) * xi[s];
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        std::complex<double> lhs = 0;
                        for (std::size_t w = 0; w < n; ++w) {
                            std::vector<double> z = xi;
                            double pj = 0, pk = 0;
                            for (int t = 0; t < d; ++t) {
                                z[t] += 2 * M_PI * to_double(c.omega()[w][t]);
                                pj += static_cast<double>(c.gamma()[j][t]) * z[t];
                                pk += static_cast<double>(c.gamma()[k][t]) * z[t];
                            }
                            lhs += std::polar(1.0, -pj) * b.evaluate(z) * std::polar(1.0, pk);
                        }
                        std::complex<double> rhs = static_cast<double>(n) * E(j, k).evaluate(mxi);
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
            }
        }
        CHECK(worst < 1e-10);
    }

    TEST_CASE("Haar S1 solution") {
        ASolution s = solve_A_system(haar(), dyadic(), 1, Box{{0}, {0}});
        REQUIRE(s.A.size() == 1);
        const LaurentMatrix& A = s.A.at({0, 0});
        CHECK(A(0, 0) == Laurent::constant(1, q(1, 4)));
        CHECK(A(0, 1).is_zero());
        CHECK(A(1, 0).is_zero());
        CHECK(A(1, 1).is_zero());
        LaurentMatrix N = build_Na(haar(), dyadic());
        N *= q(1, 2);
        CHECK(A_system_value(s, dyadic()) == N);
    }

    TEST_CASE("Haar end to end") {
        for (auto* build : {+[](const Laurent& a, const DilationContext& c) { return construct_vm_linear(a, c, 1); },
                            +[](const Laurent& a, const DilationContext& c) { return construct_differencing(a, c, 1); }}) {
            QtfBank b = build(haar(), dyadic());
            REQUIRE(b.highpass.size() == 1);
            CHECK(b.highpass[0].sign == 1);
            CHECK(b.highpass[0].filter.scale_sq() == q(1, 4));
            CHECK(comparison_form(b.highpass[0].filter, dyadic()) == ScaledFilter(q(1, 4), seq(0, {1, -1})));
            CHECK(verify_bank(b).passes);
        }
    }

    TEST_CASE("Haar vm-sos gives two filters") {
        QtfBank b = construct_vm_sos(haar(), dyadic(), 1);
        REQUIRE(b.highpass.size() == 2);
        for (auto& h : b.highpass) {
            CHECK(h.sign == 1);
            CHECK(h.filter.scale_sq() == q(1, 8));
            CHECK(vmo(h.filter.base()) >= 1);
        }
        CHECK(verify_bank(b).passes);
    }

    TEST_CASE("aI4 differencing at m = 2") {
        QtfBank b = construct_differencing(load_fixture("aI4").lowpass, dyadic(), 2);
        REQUIRE(b.highpass.size() == 9);
        std::vector<int> signs, vm;
        for (auto& h : b.highpass) {
            signs.push_back(h.sign);
            vm.push_back(vmo(h.filter.base()));
        }
        CHECK(sorted(signs) == std::vector<int>{-1, -1, -1, 1, 1, 1, 1, 1, 1});
        CHECK(sorted(vm) == std::vector<int>{2, 2, 3, 3, 3, 3, 3, 3, 3});
        CHECK(verify_bank(b).passes);
    }

    TEST_CASE("both split policies verify") {
        Laurent a = load_fixture("aI4").lowpass;
        ASolution s = solve_A_system_auto(a, dyadic(), 2);
        for (auto p : {SplitPolicy::IdentityFirst, SplitPolicy::IdentitySecond}) {
            auto r = verify_bank(assemble_bank(a, dyadic(), s, p));
            CHECK(r.passes);
            CHECK(r.min_vmo >= 2);
        }
    }

    TEST_CASE("quincunx constructions") {
        QtfBank in = load_fixture("ex4_3_lowpass");
        for (int m = 1; m <= 2; ++m) {
            for (auto b : {construct_vm_sos(in.lowpass, in.ctx, m), construct_vm_linear(in.lowpass, in.ctx, m),
                           construct_differencing(in.lowpass, in.ctx, m)}) {
                auto r = verify_bank(b);
                CHECK(r.passes);
                CHECK(r.min_vmo >= m);
                CHECK(r.ceiling_respected);
            }
        }
    }

    TEST_CASE("preconditions") {
        Laurent a = load_fixture("aI4").lowpass;
        CHECK(error_of([&] { construct_vm_sos(a, dyadic(), 0); }) == Errc::CeilingExceeded);
        CHECK(error_of([&] { construct_vm_sos(a, dyadic(), 3); }) == Errc::CeilingExceeded);
        CHECK(error_of([&] { construct_differencing(a, dyadic(), 3); }) == Errc::CeilingExceeded);
        CHECK(error_of([&] { construct_vm_linear(delta(1), dyadic(), 1); }) == Errc::NoBasicSumRule);
        CHECK(error_of([&] { construct_vm_sos(a, quincunx(), 1); }) == Errc::DimMismatch);
    }

    TEST_CASE("too small a box is infeasible") {
        Laurent a = load_fixture("aI4").lowpass;
        CHECK(error_of([&] { solve_A_system(a, dyadic(), 2, Box{{0}, {0}}); }) == Errc::Infeasible);
    }
}
