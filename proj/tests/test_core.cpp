#include "support.hpp"

#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"
#include "qtf/fixtures.hpp"
#include "qtf/json_io.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace qtf;
using namespace qtf::testing;

TEST_SUITE("rational") {
    TEST_CASE("parse accepts integers and fractions only") {
        CHECK(parse_rational("3") == 3);
        CHECK(parse_rational("-7/4") == q(-7, 4));
        CHECK(parse_rational("6/8") == q(3, 4));
        for (const char* bad : {"0.5", "1e3", "1/0", "", "/3", "3/", "a", "1/-2", " 1"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_rational(bad), Error);
        }
        try {
            parse_rational("0.5");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonRational);
        }
    }

    TEST_CASE("multi-indices are listed lexicographically") {
        auto m = multi_indices(2, 2);
        REQUIRE(m.size() == 3);
        CHECK(m[0] == Index{0, 2});
        CHECK(m[1] == Index{1, 1});
        CHECK(m[2] == Index{2, 0});
        CHECK(greedy_sub_index(Index{1, 3}, 2) == Index{1, 1});
        CHECK(greedy_sub_index(Index{3, 1}, 2) == Index{2, 0});
        CHECK(floor_div(-1, 2) == -1);
        CHECK(floor_div(-4, 2) == -2);
        CHECK(floor_div(3, -2) == -2);
    }
}

TEST_SUITE("lattice") {
    TEST_CASE("dyadic context") {
        const auto& c = dyadic();
        CHECK(c.dm() == 2);
        REQUIRE(c.gamma().size() == 2);
        CHECK(c.gamma()[0] == Index{0});
        CHECK(c.gamma()[1] == Index{1});
        CHECK(c.omega()[1][0] == q(1, 2));
    }

    TEST_CASE("quincunx context") {
        const auto& c = quincunx();
        CHECK(c.dm() == 2);
        CHECK(c.gamma() == std::vector<Index>{{0, 0}, {1, 0}});
        CHECK(c.omega()[0] == std::vector<Rational>{0, 0});
        CHECK(c.omega()[1] == std::vector<Rational>{q(1, 2), q(1, 2)});
        CHECK(c.spectral_radius() == doctest::Approx(std::sqrt(2.0)));
    }

    TEST_CASE("sqrt(3) dilation") {
        auto c = make_context(IntMatrix{{1, -2}, {2, -1}});
        CHECK(c.dm() == 3);
        CHECK(c.spectral_radius() == doctest::Approx(std::sqrt(3.0)));
        CHECK(c.gamma().size() == 3);
        CHECK(c.omega().size() == 3);
    }

    TEST_CASE("rejected matrices") {
        auto code = [](const IntMatrix& m) {
            try {
                make_context(m);
            } catch (const Error& e) {
                return e.code();
            }
            return Errc::InvalidArgument;
        };
        CHECK(code(IntMatrix{{1, 0}, {0, 1}}) == Errc::NotExpansive);
        CHECK(code(IntMatrix{{2, 0}, {0, 1}}) == Errc::NotExpansive);
        CHECK(code(IntMatrix{{1, 1}, {1, 1}}) == Errc::Singular);
        CHECK(code(IntMatrix{{1}}) == Errc::NotExpansive);
    }

    TEST_CASE("reduce to coset") {
        auto r = dyadic().reduce(Index{-1});
        CHECK(dyadic().gamma()[r.j] == Index{1});
        CHECK(r.alpha == Index{-1});
        auto z = quincunx().reduce(Index{0, 0});
        CHECK(z.j == 0);
        CHECK(z.alpha == Index{0, 0});
        auto s = quincunx().reduce(Index{2, 0});
        CHECK(s.j == 0);
        CHECK(s.alpha == Index{1, 1});
    }

    TEST_CASE("reduce is a bijection onto gamma + M alpha on a box") {
        for (const auto& M : {IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{1, 1}, {1, -1}}, IntMatrix{{1, -2}, {2, -1}},
                              IntMatrix{{2, 0}, {0, 2}}}) {
            auto c = make_context(M);
            int d = c.dim();
            Index k(static_cast<std::size_t>(d), -5);
            while (true) {
                auto r = c.reduce(k);
                CHECK(c.gamma()[r.j] + c.dilate(r.alpha) == k);
                std::size_t i = 0;
                while (i < k.size() && k[i] == 5) k[i++] = -5;
                if (i == k.size()) break;
                ++k[i];
            }
        }
    }

    TEST_CASE("representatives are distinct and U U* = dm I") {
        for (const auto& M : {IntMatrix{{2}}, IntMatrix{{1, 1}, {1, -1}}, IntMatrix{{1, -2}, {2, -1}}, IntMatrix{{2, 0}, {0, 2}}}) {
            auto c = make_context(M);
            std::size_t n = c.gamma().size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Index a;
                    CHECK_FALSE(c.divide(c.gamma()[i] - c.gamma()[j], a));
                    bool integral = true;
                    for (std::size_t t = 0; t < c.omega()[i].size(); ++t)
                        integral = integral && Rational(c.omega()[i][t] - c.omega()[j][t]).get_den() == 1;
                    CHECK_FALSE(integral);
                }
            double worst = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    std::complex<double> s = 0;
                    for (std::size_t j = 0; j < n; ++j) {
                        double pi = 0, pk = 0;
                        for (std::size_t t = 0; t < c.gamma()[i].size(); ++t) {
                            pi += static_cast<double>(c.gamma()[i][t]) * to_double(c.omega()[j][t]);
                            pk += static_cast<double>(c.gamma()[k][t]) * to_double(c.omega()[j][t]);
                        }
                        s += std::polar(1.0, -2 * M_PI * pi) * std::conj(std::polar(1.0, -2 * M_PI * pk));
                    }
                    worst = std::max(worst, std::abs(s - (i == k ? double(n) : 0.0)));
                }
            CHECK(worst < 1e-12);
        }
    }
}

TEST_SUITE("laurent") {
    TEST_CASE("arithmetic examples") {
        CHECK(seq(0, {1, -1}) * seq(0, {1, 1}) == seq(0, {1, 0, -1}));
        Laurent p = seq(-2, {q(1, 3), 4, q(-5, 2)});
        CHECK((p + p * Rational(-1)).is_zero());
        Laurent h = seq(0, {q(1, 2), q(1, 2)});
        CHECK(h * h.adjoint() == seq(-1, {q(1, 4), q(1, 2), q(1, 4)}));
        CHECK(seq(1, {1}).adjoint() == seq(-1, {1}));
        CHECK(seq(0, {1, -1}).adjoint() == seq(-1, {-1, 1}));
    }

    TEST_CASE("no stored zeros") {
        Laurent u(1);
        u.add_term({3}, 2);
        u.add_term({3}, -2);
        CHECK(u.is_zero());
        CHECK(u.size() == 0);
    }

    TEST_CASE("coset split examples") {
        auto h = coset_split(seq(0, {q(1, 2), q(1, 2)}), dyadic());
        CHECK(h[0] == Laurent::constant(1, q(1, 2)));
        CHECK(h[1] == Laurent::constant(1, q(1, 2)));
        Laurent aI4 = seq(-3, {q(-1, 32), 0, q(9, 32), q(1, 2), q(9, 32), 0, q(-1, 32)});
        auto a = coset_split(aI4, dyadic());
        CHECK(a[0] == Laurent::constant(1, q(1, 2)));
        CHECK(a[1] == seq(-2, {q(-1, 32), q(9, 32), q(9, 32), q(-1, 32)}));
        auto n = coset_split(nabla({1}), dyadic());
        CHECK(n[0] == Laurent::constant(1, 1));
        CHECK(n[1] == Laurent::constant(1, -1));
        CHECK(reassemble(a, dyadic()) == aI4);
    }

    TEST_CASE("dilate") {
        CHECK(seq(1, {1}).dilate(dyadic()) == seq(2, {1}));
        Laurent u = Laurent::constant(2, 1) - Laurent::monomial({1, 0});
        CHECK(u.dilate(quincunx()) == Laurent::constant(2, 1) - Laurent::monomial({1, 1}));
    }

    TEST_CASE("nabla") {
        CHECK(nabla({1}) == seq(0, {1, -1}));
        CHECK(nabla({2}) == seq(0, {1, -2, 1}));
        Laurent e1 = Laurent::constant(2, 1) - Laurent::monomial({1, 0});
        Laurent e2 = Laurent::constant(2, 1) - Laurent::monomial({0, 1});
        CHECK(nabla({1, 1}) == e1 * e2);
    }

    TEST_CASE("moments and vmo") {
        CHECK(vmo(nabla({2})) == 2);
        CHECK(vmo(Laurent(1)) == kInfiniteVmo);
        CHECK(moment(delta(1), {0}) == 1);
        CHECK(moment(nabla({1}), {1}) == -1);
        CHECK(moment(seq(0, {q(1, 2), q(1, 2)}), {0}) == 1);
        Laurent aI4 = seq(-3, {q(-1, 32), 0, q(9, 32), q(1, 2), q(9, 32), 0, q(-1, 32)});
        CHECK(vmo(ua(aI4)) == 4);
        CHECK(vmo(ua(seq(0, {q(1, 2), q(1, 2)}))) == 2);
    }

    TEST_CASE("evaluate matches the symbol convention") {
        Laurent u = seq(0, {1, -1});
        auto z = u.evaluate({M_PI});
        CHECK(z.real() == doctest::Approx(2.0));
        CHECK(std::abs(z.imag()) < 1e-12);
    }

    TEST_CASE("dimension mismatch") {
        CHECK_THROWS_AS(Laurent(1) + Laurent(2), Error);
    }
}

TEST_SUITE("filterbank") {
    TEST_CASE("scaled filter canonical form") {
        ScaledFilter f(1, seq(0, {q(1, 2), q(-1, 2)}));
        CHECK(f.scale_sq() == q(1, 4));
        CHECK(f.base() == seq(0, {1, -1}));
        ScaledFilter z(q(3, 5), Laurent(1));
        CHECK(z.scale_sq() == 1);
        CHECK(z.base().is_zero());
        ScaledFilter neg(1, seq(0, {-2, 2}));
        CHECK(neg.base() == seq(0, {-1, 1}));
        CHECK(neg.scale_sq() == 4);
    }

    TEST_CASE("comparison form ignores sign and M-shifts") {
        ScaledFilter a(q(1, 4), seq(0, {1, -1}));
        ScaledFilter b(q(1, 4), seq(4, {-1, 1}));
        CHECK(comparison_form(a, dyadic()) == comparison_form(b, dyadic()));
        ScaledFilter c(q(1, 4), seq(1, {1, -1}));
        CHECK(comparison_form(a, dyadic()) != comparison_form(c, dyadic()));
    }

    TEST_CASE("N_a for Haar") {
        LaurentMatrix N = build_Na(seq(0, {q(1, 2), q(1, 2)}), dyadic());
        CHECK(N(0, 0) == Laurent::constant(1, q(1, 2)));
        CHECK(N(0, 1) == Laurent::constant(1, q(-1, 2)));
        CHECK(N(1, 0) == Laurent::constant(1, q(-1, 2)));
        CHECK(N(1, 1) == Laurent::constant(1, q(1, 2)));
    }

    TEST_CASE("N_a(0) under the basic sum rule") {
        for (auto name : {"aI4", "ex2_3_lowpass", "ex2_4_lowpass", "ex4_4_lowpass"}) {
            QtfBank b = load_fixture(name);
            LaurentMatrix N = build_Na(b.lowpass, b.ctx);
            Rational dm(static_cast<long>(b.ctx.dm()));
            for (std::size_t j = 0; j < N.rows(); ++j)
                for (std::size_t k = 0; k < N.cols(); ++k) CHECK(N(j, k).sum() == (j == k ? Rational(1 - 1 / dm) : Rational(-1 / dm)));
        }
    }

    TEST_CASE("det N_a = 1 - dm sum |a^[gamma]|^2 on the quincunx fixture") {
        QtfBank b = load_fixture("ex2_3_lowpass");
        LaurentMatrix N = build_Na(b.lowpass, b.ctx);
        Laurent det = N(0, 0) * N(1, 1) - N(0, 1) * N(1, 0);
        Laurent rhs = delta(2);
        for (auto& p : coset_split(b.lowpass, b.ctx)) rhs -= (p * p.adjoint()) * Rational(2);
        CHECK(det == rhs);
    }

    TEST_CASE("N_a entries term by term") {
        QtfBank b = load_fixture("ex2_4_lowpass");
        LaurentMatrix N = build_Na(b.lowpass, b.ctx);
        auto v = coset_split(b.lowpass, b.ctx);
        for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t k = 0; k < v.size(); ++k) {
                Laurent e = (v[j].adjoint() * v[k]) * Rational(-3);
                if (j == k) e += delta(2);
                CHECK(N(j, k) == e);
            }
    }
}

TEST_SUITE("json_io") {
    TEST_CASE("bank round trip") {
        for (auto& name : fixture_names()) {
            CAPTURE(name);
            QtfBank b = load_fixture(name);
            json j = to_json(b);
            QtfBank c = bank_from_json(j);
            CHECK(to_json(c) == j);
            CHECK(c.lowpass == b.lowpass);
            CHECK(c.highpass.size() == b.highpass.size());
        }
    }

    TEST_CASE("ex2_2 scale factors") {
        QtfBank b = load_fixture("ex2_2");
        std::vector<Rational> s;
        for (auto& h : b.highpass) s.push_back(h.filter.scale_sq());
        CHECK(sorted(s) == sorted(std::vector<Rational>{q(9, 64), q(9, 64), q(63, 1024), q(1, 1024), q(1, 64), q(1, 64),
                                                         q(9, 512)}));
        std::vector<int> signs;
        for (auto& h : b.highpass) signs.push_back(h.sign);
        CHECK(signs == std::vector<int>{1, 1, 1, 1, -1, -1, -1});
    }

    TEST_CASE("schema errors carry a path") {
        json j = to_json(load_fixture("ex2_2"));
        j["highpass"][2]["base"]["terms"][0]["v"] = "0.5";
        try {
            bank_from_json(j);
            FAIL("expected NonRational");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonRational);
        }
        json k = to_json(load_fixture("ex2_2"));
        k["highpass"][1]["sign"] = 2;
        try {
            bank_from_json(k);
            FAIL("expected SchemaError");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::SchemaError);
            CHECK(std::string(e.what()).find("/highpass/1/sign") != std::string::npos);
        }
        json f = to_json(load_fixture("haar"));
        f["lowpass"]["terms"][0]["v"] = 0.5;
        CHECK_THROWS_AS(bank_from_json(f), Error);
    }

    TEST_CASE("fixture input addressing") {
        CHECK(load_input("fixture:haar") == fixture_json("haar"));
        CHECK_THROWS_AS(load_input("fixture:nope"), Error);
    }
}
