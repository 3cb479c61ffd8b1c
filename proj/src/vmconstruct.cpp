#include "qtf/vmconstruct.hpp"
#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"
#include "qtf/linsolve.hpp"
#include "qtf/specfact.hpp"
#include "qtf/vmdecomp.hpp"

#include <algorithm>
#include <tuple>

namespace qtf {

LaurentMatrix build_E_matrix(const Laurent& b, const std::vector<Rational>& beta, const DilationContext& ctx) {
    const auto& G = ctx.gamma();
    std::size_t n = G.size();
    LaurentMatrix E(n, n, ctx.dim());
    for (std::size_t k = 0; k < n; ++k) {
        Rational x = 0;
        for (int i = 0; i < ctx.dim(); ++i) x += Rational(static_cast<long>(G[k][i])) * beta[i];
        Rational twice = 2 * x;
        twice.canonicalize();
        if (twice.get_den() != 1) throw Error(Errc::IrrationalPhase, "phase e^{2 pi i gamma.beta} is not real");
        int ph = mpz_even_p(twice.get_num_mpz_t()) ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) E(j, k) = coset_sequence(b, G[k] - G[j], ctx) * Rational(ph);
    }
    return E;
}

LaurentMatrix build_E_matrix(const Laurent& b, const DilationContext& ctx) {
    return build_E_matrix(b, std::vector<Rational>(static_cast<std::size_t>(ctx.dim()), Rational(0)), ctx);
}

namespace {

void widen(Index& lo, Index& hi, const Laurent& u) {
    if (u.is_zero()) return;
    auto [l, h] = u.bounding_box();
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = std::min(lo[i], l[i]);
        hi[i] = std::max(hi[i], h[i]);
    }
}

void check_preconditions(const Laurent& a, const DilationContext& ctx, int m) {
    if (a.dim() != ctx.dim()) throw Error(Errc::DimMismatch, "filter and dilation dimensions differ");
    if (!basic_sum_rule(a, ctx)) throw Error(Errc::NoBasicSumRule, "coset sums of the low-pass filter are not all 1/dm");
    int ceil = vm_ceiling(a, ctx);
    if (m < 1 || m > ceil)
        throw Error(Errc::CeilingExceeded, "m = " + std::to_string(m) + " outside [1, " + std::to_string(ceil) + "]");
}

// All exponents of a box, ordered by distance from the centre so that central coefficients
// are preferred as pivots.
std::vector<Index> box_points(const Box& b) {
    std::vector<Index> pts;
    Index k = b.lo;
    std::size_t d = k.size();
    while (true) {
        pts.push_back(k);
        std::size_t i = 0;
        while (i < d && k[i] == b.hi[i]) {
            k[i] = b.lo[i];
            ++i;
        }
        if (i == d) break;
        ++k[i];
    }
    std::stable_sort(pts.begin(), pts.end(), [](const Index& x, const Index& y) {
        std::int64_t nx = 0, ny = 0;
        for (auto v : x) nx += v < 0 ? -v : v;
        for (auto v : y) ny += v < 0 ? -v : v;
        return nx < ny;
    });
    return pts;
}

struct Unknown {
    std::size_t mu, nu, p, q;
    Index t;
};

} // namespace

Box default_support_box(const Laurent& a, const DilationContext& ctx, int m, int layers) {
    int d = ctx.dim();
    LaurentMatrix N = build_Na(a, ctx);
    Index nlo(d, INT64_MAX), nhi(d, INT64_MIN);
    for (std::size_t j = 0; j < N.rows(); ++j)
        for (std::size_t k = 0; k < N.cols(); ++k) widen(nlo, nhi, N(j, k));
    Index elo(d, INT64_MAX), ehi(d, INT64_MIN);
    for (const auto& mu : multi_indices(d, m)) {
        LaurentMatrix E = build_E_matrix(nabla(mu), ctx);
        for (std::size_t j = 0; j < E.rows(); ++j)
            for (std::size_t k = 0; k < E.cols(); ++k) widen(elo, ehi, E(j, k));
    }
    Box b{Index(d), Index(d)};
    for (int i = 0; i < d; ++i) {
        std::int64_t lo = nlo[i], hi = nhi[i];
        if (lo > hi) lo = hi = 0;
        std::int64_t spread = ehi[i] - elo[i];
        std::int64_t slo = lo + spread, shi = hi - spread;
        if (slo > shi) slo = shi = floor_div(lo + hi, 2);
        b.lo[i] = slo - layers;
        b.hi[i] = shi + layers;
    }
    return b;
}

LaurentMatrix A_system_value(const ASolution& s, const DilationContext& ctx) {
    std::size_t n = ctx.gamma().size();
    LaurentMatrix R(n, n, ctx.dim());
    std::vector<LaurentMatrix> E;
    for (const auto& mu : s.mus) E.push_back(build_E_matrix(nabla(mu), ctx));
    for (auto& [key, A] : s.A) {
        auto [i, j] = key;
        LaurentMatrix term = E[i].adjoint() * A * E[j];
        R += term;
        if (i != j) R += term.adjoint();
    }
    return R;
}

ASolution solve_A_system(const Laurent& a, const DilationContext& ctx, int m, const Box& box, bool diagonal_only) {
    int d = ctx.dim();
    std::size_t n = ctx.gamma().size();
    ASolution sol;
    sol.m = m;
    sol.mus = multi_indices(d, m);
    sol.box = box;
    std::size_t K = sol.mus.size();

    std::vector<LaurentMatrix> E, Eadj;
    for (const auto& mu : sol.mus) {
        E.push_back(build_E_matrix(nabla(mu), ctx));
        Eadj.push_back(E.back().adjoint());
    }
    // prod[mu][nu][((j*n + p)*n + q)*n + k] = E_mu^*(j,p) E_nu(q,k)
    auto idx4 = [n](std::size_t j, std::size_t p, std::size_t q, std::size_t k) { return ((j * n + p) * n + q) * n + k; };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Laurent>> prod;
    auto get_prod = [&](std::size_t mu, std::size_t nu) -> const std::vector<Laurent>& {
        auto it = prod.find({mu, nu});
        if (it != prod.end()) return it->second;
        std::vector<Laurent> v(n * n * n * n, Laurent(d));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p) {
                if (Eadj[mu](j, p).is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t k = j; k < n; ++k) v[idx4(j, p, q, k)] = Eadj[mu](j, p) * E[nu](q, k);
            }
        return prod.emplace(std::make_pair(mu, nu), std::move(v)).first->second;
    };

    std::vector<Index> pts = box_points(box);
    Index zero = zero_index(d);
    std::vector<Unknown> unk;
    for (const auto& t : pts)
        for (std::size_t mu = 0; mu < K; ++mu)
            for (std::size_t nu = mu; nu < K; ++nu) {
                if (diagonal_only && nu != mu) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (mu == nu && q < p) continue;                 // lower triangle is the adjoint
                        if (mu == nu && q == p && t < zero) continue;    // symmetric diagonal entries
                        unk.push_back({mu, nu, p, q, t});
                    }
            }

    // Equation per (j <= k, exponent)
    std::map<std::tuple<std::size_t, std::size_t, Index>, std::vector<std::pair<std::size_t, Rational>>> eqs;
    for (std::size_t u = 0; u < unk.size(); ++u) {
        const Unknown& x = unk[u];
        auto contribute = [&](const std::vector<Laurent>& P, std::size_t p, std::size_t q, const Index& shift) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = j; k < n; ++k)
                    for (auto& [e, c] : P[idx4(j, p, q, k)].terms()) {
                        auto& row = eqs[{j, k, e + shift}];
                        row.emplace_back(u, c);
                    }
        };
        if (x.mu != x.nu) {
            contribute(get_prod(x.mu, x.nu), x.p, x.q, x.t);
            contribute(get_prod(x.nu, x.mu), x.q, x.p, -x.t);
        } else if (x.p != x.q || x.t != zero) {
            contribute(get_prod(x.mu, x.mu), x.p, x.q, x.t);
            contribute(get_prod(x.mu, x.mu), x.q, x.p, -x.t);
        } else {
            contribute(get_prod(x.mu, x.mu), x.p, x.q, x.t);
        }
    }
    LaurentMatrix N = build_Na(a, ctx);
    Rational inv_dm(1, static_cast<unsigned long>(ctx.dm()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k)
            for (auto& [e, c] : N(j, k).terms()) eqs[{j, k, e}];  // rows with only a right-hand side

    SparseSystem sys(unk.size());
    for (auto& [key, row] : eqs) {
        auto& [j, k, e] = key;
        sys.add_equation(row, N(j, k).coeff(e) * inv_dm);
    }
    auto x = sys.solve();
    if (!x) throw Error(Errc::Infeasible, "no solution on the support box");

    sol.unknowns = unk.size();
    for (std::size_t mu = 0; mu < K; ++mu)
        for (std::size_t nu = mu; nu < K; ++nu)
            if (!diagonal_only || mu == nu) sol.A.emplace(std::make_pair(mu, nu), LaurentMatrix(n, n, d));
    for (std::size_t u = 0; u < unk.size(); ++u) {
        const Rational& v = (*x)[u];
        if (v == 0) continue;
        const Unknown& w = unk[u];
        LaurentMatrix& A = sol.A.at({w.mu, w.nu});
        A(w.p, w.q).add_term(w.t, v);
        if (w.mu == w.nu && (w.p != w.q || w.t != zero)) A(w.q, w.p).add_term(-w.t, v);
    }
    LaurentMatrix target = N;
    target *= inv_dm;
    if (A_system_value(sol, ctx) != target) throw Error(Errc::InternalResidue, "solution does not satisfy the system");
    return sol;
}

ASolution solve_A_system_auto(const Laurent& a, const DilationContext& ctx, int m, int max_expand, bool diagonal_only) {
    for (int layers = 1; layers <= 1 + max_expand; ++layers) {
        try {
            return solve_A_system(a, ctx, m, default_support_box(a, ctx, m, layers), diagonal_only);
        } catch (const Error& e) {
            if (e.code() != Errc::Infeasible) throw;
        }
    }
    Box last = default_support_box(a, ctx, m, 1 + max_expand);
    throw Error(Errc::Infeasible, "no solution up to support box " + to_string(last.lo) + ".." + to_string(last.hi));
}

QtfBank assemble_bank(const Laurent& a, const DilationContext& ctx, const ASolution& s, SplitPolicy split) {
    int d = ctx.dim();
    std::size_t n = ctx.gamma().size();
    const auto& G = ctx.gamma();
    std::size_t K = s.mus.size();
    std::vector<LaurentMatrix> diag;
    for (std::size_t mu = 0; mu < K; ++mu) {
        auto it = s.A.find({mu, mu});
        diag.push_back(it == s.A.end() ? LaurentMatrix(n, n, d) : it->second);
    }
    QtfBank bank{ctx, a, {}, {}};
    auto push = [&](const Rational& sc, const Laurent& b, int sg) {
        if (sc == 0 || b.is_zero()) return;
        bank.highpass.push_back({ScaledFilter(sc, b), sg});
    };
    // Row l of a coefficient matrix B becomes sum_p B(l,p)(M^T xi) e^{-i gamma_p xi}.
    auto row_filter = [&](const LaurentMatrix& B, std::size_t l) {
        Laurent r(d);
        for (std::size_t p = 0; p < n; ++p) r += B(l, p).dilate(ctx).shift(G[p]);
        return r;
    };
    // Cross terms: A_munu = A1^* A2, filters nabla^mu * row(A1) + nabla^nu * row(A2).
    for (auto& [key, A] : s.A) {
        auto [mu, nu] = key;
        if (mu == nu || A.is_zero()) continue;
        LaurentMatrix A1 = split == SplitPolicy::IdentityFirst ? LaurentMatrix::identity(n, d) : A.adjoint();
        LaurentMatrix A2 = split == SplitPolicy::IdentityFirst ? A : LaurentMatrix::identity(n, d);
        Laurent nmu = nabla(s.mus[mu]), nnu = nabla(s.mus[nu]);
        for (std::size_t l = 0; l < n; ++l) push(1, nmu * row_filter(A1, l) + nnu * row_filter(A2, l), 1);
        diag[mu] -= A1.adjoint() * A1;
        diag[nu] -= A2.adjoint() * A2;
    }
    for (std::size_t mu = 0; mu < K; ++mu) {
        Laurent nmu = nabla(s.mus[mu]);
        HermitianFactorization f = factor_hermitian(diag[mu]);
        for (std::size_t j = 0; j < n; ++j)
            if (f.kappa[j] != 0) push(abs(f.kappa[j]), nmu.shift(G[j]), sign(f.kappa[j]));
        for (auto& t : f.terms) {
            Laurent u(d);
            for (std::size_t p = 0; p < n; ++p) u += t.entries[p].adjoint().dilate(ctx).shift(G[p]);
            push(t.scale_sq, nmu * u, t.sign);
        }
    }
    return bank;
}

QtfBank construct_vm_sos(const Laurent& a, const DilationContext& ctx, int m) {
    check_preconditions(a, ctx, m);
    int d = ctx.dim();
    auto parts = coset_split(a, ctx);
    Rational dm(static_cast<long>(ctx.dm()));
    Laurent A = delta(d);
    for (auto& p : parts) A -= (p * p.adjoint()) * dm;
    QtfBank bank{ctx, a, {}, {}};
    for (auto& t : signed_squares_vm(A, m)) {
        Laurent b = a * t.filter.base().dilate(ctx);
        if (!b.is_zero()) bank.highpass.push_back({ScaledFilter(t.filter.scale_sq(), b), t.sign});
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Laurent b = Laurent::monomial(ctx.gamma()[j]) - (a * parts[j].adjoint().dilate(ctx)) * dm;
        if (!b.is_zero()) bank.highpass.push_back({ScaledFilter(Rational(1) / dm, b), 1});
    }
    bank.meta.source = "vm-sos m=" + std::to_string(m);
    return bank;
}

QtfBank construct_vm_linear(const Laurent& a, const DilationContext& ctx, int m, int max_expand) {
    check_preconditions(a, ctx, m);
    QtfBank bank = assemble_bank(a, ctx, solve_A_system_auto(a, ctx, m, max_expand, false));
    bank.meta.source = "vm-linear m=" + std::to_string(m);
    return bank;
}

QtfBank construct_differencing(const Laurent& a, const DilationContext& ctx, int m, int max_expand) {
    check_preconditions(a, ctx, m);
    QtfBank bank = assemble_bank(a, ctx, solve_A_system_auto(a, ctx, m, max_expand, true));
    bank.meta.source = "differencing m=" + std::to_string(m);
    return bank;
}

} // namespace qtf
