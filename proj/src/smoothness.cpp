#include "qtf/smoothness.hpp"
#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace qtf {

const char* method_name(SmoothnessMethod m) {
    return m == SmoothnessMethod::TransitionEigen ? "transition-eigen" : "power-ratio";
}

Laurent transition_apply(const Laurent& b, const Laurent& v, const DilationContext& ctx) {
    Laurent c = b * v;
    return coset_sequence(c, zero_index(ctx.dim()), ctx) * Rational(static_cast<long>(ctx.dm()));
}

namespace {

// Smallest set containing supp(w) that T_b maps into itself.
std::vector<Index> invariant_support(const Laurent& b, const Laurent& w, const DilationContext& ctx) {
    std::set<Index> K;
    for (auto& [k, c] : w.terms()) K.insert(k);
    std::vector<Index> frontier(K.begin(), K.end());
    while (!frontier.empty()) {
        std::vector<Index> next;
        for (auto& j : frontier)
            for (auto& [e, c] : b.terms()) {
                Index k;
                if (ctx.divide(e + j, k) && K.insert(k).second) next.push_back(k);
            }
        frontier = std::move(next);
    }
    return {K.begin(), K.end()};
}

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t to_mod(const Rational& q) {
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) throw Error(Errc::InternalResidue, "denominator vanishes modulo the rank prime");
    return mulmod(num, powmod(den, kPrime - 2));
}

double spectral_gap(const Eigen::MatrixXd& C, double& radius) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<double> mags;
    for (Eigen::Index i = 0; i < C.rows(); ++i) mags.push_back(std::abs(es.eigenvalues()[i]));
    std::sort(mags.rbegin(), mags.rend());
    radius = mags[0];
    return (mags.size() > 1 && mags[0] > 0) ? 1.0 - mags[1] / mags[0] : 1.0;
}

void arnoldi_hessenberg(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows, const Laurent& w,
                        const std::map<Index, std::size_t>& pos, int r, mp_bitcnt_t prec, Eigen::MatrixXd& H) {
    std::size_t nK = rows.size();
    std::vector<std::vector<std::pair<std::size_t, mpf_class>>> T(nK);
    for (std::size_t i = 0; i < nK; ++i)
        for (auto& [j, c] : rows[i]) T[i].emplace_back(j, mpf_class(c, prec));
    std::vector<std::vector<mpf_class>> Q;
    auto zero_vec = [&] { return std::vector<mpf_class>(nK, mpf_class(0, prec)); };
    auto dot = [&](const std::vector<mpf_class>& x, const std::vector<mpf_class>& y) {
        mpf_class s(0, prec);
        for (std::size_t i = 0; i < nK; ++i) s += x[i] * y[i];
        return s;
    };
    auto normalize = [&](std::vector<mpf_class>& x) {
        mpf_class n(sqrt(dot(x, x)), prec);
        for (auto& e : x) e /= n;
        return n;
    };
    std::vector<mpf_class> q = zero_vec();
    for (auto& [k, c] : w.terms()) q[pos.at(k)] = mpf_class(c, prec);
    normalize(q);
    Q.push_back(std::move(q));
    H.setZero();
    for (int i = 0; i < r; ++i) {
        std::vector<mpf_class> z = zero_vec();
        for (std::size_t k = 0; k < nK; ++k)
            for (auto& [j, c] : T[k]) z[k] += c * Q[static_cast<std::size_t>(i)][j];
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j <= i; ++j) {
                const auto& qj = Q[static_cast<std::size_t>(j)];
                mpf_class h = dot(qj, z);
                for (std::size_t t = 0; t < nK; ++t) z[t] -= h * qj[t];
                H(j, i) += h.get_d();
            }
        if (i + 1 < r) {
            H(i + 1, i) = normalize(z).get_d();
            Q.push_back(std::move(z));
        }
    }
}

} // namespace

TransitionResult transition_radius(const Laurent& b, const Laurent& w, const DilationContext& ctx, int exact_limit) {
    TransitionResult out;
    if (w.is_zero()) return out;
    std::vector<Index> K = invariant_support(b, w, ctx);
    std::map<Index, std::size_t> pos;
    for (std::size_t i = 0; i < K.size(); ++i) pos.emplace(K[i], i);
    std::size_t nK = K.size();
    Rational dm(static_cast<long>(ctx.dm()));

    // T on l(K), sparse rows: (T v)(k) = sum_e dm b(e) v(Mk - e)
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(nK);
    for (std::size_t i = 0; i < nK; ++i) {
        Index mk = ctx.dilate(K[i]);
        for (auto& [e, c] : b.terms()) {
            auto it = pos.find(mk - e);
            if (it != pos.end()) rows[i].emplace_back(it->second, dm * c);
        }
    }

    // Dimension of the Krylov span, exactly modulo a large prime.
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows_p(nK);
    for (std::size_t i = 0; i < nK; ++i)
        for (auto& [j, c] : rows[i]) rows_p[i].emplace_back(j, to_mod(c));
    std::vector<std::uint64_t> v(nK, 0);
    for (auto& [k, c] : w.terms()) v[pos.at(k)] = to_mod(c);
    std::vector<std::vector<std::uint64_t>> ech;
    std::vector<std::size_t> piv;
    while (true) {
        std::vector<std::uint64_t> r = v;
        for (std::size_t i = 0; i < ech.size(); ++i) {
            std::uint64_t f = r[piv[i]];
            if (!f) continue;
            for (std::size_t t = 0; t < nK; ++t)
                if (ech[i][t]) r[t] = (r[t] + kPrime - mulmod(f, ech[i][t])) % kPrime;
        }
        auto nz = std::find_if(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; });
        if (nz == r.end()) break;
        std::size_t p = static_cast<std::size_t>(nz - r.begin());
        std::uint64_t inv = powmod(r[p], kPrime - 2);
        for (auto& x : r) x = mulmod(x, inv);
        ech.push_back(std::move(r));
        piv.push_back(p);
        std::vector<std::uint64_t> tv(nK, 0);
        for (std::size_t i = 0; i < nK; ++i) {
            unsigned __int128 acc = 0;
            for (auto& [j, c] : rows_p[i]) acc += static_cast<unsigned __int128>(c) * v[j] % kPrime;
            tv[i] = static_cast<std::uint64_t>(acc % kPrime);
        }
        v = std::move(tv);
    }
    int r = static_cast<int>(ech.size());
    out.dim = r;
    Eigen::MatrixXd C(r, r);

    if (r <= exact_limit) {
        // Krylov basis in reduced echelon form: basis[i] is 1 at pivots[i] and 0 at the other pivots.
        std::vector<Index> pivots;
        std::vector<Laurent> basis;
        auto reduce = [&](Laurent x) {
            for (std::size_t i = 0; i < basis.size(); ++i) {
                Rational c = x.coeff(pivots[i]);
                if (c != 0) x -= basis[i] * c;
            }
            return x;
        };
        Laurent x = w;
        while (!x.is_zero()) {
            Index p = x.terms().begin()->first;
            x *= Rational(1) / x.coeff(p);
            for (auto& bi : basis) {
                Rational c = bi.coeff(p);
                if (c != 0) bi -= x * c;
            }
            pivots.push_back(p);
            basis.push_back(x);
            x = reduce(transition_apply(b, basis.back(), ctx));
        }
        if (static_cast<int>(basis.size()) != r) throw Error(Errc::InternalResidue, "modular and exact Krylov ranks differ");
        for (int i = 0; i < r; ++i) {
            Laurent t = transition_apply(b, basis[static_cast<std::size_t>(i)], ctx);
            for (int j = 0; j < r; ++j) C(j, i) = to_double(t.coeff(pivots[static_cast<std::size_t>(j)]));
        }
    } else {
        // Arnoldi in GMP floats, stopped at the exact dimension. Rounding feeds eigen-directions of
        // T outside the span that grow over r steps, so precision is doubled until the top two
        // eigenvalue moduli settle.
        out.exact = false;
        double prev_radius = -1, prev_gap = -1;
        for (mp_bitcnt_t prec = 256;; prec *= 2) {
            if (prec > 16384) throw Error(Errc::NoConvergence, "Arnoldi did not settle at 16384 bits");
            arnoldi_hessenberg(rows, w, pos, r, prec, C);
            double rad = 0;
            double g = spectral_gap(C, rad);
            if (std::abs(rad - prev_radius) < 1e-12 * std::max(1.0, rad) && std::abs(g - prev_gap) < 1e-9) break;
            prev_radius = rad;
            prev_gap = g;
        }
    }
    out.gap = spectral_gap(C, out.radius);
    return out;
}

namespace {

Rational sum_squares(const Laurent& u) {
    Rational s = 0;
    for (auto& [k, c] : u.terms()) s += c * c;
    return s;
}

double ratio_to_double(const Rational& num, const Rational& den) { return to_double(Rational(num / den)); }

} // namespace

PowerRatioResult power_ratio_rho(const Laurent& a, const DilationContext& ctx, int m, const SmoothnessOptions& opts) {
    auto mus = multi_indices(ctx.dim(), m);
    std::vector<Laurent> nab;
    for (auto& mu : mus) nab.push_back(nabla(mu));
    auto eta = [&](const Laurent& an) {
        Rational s = 0;
        for (auto& nb : nab) {
            Laurent c = an * nb;
            s += sum_squares(c);
        }
        return s;
    };
    double dm = static_cast<double>(ctx.dm());
    Laurent an = a;
    Rational prev = eta(an);
    std::vector<double> r;  // raw ratios
    std::vector<double> x;  // Aitken-accelerated ratios
    PowerRatioResult out;
    for (int n = 1; n <= opts.nmax; ++n) {
        if (an.size() > opts.max_terms) break;
        an = a * an.dilate(ctx);
        Rational cur = eta(an);
        if (prev == 0 || cur == 0) throw Error(Errc::NoConvergence, "eta_n vanished");
        r.push_back(dm * std::sqrt(ratio_to_double(cur, prev)));
        prev = cur;
        out.steps = n;
        std::size_t k = r.size();
        if (k >= 3) {
            double d1 = r[k - 1] - r[k - 2], d2 = r[k - 1] - 2 * r[k - 2] + r[k - 3];
            x.push_back(std::abs(d2) > 1e-300 ? r[k - 1] - d1 * d1 / d2 : r[k - 1]);
        }
        if (x.size() >= 2) {
            out.change = std::abs(x.back() - x[x.size() - 2]);
            if (out.change < opts.tol) break;
        }
    }
    if (x.empty()) {
        if (r.empty()) throw Error(Errc::NoConvergence, "no power-ratio step fitted in the term limit");
        out.rho = r.back();
        out.change = r.size() >= 2 ? std::abs(r.back() - r[r.size() - 2]) : INFINITY;
    } else {
        out.rho = x.back();
    }
    return out;
}

SmoothnessEstimate smoothness_l2(const Laurent& a, const DilationContext& ctx, const SmoothnessOptions& opts) {
    if (a.dim() != ctx.dim()) throw Error(Errc::DimMismatch, "filter and dilation dimensions differ");
    if (a.sum() != 1) throw Error(Errc::NotNormalized, "a^(0) = " + to_string(a.sum()) + ", expected 1");
    SmoothnessEstimate est;
    est.m_used = sum_rule_order(a, ctx);
    est.method = opts.method;
    int m = est.m_used;
    double logM = std::log(ctx.spectral_radius());
    double d = ctx.dim();

    bool run_ratio = opts.method == SmoothnessMethod::PowerRatio || opts.cross_check;
    std::optional<PowerRatioResult> pr;
    if (run_ratio) pr = power_ratio_rho(a, ctx, m, opts);

    if (opts.method == SmoothnessMethod::TransitionEigen) {
        Laurent b = a * a.adjoint();
        double lambda = 0, gap = 1;
        int dim = 0;
        for (auto& mu : multi_indices(ctx.dim(), m)) {
            Laurent nm = nabla(mu);
            TransitionResult t = transition_radius(b, nm * nm.adjoint(), ctx, opts.exact_limit);
            dim = std::max(dim, t.dim);
            est.exact_span = est.exact_span && t.exact;
            if (t.radius > lambda) {
                lambda = t.radius;
                gap = t.gap;
            }
        }
        est.rho_m = std::sqrt(static_cast<double>(ctx.dm()) * lambda);
        est.iterations = dim;
        est.stability_gap = gap;
        if (pr) est.cross_rho_m = pr->rho;
    } else {
        if (pr->change > opts.tol)
            throw Error(Errc::NoConvergence, "ratio estimates still moving by " + std::to_string(pr->change) +
                                                 " after " + std::to_string(pr->steps) + " steps (rho_m ~ " +
                                                 std::to_string(pr->rho) + ")");
        est.rho_m = pr->rho;
        est.iterations = pr->steps;
        est.stability_gap = pr->change;
    }
    est.sm2 = d / 2 - std::log(est.rho_m) / logM;
    return est;
}

} // namespace qtf
