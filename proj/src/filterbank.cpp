#include "qtf/filterbank.hpp"
#include "qtf/errors.hpp"

namespace qtf {

Rational content(const Laurent& u) {
    if (u.is_zero()) return 1;
    Integer g = 0, l = 1;
    for (auto& [k, c] : u.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

ScaledFilter::ScaledFilter(const Rational& scale_sq, const Laurent& base) : scale_sq_(scale_sq), base_(base) {
    if (scale_sq_ < 0) throw Error(Errc::InvalidArgument, "scale_sq must be non-negative");
    if (scale_sq_ == 0 || base_.is_zero()) {
        scale_sq_ = 1;
        base_ = Laurent(base.dim());
        return;
    }
    Rational c = content(base_);
    base_ *= Rational(1) / c;
    scale_sq_ *= c * c;
}

ScaledFilter comparison_form(const ScaledFilter& f, const DilationContext& ctx) {
    if (f.is_zero()) return f;
    const Index& lead = f.base().terms().begin()->first;
    CosetRef r = ctx.reduce(lead);
    Laurent b = f.base().shift(-ctx.dilate(r.alpha));
    if (b.terms().begin()->second < 0) b = -b;
    return ScaledFilter(f.scale_sq(), b);
}

std::vector<Laurent> coset_row(const Laurent& b, const DilationContext& ctx) { return coset_split(b, ctx); }

LaurentMatrix build_Na(const Laurent& a, const DilationContext& ctx) {
    auto v = coset_row(a, ctx);
    std::size_t n = v.size();
    LaurentMatrix N = LaurentMatrix::identity(n, ctx.dim());
    Rational dm(static_cast<long>(ctx.dm()));
    for (std::size_t j = 0; j < n; ++j) {
        Laurent vj = v[j].adjoint();
        for (std::size_t k = 0; k < n; ++k) N(j, k) -= (vj * v[k]) * dm;
    }
    return N;
}

LaurentMatrix gram_contribution(const ScaledFilter& f, int sign, const DilationContext& ctx) {
    auto g = coset_row(f.base(), ctx);
    std::size_t n = g.size();
    LaurentMatrix B(n, n, ctx.dim());
    Rational w = Rational(static_cast<long>(ctx.dm())) * f.scale_sq() * sign;
    for (std::size_t j = 0; j < n; ++j) {
        if (g[j].is_zero()) continue;
        Laurent gj = g[j].adjoint();
        for (std::size_t k = 0; k < n; ++k)
            if (!g[k].is_zero()) B(j, k) = (gj * g[k]) * w;
    }
    return B;
}

} // namespace qtf
