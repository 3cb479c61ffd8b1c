#include "qtf/directional.hpp"
#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"
#include "qtf/specfact.hpp"

#include <map>

namespace qtf {

namespace {

// Lexicographically smallest alpha with p(alpha) != 0 and q(alpha + g) != 0.
Index witness(const Laurent& p, const Laurent& q, const Index& g) {
    for (auto& [alpha, c] : p.terms())
        if (q.terms().count(alpha + g)) return alpha;
    throw Error(Errc::InternalResidue, "no witness pair for exponent " + to_string(g));
}

} // namespace

QtfBank construct_directional(const Laurent& a, const DilationContext& ctx, DirectionalOptions opts) {
    if (!basic_sum_rule(a, ctx)) throw Error(Errc::NoBasicSumRule, "coset sums of the low-pass filter are not all 1/dm");
    auto parts = coset_split(a, ctx);
    LaurentMatrix N = build_Na(a, ctx);
    auto steps = eliminate_terms(N);
    for (std::size_t j = 0; j < N.rows(); ++j)
        if (!N(j, j).is_zero()) throw Error(Errc::InternalResidue, "non-zero constant left on the diagonal");

    Rational dm(static_cast<long>(ctx.dm()));
    QtfBank bank{ctx, a, {}, {}};
    const auto& G = ctx.gamma();
    for (auto& st : steps) {
        const Laurent& p = parts[st.row];
        const Laurent& q = parts[st.col];
        Index alpha = witness(p, q, st.gamma);
        Index beta = alpha + st.gamma;
        Laurent base = Laurent::monomial(G[st.row] + ctx.dilate(alpha)) -
                       Laurent::monomial(G[st.col] + ctx.dilate(beta));
        bank.highpass.push_back({ScaledFilter(abs(st.c) / dm, base), -sign(st.c)});
    }
    if (opts.merge) bank.highpass = merge_proportional(bank.highpass);
    bank.meta.source = "directional";
    return bank;
}

std::vector<HighPass> merge_proportional(const std::vector<HighPass>& hp) {
    // Key on base normalized to a positive leading coefficient; signed weight eps * s adds up.
    std::vector<std::pair<Laurent, Rational>> acc;
    std::map<Laurent::Terms, std::size_t> pos;
    for (auto& h : hp) {
        if (h.filter.is_zero()) continue;
        Laurent b = h.filter.base();
        if (b.terms().begin()->second < 0) b = -b;
        Rational w = h.filter.scale_sq() * h.sign;
        auto [it, fresh] = pos.try_emplace(b.terms(), acc.size());
        if (fresh)
            acc.push_back({b, w});
        else
            acc[it->second].second += w;
    }
    std::vector<HighPass> out;
    for (auto& [b, w] : acc)
        if (w != 0) out.push_back({ScaledFilter(abs(w), b), sign(w)});
    return out;
}

} // namespace qtf
