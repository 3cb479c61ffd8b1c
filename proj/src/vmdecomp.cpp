#include "qtf/vmdecomp.hpp"
#include "qtf/errors.hpp"
#include "qtf/specfact.hpp"

#include <algorithm>

namespace qtf {

std::map<Index, Laurent> nabla_decompose(const Laurent& u, int m) {
    int d = u.dim();
    if (m < 0) throw Error(Errc::InvalidArgument, "order must be non-negative");
    if (vmo(u) < m) throw Error(Errc::InsufficientVM, "polynomial has fewer than " + std::to_string(m) + " vanishing moments");
    std::map<Index, Laurent> parts;
    if (u.is_zero()) return parts;

    Index k0 = u.bounding_box().first;
    Laurent v = u.shift(-k0);
    Rational sgn_m = (m % 2 == 0) ? 1 : -1;
    // Peel off the highest total degree first; nabla^nu delta(. - j) only touches lower degrees elsewhere.
    while (true) {
        const Index* top = nullptr;
        std::int64_t r = -1;
        for (auto& [k, c] : v.terms()) {
            std::int64_t deg = total_degree(k);
            if (deg > r) {
                r = deg;
                top = &k;
            }
        }
        if (!top || r < m) break;
        Index k = *top;
        Rational c = v.coeff(k);
        Index nu = greedy_sub_index(k, m);
        Index j = k - nu;
        v -= nabla(nu).shift(j) * (c * sgn_m);
        auto [it, fresh] = parts.try_emplace(nu, Laurent(d));
        it->second.add_term(j, c * sgn_m);
    }
    if (!v.is_zero()) throw Error(Errc::InsufficientVM, "non-zero remainder after peeling");
    std::map<Index, Laurent> out;
    for (auto& [nu, w] : parts)
        if (!w.is_zero()) out.emplace(nu, w.shift(k0));
    return out;
}

std::vector<HighPass> signed_squares_vm(const Laurent& u, int m) {
    if (u != u.adjoint()) throw Error(Errc::NotHermitian, "polynomial is not Hermitian");
    if (vmo(u) < 2 * m) throw Error(Errc::InsufficientVM, "need " + std::to_string(2 * m) + " vanishing moments");
    std::vector<HighPass> out;
    auto push = [&](const Rational& s, const Laurent& b, int sg) {
        if (s == 0 || b.is_zero()) return;
        out.push_back({ScaledFilter(s, b), sg});
    };
    for (auto& [nu, w] : nabla_decompose(u, 2 * m)) {
        Laurent half = w * Rational(1, 2);
        bool even = std::all_of(nu.begin(), nu.end(), [](std::int64_t v) { return v % 2 == 0; });
        if (!even) {
            Index alpha = greedy_sub_index(nu, m);
            Index beta = nu - alpha;
            Laurent na = nabla(alpha);
            Laurent nbu = nabla(beta) * half;
            push(1, na.adjoint() + nbu, 1);
            push(1, na, -1);
            push(1, nbu, -1);
        } else {
            Index mu(nu.size());
            for (std::size_t i = 0; i < nu.size(); ++i) mu[i] = nu[i] / 2;
            Laurent shifted = half.shift(mu);
            Laurent eta = shifted + shifted.adjoint();
            if (total_degree(mu) % 2 == 1) eta = -eta;
            Laurent nmu = nabla(mu);
            ScalarSos s = scalar_quasi_sos(eta);
            if (s.kappa0 != 0) push(abs(s.kappa0), nmu, sign(s.kappa0));
            for (auto& t : s.terms) push(t.filter.scale_sq(), nmu * t.filter.base(), t.sign);
        }
    }
    return out;
}

Laurent sum_of_squares(const std::vector<HighPass>& terms, int dim) {
    Laurent s(dim);
    for (auto& t : terms) s += (t.filter.base() * t.filter.base().adjoint()) * (t.filter.scale_sq() * t.sign);
    return s;
}

} // namespace qtf
