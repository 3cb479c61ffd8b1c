#include "qtf/analysis.hpp"
#include "qtf/errors.hpp"

#include <algorithm>

namespace qtf {

int sum_rule_order(const Laurent& a, const DilationContext& ctx) {
    if (a.dim() != ctx.dim()) throw Error(Errc::DimMismatch, "filter and dilation dimensions differ");
    if (a.is_zero()) return kInfiniteVmo;
    // Coset moments use absolute positions gamma + M k, so regroup the terms per coset.
    std::vector<Laurent> groups(ctx.gamma().size(), Laurent(a.dim()));
    for (auto& [k, c] : a.terms()) groups[ctx.reduce(k).j].add_term(k, c);
    // A nonzero trigonometric polynomial cannot vanish to order beyond its degree span.
    auto [lo, hi] = a.bounding_box();
    int cap = 1;
    for (int i = 0; i < a.dim(); ++i) cap += static_cast<int>(hi[i] - lo[i]);
    for (int n = 0; n <= cap; ++n)
        for (const auto& mu : multi_indices(a.dim(), n)) {
            Rational first = moment(groups[0], mu);
            for (std::size_t j = 1; j < groups.size(); ++j)
                if (moment(groups[j], mu) != first) return n;
        }
    return cap + 1;
}

bool basic_sum_rule(const Laurent& a, const DilationContext& ctx) {
    Rational target(1, static_cast<unsigned long>(ctx.dm()));
    for (const auto& part : coset_split(a, ctx))
        if (part.sum() != target) return false;
    return true;
}

Laurent ua(const Laurent& a) { return delta(a.dim()) - a * a.adjoint(); }

int vm_ceiling(const Laurent& a, const DilationContext& ctx) {
    int sr = sum_rule_order(a, ctx);
    int v = vmo(ua(a));
    int half = v == kInfiniteVmo ? kInfiniteVmo : v / 2;
    return std::min(sr, half);
}

bool tightness_condition(const Laurent& a, const DilationContext& ctx) {
    auto v = coset_split(a, ctx);
    for (std::size_t j = 0; j < v.size(); ++j) {
        Laurent vj = v[j].adjoint();
        for (std::size_t k = 0; k < v.size(); ++k) {
            Laurent p = vj * v[k];
            for (auto& [e, c] : p.terms())
                if (c < 0) return false;
        }
    }
    return true;
}

long predicted_count(const Laurent& a, const DilationContext& ctx) {
    auto v = coset_split(a, ctx);
    long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        Laurent vj = v[j].adjoint();
        for (std::size_t k = j + 1; k < v.size(); ++k) s += static_cast<long>((vj * v[k]).size());
        long n = static_cast<long>((vj * v[j]).size());
        if (n > 0) s += (n - 1) / 2;
    }
    return s;
}

FilterReport analyze(const Laurent& a, const DilationContext& ctx) {
    FilterReport r;
    r.sr = sum_rule_order(a, ctx);
    r.vmo_ua = vmo(ua(a));
    int half = r.vmo_ua == kInfiniteVmo ? kInfiniteVmo : r.vmo_ua / 2;
    r.vm_ceiling = std::min(r.sr, half);
    r.basic_sum_rule = basic_sum_rule(a, ctx);
    r.tightness_condition = tightness_condition(a, ctx);
    r.predicted_s = predicted_count(a, ctx);
    return r;
}

} // namespace qtf
