#include "qtf/linsolve.hpp"
#include "qtf/errors.hpp"

#include <algorithm>

namespace qtf {

void SparseSystem::make_primitive(Row& r) {
    Integer g = r.rhs;
    for (auto& [j, c] : r.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& [j, c] : r.c) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.rhs.get_mpz_t(), r.rhs.get_mpz_t(), g.get_mpz_t());
}

void SparseSystem::add_equation(const std::vector<std::pair<std::size_t, Rational>>& coeffs, const Rational& rhs) {
    ++count_;
    if (inconsistent_) return;
    if (pivot_of_col_.empty()) pivot_of_col_.assign(n_, -1);

    // Clear denominators.
    Integer l = rhs.get_den();
    for (auto& [j, c] : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::pair<std::size_t, Rational>> sorted = coeffs;
    std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.first < b.first; });
    Row r;
    for (auto& [j, c] : sorted) {
        if (j >= n_) throw Error(Errc::InvalidArgument, "unknown index out of range");
        Rational v = c * l;
        if (v == 0) continue;
        if (!r.c.empty() && r.c.back().first == j)
            r.c.back().second += v.get_num();
        else
            r.c.emplace_back(j, v.get_num());
        if (r.c.back().second == 0) r.c.pop_back();
    }
    r.rhs = Rational(rhs * l).get_num();
    make_primitive(r);

    while (true) {
        auto it = std::find_if(r.c.begin(), r.c.end(), [&](auto& e) { return pivot_of_col_[e.first] >= 0; });
        if (it == r.c.end()) break;
        const Row& p = pivots_[static_cast<std::size_t>(pivot_of_col_[it->first])];
        std::size_t col = it->first;
        Integer pc = std::find_if(p.c.begin(), p.c.end(), [&](auto& e) { return e.first == col; })->second;
        Integer rc = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), pc.get_mpz_t(), rc.get_mpz_t());
        Integer fr = pc / g, fp = rc / g;
        // r <- fr * r - fp * p
        Row out;
        out.c.reserve(r.c.size() + p.c.size());
        std::size_t a = 0, b = 0;
        while (a < r.c.size() || b < p.c.size()) {
            if (b == p.c.size() || (a < r.c.size() && r.c[a].first < p.c[b].first)) {
                out.c.emplace_back(r.c[a].first, fr * r.c[a].second);
                ++a;
            } else if (a == r.c.size() || p.c[b].first < r.c[a].first) {
                out.c.emplace_back(p.c[b].first, -fp * p.c[b].second);
                ++b;
            } else {
                Integer v = fr * r.c[a].second - fp * p.c[b].second;
                if (v != 0) out.c.emplace_back(r.c[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        out.rhs = fr * r.rhs - fp * p.rhs;
        make_primitive(out);
        r = std::move(out);
    }
    if (r.c.empty()) {
        if (r.rhs != 0) inconsistent_ = true;
        return;
    }
    pivot_of_col_[r.c.front().first] = static_cast<long>(pivots_.size());
    pivots_.push_back(std::move(r));
}

std::optional<std::vector<Rational>> SparseSystem::solve() {
    if (inconsistent_) return std::nullopt;
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = pivots_.size(); i-- > 0;) {
        const Row& p = pivots_[i];
        std::size_t col = p.c.front().first;
        Rational s = p.rhs;
        for (std::size_t t = 1; t < p.c.size(); ++t) s -= Rational(p.c[t].second) * x[p.c[t].first];
        x[col] = s / Rational(p.c.front().second);
    }
    return x;
}

} // namespace qtf
