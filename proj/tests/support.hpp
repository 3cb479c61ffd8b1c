#pragma once

#include "qtf/filterbank.hpp"
#include "qtf/json_io.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace qtf::testing {

inline Laurent seq(std::int64_t first, std::initializer_list<Rational> c) {
    return Laurent::dense_1d(first, std::vector<Rational>(c));
}

inline Rational q(long p, long r = 1) {
    Rational x(p, r);
    x.canonicalize();
    return x;
}

inline DilationContext ctx1(std::int64_t m) { return make_context(IntMatrix{{m}}); }

inline const DilationContext& dyadic() {
    static const DilationContext c = ctx1(2);
    return c;
}

inline const DilationContext& quincunx() {
    static const DilationContext c = make_context(IntMatrix{{1, 1}, {1, -1}});
    return c;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(g_);
    }
    Rational rational(long range = 9, long max_den = 6) {
        return q(static_cast<long>(integer(-range, range)), static_cast<long>(integer(1, max_den)));
    }
    Index point(int d, std::int64_t r) {
        Index k(static_cast<std::size_t>(d));
        for (auto& x : k) x = integer(-r, r);
        return k;
    }
    Laurent laurent(int d, int terms, std::int64_t r = 3) {
        Laurent u(d);
        for (int i = 0; i < terms; ++i) u.add_term(point(d, r), rational());
        return u;
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

// Sorted keys of the comparison forms, so banks compare as multisets up to sign and M-shifts.
inline std::vector<std::string> filter_multiset(const QtfBank& b) {
    std::vector<std::string> out;
    for (auto& h : b.highpass) {
        ScaledFilter f = comparison_form(h.filter, b.ctx);
        out.push_back(to_string(f.scale_sq()) + "|" + to_json(f.base()).dump() + "|" + std::to_string(h.sign));
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace qtf::testing
