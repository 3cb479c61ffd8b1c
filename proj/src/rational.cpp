#include "qtf/rational.hpp"
#include "qtf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qtf {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotExpansive: return "NotExpansive";
    case Errc::Singular: return "Singular";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::SchemaError: return "SchemaError";
    case Errc::NonRational: return "NonRational";
    case Errc::NoBasicSumRule: return "NoBasicSumRule";
    case Errc::InternalResidue: return "InternalResidue";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::InsufficientVM: return "InsufficientVM";
    case Errc::IrrationalPhase: return "IrrationalPhase";
    case Errc::CeilingExceeded: return "CeilingExceeded";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

static bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_rational(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(Errc::NonRational, "not an exact rational literal: '" + std::string(s) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(Errc::NonRational, "zero denominator in '" + std::string(s) + "'");
    if (!s.empty() && s[0] == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

double to_double(const Rational& q) { return q.get_d(); }

Index operator+(const Index& a, const Index& b) {
    Index r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Index operator-(const Index& a, const Index& b) {
    Index r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Index operator-(const Index& a) {
    Index r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Index zero_index(int dim) { return Index(static_cast<std::size_t>(dim), 0); }

bool is_zero(const Index& k) {
    return std::all_of(k.begin(), k.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t total_degree(const Index& k) {
    std::int64_t s = 0;
    for (auto v : k) s += v;
    return s;
}

std::string to_string(const Index& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

static void multi_rec(int dim, int left, Index& cur, std::vector<Index>& out) {
    std::size_t pos = cur.size();
    if (static_cast<int>(pos) == dim - 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= left; ++v) {
        cur.push_back(v);
        multi_rec(dim, left - v, cur, out);
        cur.pop_back();
    }
}

std::vector<Index> multi_indices(int dim, int order) {
    std::vector<Index> out;
    if (dim <= 0 || order < 0) return out;
    Index cur;
    multi_rec(dim, order, cur, out);
    return out;
}

Index greedy_sub_index(const Index& k, int order) {
    Index nu(k.size(), 0);
    std::int64_t left = order;
    for (std::size_t i = 0; i < k.size(); ++i) {
        nu[i] = std::min(k[i], left);
        left -= nu[i];
    }
    return nu;
}

} // namespace qtf
