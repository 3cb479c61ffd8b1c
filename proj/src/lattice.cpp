#include "qtf/lattice.hpp"
#include "qtf/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qtf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    n_ = static_cast<int>(rows.size());
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != n_) throw Error(Errc::DimMismatch, "matrix must be square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(Errc::DimMismatch, "matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(int(i), int(j)) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::scalar(int n, std::int64_t s) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Index IntMatrix::apply(const Index& k) const {
    Index r(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * k[j];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

namespace {

// Exact determinant and adjugate by rational elimination on the augmented matrix.
void det_adj(const IntMatrix& m, std::int64_t& det, IntMatrix& adj) {
    int n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m(i, j)));
        a[i][n + i] = 1;
    }
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) {
            det = 0;
            return;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        Rational piv = a[c][c];
        d *= piv;
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    det = d.get_num().get_si();
    adj = IntMatrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = a[i][n + j] * d;
            adj(i, j) = v.get_num().get_si();
        }
}

std::vector<Index> scan_box(const IntMatrix& m, const IntMatrix& adj, std::int64_t det) {
    int n = m.size();
    Index lo(n, 0), hi(n, 0);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Index v(n);
        for (int j = 0; j < n; ++j) v[j] = (mask >> j) & 1;
        Index w = m.apply(v);
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], w[i]);
            hi[i] = std::max(hi[i], w[i]);
        }
    }
    std::vector<Index> out;
    Index k = lo;
    while (true) {
        Index q = adj.apply(k);
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) inside = floor_div(q[i], det) == 0;
        if (inside) out.push_back(k);
        int i = 0;
        while (i < n && k[i] == hi[i]) {
            k[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++k[i];
    }
    std::sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
        bool za = is_zero(a), zb = is_zero(b);
        if (za != zb) return za;
        return a < b;
    });
    return out;
}

} // namespace

std::vector<Index> coset_representatives(const IntMatrix& m) {
    std::int64_t det;
    IntMatrix adj;
    det_adj(m, det, adj);
    if (det == 0) throw Error(Errc::Singular, "dilation matrix is singular");
    return scan_box(m, adj, det);
}

DilationContext make_context(const IntMatrix& m) {
    if (m.size() < 1) throw Error(Errc::DimMismatch, "dilation matrix must be at least 1x1");
    DilationContext ctx;
    ctx.matrix_ = m;
    det_adj(m, ctx.det_, ctx.adj_);
    if (ctx.det_ == 0) throw Error(Errc::Singular, "dilation matrix is singular");
    ctx.dm_ = ctx.det_ < 0 ? -ctx.det_ : ctx.det_;

    int n = m.size();
    Eigen::MatrixXd md(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) md(i, j) = static_cast<double>(m(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> es(md, false);
    double lo = INFINITY, hi = 0;
    for (int i = 0; i < n; ++i) {
        double r = std::abs(es.eigenvalues()[i]);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (lo <= 1.0 + 1e-9) throw Error(Errc::NotExpansive, "dilation matrix has an eigenvalue of modulus <= 1");
    ctx.rho_ = hi;

    ctx.gamma_ = scan_box(m, ctx.adj_, ctx.det_);
    for (std::size_t i = 0; i < ctx.gamma_.size(); ++i) ctx.gamma_pos_[ctx.gamma_[i]] = i;

    // Omega = (M^T)^{-1} Gamma_{M^T}
    IntMatrix mt = m.transpose();
    IntMatrix adjt = ctx.adj_.transpose();
    std::vector<Index> gt = scan_box(mt, adjt, ctx.det_);
    for (const auto& k : gt) {
        Index q = adjt.apply(k);
        std::vector<Rational> w(n);
        for (int i = 0; i < n; ++i) {
            w[i] = Rational(static_cast<long>(q[i]), static_cast<long>(ctx.det_));
            w[i].canonicalize();
        }
        ctx.omega_.push_back(std::move(w));
    }
    std::sort(ctx.omega_.begin(), ctx.omega_.end());
    return ctx;
}

CosetRef DilationContext::reduce(const Index& k) const {
    Index q = adj_.apply(k);
    Index alpha(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) alpha[i] = floor_div(q[i], det_);
    Index g = k - matrix_.apply(alpha);
    return {gamma_index(g), std::move(alpha)};
}

std::size_t DilationContext::gamma_index(const Index& g) const {
    auto it = gamma_pos_.find(g);
    if (it == gamma_pos_.end()) throw Error(Errc::InvalidArgument, "not a coset representative: " + to_string(g));
    return it->second;
}

bool DilationContext::divide(const Index& k, Index& alpha) const {
    Index q = adj_.apply(k);
    alpha.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] % det_ != 0) return false;
        alpha[i] = q[i] / det_;
    }
    return true;
}

std::vector<Rational> DilationContext::inverse_apply(const Index& k) const {
    Index q = adj_.apply(k);
    std::vector<Rational> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        r[i] = Rational(static_cast<long>(q[i]), static_cast<long>(det_));
        r[i].canonicalize();
    }
    return r;
}

} // namespace qtf
