#include "qtf/laurent.hpp"
#include "qtf/errors.hpp"

#include <algorithm>

namespace qtf {

Laurent Laurent::monomial(const Index& k, const Rational& c) {
    Laurent u(static_cast<int>(k.size()));
    u.add_term(k, c);
    return u;
}

Laurent Laurent::constant(int dim, const Rational& c) { return monomial(zero_index(dim), c); }

Laurent Laurent::dense_1d(std::int64_t first, const std::vector<Rational>& coeffs) {
    Laurent u(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) u.add_term({first + std::int64_t(i)}, coeffs[i]);
    return u;
}

void Laurent::check_dim(const Laurent& o) const {
    if (o.dim_ != dim_) throw Error(Errc::DimMismatch, "Laurent polynomials of different dimension");
}

Rational Laurent::coeff(const Index& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(const Index& k, const Rational& c) {
    if (static_cast<int>(k.size()) != dim_) throw Error(Errc::DimMismatch, "exponent has wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Laurent::sum() const {
    Rational s = 0;
    for (auto& [k, c] : terms_) s += c;
    return s;
}

Rational Laurent::constant_term() const { return coeff(zero_index(dim_)); }

Laurent& Laurent::operator+=(const Laurent& o) {
    check_dim(o);
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_dim(o);
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_dim(b);
    Laurent r(a.dim_);
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

Laurent Laurent::adjoint() const {
    Laurent r(dim_);
    for (auto& [k, c] : terms_) r.terms_.emplace(-k, c);
    return r;
}

Laurent Laurent::shift(const Index& s) const {
    Laurent r(dim_);
    for (auto& [k, c] : terms_) r.terms_.emplace(k + s, c);
    return r;
}

Laurent Laurent::dilate(const DilationContext& ctx) const {
    if (ctx.dim() != dim_) throw Error(Errc::DimMismatch, "dilation dimension differs from polynomial");
    Laurent r(dim_);
    for (auto& [k, c] : terms_) r.terms_.emplace(ctx.dilate(k), c);
    return r;
}

std::complex<double> Laurent::evaluate(const std::vector<double>& xi) const {
    std::complex<double> s = 0;
    for (auto& [k, c] : terms_) {
        double ph = 0;
        for (int i = 0; i < dim_; ++i) ph += double(k[i]) * xi[i];
        s += c.get_d() * std::polar(1.0, -ph);
    }
    return s;
}

std::pair<Index, Index> Laurent::bounding_box() const {
    if (terms_.empty()) throw Error(Errc::InvalidArgument, "bounding box of the zero polynomial");
    Index lo = terms_.begin()->first, hi = lo;
    for (auto& [k, c] : terms_)
        for (int i = 0; i < dim_; ++i) {
            lo[i] = std::min(lo[i], k[i]);
            hi[i] = std::max(hi[i], k[i]);
        }
    return {lo, hi};
}

Laurent delta(int dim) { return Laurent::constant(dim, 1); }

Laurent nabla(const Index& nu) {
    int d = static_cast<int>(nu.size());
    Laurent r = delta(d);
    for (int i = 0; i < d; ++i) {
        Index e = zero_index(d);
        e[i] = 1;
        Laurent f = delta(d) - Laurent::monomial(e);
        for (std::int64_t p = 0; p < nu[i]; ++p) r = r * f;
    }
    return r;
}

Rational moment(const Laurent& u, const Index& mu) {
    Rational s = 0;
    Integer pw;
    for (auto& [k, c] : u.terms()) {
        Integer prod = 1;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            Integer base(static_cast<long>(k[i]));
            mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(mu[i]));
            prod *= pw;
        }
        s += c * Rational(prod);
    }
    return s;
}

int vmo(const Laurent& u) {
    if (u.is_zero()) return kInfiniteVmo;
    for (int n = 0;; ++n)
        for (const auto& mu : multi_indices(u.dim(), n))
            if (moment(u, mu) != 0) return n;
}

std::vector<Laurent> coset_split(const Laurent& u, const DilationContext& ctx) {
    if (ctx.dim() != u.dim()) throw Error(Errc::DimMismatch, "dilation dimension differs from polynomial");
    std::vector<Laurent> parts(ctx.gamma().size(), Laurent(u.dim()));
    for (auto& [k, c] : u.terms()) {
        CosetRef r = ctx.reduce(k);
        parts[r.j].add_term(r.alpha, c);
    }
    return parts;
}

Laurent coset_sequence(const Laurent& u, const Index& g, const DilationContext& ctx) {
    Laurent r(u.dim());
    Index alpha;
    for (auto& [k, c] : u.terms())
        if (ctx.divide(k - g, alpha)) r.add_term(alpha, c);
    return r;
}

Laurent reassemble(const std::vector<Laurent>& parts, const DilationContext& ctx) {
    Laurent r(ctx.dim());
    for (std::size_t j = 0; j < parts.size(); ++j) r += parts[j].dilate(ctx).shift(ctx.gamma()[j]);
    return r;
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, int dim)
    : rows_(rows), cols_(cols), dim_(dim), e_(rows * cols, Laurent(dim)) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n, int dim) {
    LaurentMatrix m(n, n, dim);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = delta(dim);
    return m;
}

LaurentMatrix LaurentMatrix::adjoint() const {
    LaurentMatrix r(cols_, rows_, dim_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).adjoint();
    return r;
}

bool LaurentMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Laurent& u) { return u.is_zero(); });
}

bool LaurentMatrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i).adjoint()) return false;
    return true;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(Errc::DimMismatch, "matrix shapes differ");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(Errc::DimMismatch, "matrix shapes differ");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

LaurentMatrix& LaurentMatrix::operator*=(const Rational& c) {
    for (auto& u : e_) u *= c;
    return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimMismatch, "matrix shapes do not chain");
    LaurentMatrix r(a.rows_, b.cols_, a.dim_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                r(i, j) += a(i, k) * b(k, j);
            }
    return r;
}

} // namespace qtf
