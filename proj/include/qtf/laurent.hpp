#pragma once

#include "qtf/lattice.hpp"
#include "qtf/rational.hpp"

#include <climits>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace qtf {

// Sentinel returned by vmo() for the zero polynomial.
inline constexpr int kInfiniteVmo = INT_MAX;

// Finitely supported u : Z^d -> Q with symbol sum_k u(k) e^{-i k.xi}.
class Laurent {
public:
    using Terms = std::map<Index, Rational>;

    explicit Laurent(int dim = 1) : dim_(dim) {}
    static Laurent monomial(const Index& k, const Rational& c = 1);
    static Laurent constant(int dim, const Rational& c);
    // 1-D helper: coefficients for k = first, first+1, ...
    static Laurent dense_1d(std::int64_t first, const std::vector<Rational>& coeffs);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Index& k) const;
    void add_term(const Index& k, const Rational& c);
    Rational sum() const;            // symbol at xi = 0
    Rational constant_term() const;  // coefficient at k = 0

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rational& c);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
    friend Laurent operator*(const Rational& c, Laurent a) { return a *= c; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent adjoint() const;                    // u(-k)
    Laurent shift(const Index& s) const;        // u(k - s), symbol times e^{-i s.xi}
    Laurent dilate(const DilationContext& ctx) const;  // u(M^{-1}k) on M Z^d, symbol u(M^T xi)
    std::complex<double> evaluate(const std::vector<double>& xi) const;
    std::pair<Index, Index> bounding_box() const;  // requires non-empty

private:
    void check_dim(const Laurent& o) const;
    int dim_;
    Terms terms_;
};

Laurent delta(int dim);
// Backward difference nabla^nu delta, symbol prod_i (1 - e^{-i xi_i})^{nu_i}.
Laurent nabla(const Index& nu);

// sum_k u(k) k^mu
Rational moment(const Laurent& u, const Index& mu);
// Largest n with every moment of order < n zero; kInfiniteVmo for the zero polynomial.
int vmo(const Laurent& u);

// u^[gamma_j](k) = u(gamma_j + M k), one polynomial per coset representative.
std::vector<Laurent> coset_split(const Laurent& u, const DilationContext& ctx);
// u^[g] for an arbitrary integer offset g.
Laurent coset_sequence(const Laurent& u, const Index& g, const DilationContext& ctx);
// inverse of coset_split: sum_j e^{-i gamma_j.xi} parts_j(M^T xi)
Laurent reassemble(const std::vector<Laurent>& parts, const DilationContext& ctx);

// Matrix of Laurent polynomials; adjoint() is the conjugate transpose.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols, int dim);
    static LaurentMatrix identity(std::size_t n, int dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int dim() const { return dim_; }
    Laurent& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Laurent& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    LaurentMatrix adjoint() const;
    bool is_zero() const;
    bool is_hermitian() const;
    LaurentMatrix& operator+=(const LaurentMatrix& o);
    LaurentMatrix& operator-=(const LaurentMatrix& o);
    LaurentMatrix& operator*=(const Rational& c);
    friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
    friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    bool operator==(const LaurentMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    int dim_ = 1;
    std::vector<Laurent> e_;
};

} // namespace qtf
