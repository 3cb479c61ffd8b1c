#pragma once

#include "qtf/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qtf {

// Square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static IntMatrix scalar(int n, std::int64_t s);

    int size() const { return n_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Index apply(const Index& k) const;
    IntMatrix transpose() const;
    std::vector<std::vector<std::int64_t>> rows() const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

struct CosetRef {
    std::size_t j;  // position in gamma()
    Index alpha;    // k = gamma_j + M alpha
};

// Everything derived once from a dilation matrix M.
class DilationContext {
public:
    int dim() const { return matrix_.size(); }
    const IntMatrix& matrix() const { return matrix_; }
    std::int64_t dm() const { return dm_; }
    const std::vector<Index>& gamma() const { return gamma_; }
    const std::vector<std::vector<Rational>>& omega() const { return omega_; }
    double spectral_radius() const { return rho_; }

    CosetRef reduce(const Index& k) const;
    std::size_t gamma_index(const Index& g) const;  // throws if g is not a representative
    Index dilate(const Index& k) const { return matrix_.apply(k); }
    // Returns alpha with k = M alpha, or false when k is not in M Z^d.
    bool divide(const Index& k, Index& alpha) const;
    // M^{-1} k as exact rationals
    std::vector<Rational> inverse_apply(const Index& k) const;

    bool operator==(const DilationContext& o) const { return matrix_ == o.matrix_; }

private:
    friend DilationContext make_context(const IntMatrix&);
    IntMatrix matrix_;
    IntMatrix adj_;          // adjugate, so M^{-1} = adj_ / det_
    std::int64_t det_ = 0;   // signed
    std::int64_t dm_ = 0;
    double rho_ = 0;
    std::vector<Index> gamma_;
    std::vector<std::vector<Rational>> omega_;
    std::map<Index, std::size_t> gamma_pos_;
};

// Throws Singular (det 0), NotExpansive (some |eigenvalue| <= 1), DimMismatch (d < 1).
DilationContext make_context(const IntMatrix& m);

// Representatives of Z^d / M Z^d inside M[0,1)^d, zero first then lexicographic.
std::vector<Index> coset_representatives(const IntMatrix& m);

} // namespace qtf
