#include "qtf/specfact.hpp"
#include "qtf/errors.hpp"

namespace qtf {

std::vector<EliminationStep> eliminate_terms(LaurentMatrix& A) {
    if (!A.is_hermitian()) throw Error(Errc::NotHermitian, "matrix is not Hermitian");
    std::size_t n = A.rows();
    int d = A.dim();
    Index zero = zero_index(d);
    std::vector<EliminationStep> steps;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            Laurent cell = A(j, k);
            for (auto& [g, c] : cell.terms()) {
                steps.push_back({j, k, g, c});
                A(j, k).add_term(g, -c);
                A(k, j).add_term(-g, -c);
                A(j, j).add_term(zero, c);
                A(k, k).add_term(zero, c);
            }
        }
    for (std::size_t j = 0; j < n; ++j) {
        Laurent cell = A(j, j);
        for (auto& [g, c] : cell.terms()) {
            if (!(g > zero)) continue;
            steps.push_back({j, j, g, c});
            A(j, j).add_term(g, -c);
            A(j, j).add_term(-g, -c);
            A(j, j).add_term(zero, 2 * c);
        }
    }
    return steps;
}

HermitianFactorization factor_hermitian(const LaurentMatrix& A) {
    if (A.rows() != A.cols()) throw Error(Errc::NotHermitian, "matrix is not square");
    LaurentMatrix W = A;
    auto steps = eliminate_terms(W);
    int d = A.dim();
    std::size_t n = A.rows();
    HermitianFactorization f;
    for (std::size_t j = 0; j < n; ++j) {
        if (W(j, j).size() > 1 || (W(j, j).size() == 1 && W(j, j).terms().begin()->first != zero_index(d)))
            throw Error(Errc::InternalResidue, "diagonal not constant after elimination");
        f.kappa.push_back(W(j, j).constant_term());
    }
    // The remainder must equal the column sums of A(0).
    for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += A(j, k).sum();
        if (s != f.kappa[k]) throw Error(Errc::InternalResidue, "remainder differs from column sums of A(0)");
    }
    for (auto& st : steps) {
        HermitianSquare t;
        t.scale_sq = abs(st.c);
        t.sign = -sign(st.c);
        t.entries.assign(n, Laurent(d));
        if (st.row != st.col) {
            t.entries[st.row] = delta(d);
            t.entries[st.col] = -Laurent::monomial(-st.gamma);
        } else {
            t.entries[st.row] = delta(d) - Laurent::monomial(st.gamma);
        }
        f.terms.push_back(std::move(t));
    }
    return f;
}

LaurentMatrix reconstruct(const HermitianFactorization& f, int dim) {
    std::size_t n = f.kappa.size();
    LaurentMatrix R(n, n, dim);
    for (std::size_t j = 0; j < n; ++j) R(j, j).add_term(zero_index(dim), f.kappa[j]);
    for (auto& t : f.terms) {
        Rational w = t.scale_sq * t.sign;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.entries[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!t.entries[k].is_zero()) R(j, k) += (t.entries[j] * t.entries[k].adjoint()) * w;
        }
    }
    return R;
}

ScalarSos scalar_quasi_sos(const Laurent& u) {
    LaurentMatrix A(1, 1, u.dim());
    A(0, 0) = u;
    HermitianFactorization f = factor_hermitian(A);
    ScalarSos s;
    s.kappa0 = f.kappa[0];
    for (auto& t : f.terms) s.terms.push_back({ScaledFilter(t.scale_sq, t.entries[0]), t.sign});
    return s;
}

} // namespace qtf
