#pragma once

#include "qtf/filterbank.hpp"

#include <utility>
#include <vector>

namespace qtf {

// One eliminated term c e^{-i gamma.xi} of entry (row, col). row < col for off-diagonal
// steps; row == col for a diagonal pair {gamma, -gamma} with gamma > 0 lexicographically.
struct EliminationStep {
    std::size_t row, col;
    Index gamma;
    Rational c;
};

// Removes every off-diagonal term and every nonconstant diagonal term of a Hermitian
// matrix in a fixed order (cells row-major, terms by ascending gamma). A is left diagonal
// and constant. Throws NotHermitian.
std::vector<EliminationStep> eliminate_terms(LaurentMatrix& A);

// sign * scale_sq * u u^* with u a column of Laurent entries
struct HermitianSquare {
    Rational scale_sq;
    std::vector<Laurent> entries;
    int sign = 1;
};

struct HermitianFactorization {
    std::vector<Rational> kappa;  // A = diag(kappa) + sum sign * scale_sq * u u^*
    std::vector<HermitianSquare> terms;
};

HermitianFactorization factor_hermitian(const LaurentMatrix& A);
LaurentMatrix reconstruct(const HermitianFactorization& f, int dim);

// Scalar case: u = kappa0 + sum sign * |filter|^2 with kappa0 = u^(0).
struct ScalarSos {
    Rational kappa0;
    std::vector<HighPass> terms;
};
ScalarSos scalar_quasi_sos(const Laurent& u);

} // namespace qtf
