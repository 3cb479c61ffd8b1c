#pragma once

#include "qtf/filterbank.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qtf {

// E_{b,beta}(j,k) = b^[gamma_k - gamma_j] * e^{i gamma_k . 2 pi beta}; the phase must be +-1
// (IrrationalPhase otherwise).
LaurentMatrix build_E_matrix(const Laurent& b, const std::vector<Rational>& beta, const DilationContext& ctx);
LaurentMatrix build_E_matrix(const Laurent& b, const DilationContext& ctx);  // beta = 0

struct Box {
    Index lo, hi;  // inclusive
};

// Unknown Laurent matrices A_{mu,nu} for |mu| = |nu| = m, mu <= nu in the order of mus.
struct ASolution {
    int m = 0;
    std::vector<Index> mus;
    std::map<std::pair<std::size_t, std::size_t>, LaurentMatrix> A;
    Box box;
    std::size_t unknowns = 0;
};

// Exponent box of dm^{-1} N_a shrunk by the spread of the E_mu boxes, plus `layers` outward.
Box default_support_box(const Laurent& a, const DilationContext& ctx, int m, int layers);

// Solves dm^{-1} N_a = sum E_mu^* A_mumu E_mu + sum_{mu<nu} (E_mu^* A_munu E_nu + adjoint) with
// unknown coefficients on `box`; diagonal_only drops the cross terms. Throws Infeasible.
ASolution solve_A_system(const Laurent& a, const DilationContext& ctx, int m, const Box& box, bool diagonal_only = false);

// Tries default_support_box with 1, 2, ... 1 + max_expand layers.
ASolution solve_A_system_auto(const Laurent& a, const DilationContext& ctx, int m, int max_expand = 4,
                              bool diagonal_only = false);

// Right-hand side of the system evaluated at a solution, for checking.
LaurentMatrix A_system_value(const ASolution& s, const DilationContext& ctx);

// How a cross block A_munu is written as A1^* A2 before emitting its dm filters.
enum class SplitPolicy {
    IdentityFirst,   // A1 = I, A2 = A_munu
    IdentitySecond,  // A1 = A_munu^*, A2 = I
};

// Turns a solution into high-pass filters: cross terms become dm filters each, then every
// updated A_mumu is factored.
QtfBank assemble_bank(const Laurent& a, const DilationContext& ctx, const ASolution& s,
                      SplitPolicy split = SplitPolicy::IdentityFirst);

// Constructions with min vmo >= m. Throw NoBasicSumRule, CeilingExceeded, Infeasible.
QtfBank construct_vm_sos(const Laurent& a, const DilationContext& ctx, int m);
QtfBank construct_vm_linear(const Laurent& a, const DilationContext& ctx, int m, int max_expand = 4);
QtfBank construct_differencing(const Laurent& a, const DilationContext& ctx, int m, int max_expand = 4);

} // namespace qtf
