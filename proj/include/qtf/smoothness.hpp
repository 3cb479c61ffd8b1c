#pragma once

#include "qtf/laurent.hpp"
#include "qtf/lattice.hpp"

#include <optional>
#include <string>

namespace qtf {

enum class SmoothnessMethod { TransitionEigen, PowerRatio };

struct SmoothnessOptions {
    SmoothnessMethod method = SmoothnessMethod::TransitionEigen;
    bool cross_check = false;       // also run the power-ratio oracle (1-D only is practical)
    double tol = 1e-6;              // power-ratio stabilisation / agreement tolerance
    int nmax = 40;                  // power-ratio iteration limit
    std::size_t max_terms = 1u << 16;  // power-ratio stops when a_n grows past this
    // Krylov spans up to this dimension are reduced exactly; larger ones use multiprecision Arnoldi
    // with the dimension fixed by an exact modular rank.
    int exact_limit = 40;
};

struct SmoothnessEstimate {
    int m_used = 0;
    double rho_m = 0;
    double sm2 = 0;
    SmoothnessMethod method = SmoothnessMethod::TransitionEigen;
    int iterations = 0;      // Krylov dimension, or power-ratio steps
    // Eigen route: 1 - |lambda_2| / |lambda_1| on the invariant span.
    // Ratio route: |difference| of the last two extrapolated estimates.
    double stability_gap = 0;
    bool exact_span = true;             // false when Arnoldi was used for some mu
    std::optional<double> cross_rho_m;  // power-ratio value when cross_check ran
};

const char* method_name(SmoothnessMethod m);

// (T v)(k) = dm * sum_j b(Mk - j) v(j)
Laurent transition_apply(const Laurent& b, const Laurent& v, const DilationContext& ctx);

struct TransitionResult {
    double radius = 0;  // spectral radius of T_b on the Krylov span of w
    int dim = 0;
    double gap = 0;     // 1 - |lambda_2| / |lambda_1|
    bool exact = true;
};
TransitionResult transition_radius(const Laurent& b, const Laurent& w, const DilationContext& ctx, int exact_limit = 40);

// rho_m from eta_n = ||a_n * nabla^mu delta||^2, exact a_n; returns (rho, steps, last change).
struct PowerRatioResult {
    double rho = 0;
    int steps = 0;
    double change = 0;
};
PowerRatioResult power_ratio_rho(const Laurent& a, const DilationContext& ctx, int m, const SmoothnessOptions& opts);

// sm2 = d/2 - log_{rho(M)} rho_m with m = sr(a). Throws NotNormalized, NoConvergence.
SmoothnessEstimate smoothness_l2(const Laurent& a, const DilationContext& ctx, const SmoothnessOptions& opts = {});

} // namespace qtf
