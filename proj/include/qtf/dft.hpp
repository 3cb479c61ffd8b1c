#pragma once

#include "qtf/filterbank.hpp"

#include <vector>

namespace qtf {

// Detail coefficients of one filter are computed with its base; the filter's scale_sq and sign
// are re-applied at synthesis.
struct DetailBand {
    Rational scale_sq;
    int sign = 1;
    Laurent coeffs;
};

struct TransformTree {
    Laurent approx;                              // coarsest approximation
    std::vector<std::vector<DetailBand>> details;  // details[0] is the finest level
    int levels() const { return static_cast<int>(details.size()); }
};

// c(n) = sum_k v(k) u(k - Mn)
Laurent transition_down(const Laurent& v, const Laurent& u, const DilationContext& ctx);
// (S_u w)(n) = sum_k w(k) u(n - Mk)
Laurent subdivide(const Laurent& w, const Laurent& u, const DilationContext& ctx);

// Throws InvalidArgument for levels < 1, DimMismatch.
TransformTree analyze(const Laurent& v, const QtfBank& bank, int levels);
// v = dm [S_a(approx) + sum_l sign_l scale_sq_l S_{b_l}(detail_l)], level by level.
Laurent synthesize(const TransformTree& tree, const QtfBank& bank);

} // namespace qtf
