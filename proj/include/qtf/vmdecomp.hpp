#pragma once

#include "qtf/filterbank.hpp"

#include <map>
#include <vector>

namespace qtf {

// u = sum_{|nu| = m} nabla^nu delta * parts[nu]. Requires vmo(u) >= m, else InsufficientVM.
std::map<Index, Laurent> nabla_decompose(const Laurent& u, int m);

// Hermitian u with vmo(u) >= 2m written as sum sign * |filter|^2 where every filter has
// at least m vanishing moments. Throws NotHermitian, InsufficientVM.
std::vector<HighPass> signed_squares_vm(const Laurent& u, int m);

// sum sign * scale_sq * b * b^*
Laurent sum_of_squares(const std::vector<HighPass>& terms, int dim);

} // namespace qtf
