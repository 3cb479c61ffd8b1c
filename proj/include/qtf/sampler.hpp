#pragma once

#include "qtf/filterbank.hpp"

#include <iosfwd>
#include <map>

namespace qtf {

// Values attached to the lattice points M^{-depth} k.
struct GridSamples {
    int depth = 0;
    std::map<Index, double> values;
};

// Cartesian coordinates of M^{-depth} k.
std::vector<double> grid_point(const DilationContext& ctx, int depth, const Index& k);
double cell_volume(const DilationContext& ctx, int depth);

// phi(M^{-n} k) ~ dm^n a_n(k), with a_{n+1} = a * (a_n upsampled by M). Throws NotNormalized,
// InvalidArgument for n < 1.
GridSamples sample_refinable(const Laurent& a, const DilationContext& ctx, int n);

// psi(x) = dm sum_k b(k) phi(Mx - k) on the lattice of depth phi.depth + 1, scaled by sqrt(scale_sq).
// Throws DepthMismatch when depth is given and differs from phi.depth + 1.
GridSamples sample_framelet(const ScaledFilter& b, const GridSamples& phi, const DilationContext& ctx, int depth = -1);

// CSV with columns x1..xd,value.
void write_csv(std::ostream& os, const GridSamples& s, const DilationContext& ctx);

} // namespace qtf
