#include "qtf/sampler.hpp"
#include "qtf/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iomanip>
#include <ostream>

namespace qtf {

namespace {

using DoubleSeq = std::map<Index, double>;

// u * (v upsampled by M)
DoubleSeq convolve_dilated(const Laurent& u, const DoubleSeq& v, const DilationContext& ctx) {
    DoubleSeq out;
    for (auto& [k, x] : v) {
        Index mk = ctx.dilate(k);
        for (auto& [e, c] : u.terms()) out[mk + e] += to_double(c) * x;
    }
    return out;
}

} // namespace

std::vector<double> grid_point(const DilationContext& ctx, int depth, const Index& k) {
    int d = ctx.dim();
    Eigen::MatrixXd M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = static_cast<double>(ctx.matrix()(i, j));
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x[i] = static_cast<double>(k[static_cast<std::size_t>(i)]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    for (int n = 0; n < depth; ++n) x = lu.solve(x);
    return {x.data(), x.data() + d};
}

double cell_volume(const DilationContext& ctx, int depth) {
    return std::pow(static_cast<double>(ctx.dm()), -depth);
}

GridSamples sample_refinable(const Laurent& a, const DilationContext& ctx, int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "refinement depth must be at least 1");
    if (a.dim() != ctx.dim()) throw Error(Errc::DimMismatch, "filter and dilation dimensions differ");
    if (a.sum() != 1) throw Error(Errc::NotNormalized, "a^(0) = " + to_string(a.sum()) + ", expected 1");
    double dm = static_cast<double>(ctx.dm());
    DoubleSeq an;
    for (auto& [k, c] : a.terms()) an[k] = dm * to_double(c);
    for (int i = 1; i < n; ++i) {
        an = convolve_dilated(a, an, ctx);
        for (auto& [k, x] : an) x *= dm;
    }
    GridSamples s;
    s.depth = n;
    for (auto& [k, x] : an)
        if (x != 0) s.values.emplace(k, x);
    return s;
}

GridSamples sample_framelet(const ScaledFilter& b, const GridSamples& phi, const DilationContext& ctx, int depth) {
    if (phi.depth < 1) throw Error(Errc::DepthMismatch, "phi samples have depth " + std::to_string(phi.depth));
    if (depth >= 0 && depth != phi.depth + 1)
        throw Error(Errc::DepthMismatch, "psi depth " + std::to_string(depth) + " needs phi depth " +
                                             std::to_string(depth - 1) + ", got " + std::to_string(phi.depth));
    // psi(M^{-(n+1)} l) = dm sum_k b(k) phi_n(l - M^n k)
    Laurent bn = b.base();
    for (int i = 0; i < phi.depth; ++i) bn = bn.dilate(ctx);
    double scale = static_cast<double>(ctx.dm()) * std::sqrt(to_double(b.scale_sq()));
    GridSamples s;
    s.depth = phi.depth + 1;
    if (bn.is_zero()) return s;
    DoubleSeq out;
    for (auto& [k, x] : phi.values)
        for (auto& [e, c] : bn.terms()) out[k + e] += scale * to_double(c) * x;
    for (auto& [k, x] : out)
        if (x != 0) s.values.emplace(k, x);
    return s;
}

void write_csv(std::ostream& os, const GridSamples& s, const DilationContext& ctx) {
    for (int i = 0; i < ctx.dim(); ++i) os << 'x' << (i + 1) << ',';
    os << "value\n";
    os << std::setprecision(17);
    for (auto& [k, x] : s.values) {
        for (double c : grid_point(ctx, s.depth, k)) os << c << ',';
        os << x << '\n';
    }
}

} // namespace qtf
