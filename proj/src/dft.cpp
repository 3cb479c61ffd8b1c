#include "qtf/dft.hpp"
#include "qtf/errors.hpp"

namespace qtf {

Laurent transition_down(const Laurent& v, const Laurent& u, const DilationContext& ctx) {
    return coset_sequence(v * u.adjoint(), zero_index(ctx.dim()), ctx);
}

Laurent subdivide(const Laurent& w, const Laurent& u, const DilationContext& ctx) { return w.dilate(ctx) * u; }

TransformTree analyze(const Laurent& v, const QtfBank& bank, int levels) {
    if (levels < 1) throw Error(Errc::InvalidArgument, "levels must be at least 1");
    if (v.dim() != bank.ctx.dim()) throw Error(Errc::DimMismatch, "array and bank dimensions differ");
    TransformTree t;
    t.approx = v;
    for (int l = 0; l < levels; ++l) {
        std::vector<DetailBand> bands;
        for (auto& hp : bank.highpass)
            bands.push_back({hp.filter.scale_sq(), hp.sign, transition_down(t.approx, hp.filter.base(), bank.ctx)});
        t.details.push_back(std::move(bands));
        t.approx = transition_down(t.approx, bank.lowpass, bank.ctx);
    }
    return t;
}

Laurent synthesize(const TransformTree& tree, const QtfBank& bank) {
    if (tree.approx.dim() != bank.ctx.dim()) throw Error(Errc::DimMismatch, "tree and bank dimensions differ");
    Rational dm(static_cast<long>(bank.ctx.dm()));
    Laurent v = tree.approx;
    for (int l = tree.levels(); l-- > 0;) {
        const auto& bands = tree.details[static_cast<std::size_t>(l)];
        if (bands.size() != bank.highpass.size())
            throw Error(Errc::DimMismatch, "level " + std::to_string(l) + " has " + std::to_string(bands.size()) +
                                               " bands, bank has " + std::to_string(bank.highpass.size()));
        Laurent next = subdivide(v, bank.lowpass, bank.ctx);
        for (std::size_t i = 0; i < bands.size(); ++i) {
            const auto& hp = bank.highpass[i];
            next += subdivide(bands[i].coeffs, hp.filter.base(), bank.ctx) * (hp.filter.scale_sq() * hp.sign);
        }
        v = next * dm;
    }
    return v;
}

} // namespace qtf
