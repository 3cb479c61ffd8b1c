#include "qtf/verify.hpp"
#include "qtf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace qtf {

VerificationReport verify_bank(const QtfBank& bank) {
    VerificationReport r;
    r.residual = build_Na(bank.lowpass, bank.ctx);
    for (auto& h : bank.highpass) {
        if (h.filter.is_zero()) continue;
        r.residual -= gram_contribution(h.filter, h.sign, bank.ctx);
    }
    r.passes = r.residual.is_zero();
    for (auto& h : bank.highpass) {
        int v = vmo(h.filter.base());
        r.per_filter_vmo.push_back(v);
        r.min_vmo = std::min(r.min_vmo, v);
    }
    r.sr = sum_rule_order(bank.lowpass, bank.ctx);
    r.vm_ceiling = vm_ceiling(bank.lowpass, bank.ctx);
    r.ceiling_respected = bank.highpass.empty() || r.min_vmo <= r.vm_ceiling;
    return r;
}

double spot_check_frequency(const QtfBank& bank, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-std::numbers::pi, std::numbers::pi);
    int d = bank.ctx.dim();
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<double> xi(d);
        for (auto& x : xi) x = U(rng);
        for (auto& om : bank.ctx.omega()) {
            std::vector<double> xs(d);
            bool zero = true;
            for (int i = 0; i < d; ++i) {
                xs[i] = xi[i] + 2 * std::numbers::pi * om[i].get_d();
                zero = zero && om[i] == 0;
            }
            std::complex<double> v = std::conj(bank.lowpass.evaluate(xi)) * bank.lowpass.evaluate(xs);
            for (auto& h : bank.highpass) {
                const Laurent& b = h.filter.base();
                v += double(h.sign) * h.filter.scale_sq().get_d() * std::conj(b.evaluate(xi)) * b.evaluate(xs);
            }
            worst = std::max(worst, std::abs(v - (zero ? 1.0 : 0.0)));
        }
    }
    return worst;
}

} // namespace qtf
