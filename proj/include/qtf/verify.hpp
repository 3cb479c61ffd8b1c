#pragma once

#include "qtf/filterbank.hpp"

#include <cstdint>
#include <vector>

namespace qtf {

struct VerificationReport {
    bool passes = false;
    LaurentMatrix residual;       // N_a - sum of signed Gram contributions
    std::vector<int> per_filter_vmo;
    int min_vmo = kInfiniteVmo;
    int sr = 0;
    int vm_ceiling = 0;
    bool ceiling_respected = true;  // min_vmo <= vm_ceiling
};

VerificationReport verify_bank(const QtfBank& bank);

// Largest deviation of the frequency-domain identity over random xi and every omega.
double spot_check_frequency(const QtfBank& bank, int samples, std::uint64_t seed = 20240611);

} // namespace qtf
