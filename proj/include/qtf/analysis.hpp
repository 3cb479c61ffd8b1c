#pragma once

#include "qtf/filterbank.hpp"

namespace qtf {

struct FilterReport {
    int sr = 0;
    int vmo_ua = 0;        // kInfiniteVmo when |a^|^2 == 1
    int vm_ceiling = 0;
    bool basic_sum_rule = false;
    bool tightness_condition = false;
    long predicted_s = 0;
};

// Largest m with all coset moments of order < m equal across cosets.
int sum_rule_order(const Laurent& a, const DilationContext& ctx);
// Every coset sum equals 1/dm.
bool basic_sum_rule(const Laurent& a, const DilationContext& ctx);
// u_a = delta - a * a^*
Laurent ua(const Laurent& a);
int vm_ceiling(const Laurent& a, const DilationContext& ctx);
// Every coefficient of (a^[gamma_j])^* a^[gamma_k] is non-negative.
bool tightness_condition(const Laurent& a, const DilationContext& ctx);
// Number of high-pass filters the directional construction emits.
long predicted_count(const Laurent& a, const DilationContext& ctx);

FilterReport analyze(const Laurent& a, const DilationContext& ctx);

} // namespace qtf
