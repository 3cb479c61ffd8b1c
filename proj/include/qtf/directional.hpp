#pragma once

#include "qtf/filterbank.hpp"

namespace qtf {

struct DirectionalOptions {
    bool merge = false;  // fold filters that are multiples of each other
};

// Two-tap high-pass filters from the term-by-term elimination of N_a.
// Throws NoBasicSumRule, InternalResidue.
QtfBank construct_directional(const Laurent& a, const DilationContext& ctx, DirectionalOptions opts = {});

// Combine filters whose bases agree up to sign; drops filters that cancel.
std::vector<HighPass> merge_proportional(const std::vector<HighPass>& hp);

} // namespace qtf
