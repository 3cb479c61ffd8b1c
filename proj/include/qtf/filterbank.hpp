#pragma once

#include "qtf/laurent.hpp"
#include "qtf/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtf {

// Filter sqrt(scale_sq) * base. Canonical form: base has coprime integer coefficients,
// scale_sq > 0 carries every rational square factor. The sign of base is kept as given.
class ScaledFilter {
public:
    ScaledFilter() : scale_sq_(1), base_(1) {}
    ScaledFilter(const Rational& scale_sq, const Laurent& base);

    const Rational& scale_sq() const { return scale_sq_; }
    const Laurent& base() const { return base_; }
    int dim() const { return base_.dim(); }
    bool is_zero() const { return base_.is_zero(); }

    bool operator==(const ScaledFilter& o) const { return scale_sq_ == o.scale_sq_ && base_ == o.base_; }
    bool operator!=(const ScaledFilter& o) const { return !(*this == o); }

private:
    Rational scale_sq_;
    Laurent base_;
};

// Positive rational c with base / c having coprime integer coefficients (1 for the zero polynomial).
Rational content(const Laurent& u);

// Representative of a filter up to sign and shifts by M Z^d: leading support point moved into
// Gamma_M, leading coefficient made positive. Used for multiset comparisons.
ScaledFilter comparison_form(const ScaledFilter& f, const DilationContext& ctx);

struct HighPass {
    ScaledFilter filter;
    int sign = 1;  // +1 or -1
};

struct BankMeta {
    std::string name;
    std::string source;
    std::optional<std::vector<int>> claimed_vmo;
};

struct QtfBank {
    DilationContext ctx;
    Laurent lowpass;
    std::vector<HighPass> highpass;
    BankMeta meta;
};

// (b^[gamma_1], ..., b^[gamma_dm])
std::vector<Laurent> coset_row(const Laurent& b, const DilationContext& ctx);

// N_a = I - dm * v* v with v the coset row of a.
LaurentMatrix build_Na(const Laurent& a, const DilationContext& ctx);

// sign * dm * scale_sq * G* G for the coset row G of the filter base.
LaurentMatrix gram_contribution(const ScaledFilter& f, int sign, const DilationContext& ctx);

} // namespace qtf
