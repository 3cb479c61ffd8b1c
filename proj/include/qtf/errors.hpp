#pragma once

#include <stdexcept>
#include <string>

namespace qtf {

enum class Errc {
    NotExpansive,
    Singular,
    DimMismatch,
    SchemaError,
    NonRational,
    NoBasicSumRule,
    InternalResidue,
    NotHermitian,
    InsufficientVM,
    IrrationalPhase,
    CeilingExceeded,
    Infeasible,
    NotNormalized,
    NoConvergence,
    DepthMismatch,
    InvalidArgument,
};

const char* errc_name(Errc c);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qtf
