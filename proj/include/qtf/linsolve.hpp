#pragma once

#include "qtf/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qtf {

// Sparse exact linear system sum_i c_i x_i = rhs, solved by fraction-free elimination on
// integer rows (each row kept primitive). Free variables are set to zero.
class SparseSystem {
public:
    explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

    void add_equation(const std::vector<std::pair<std::size_t, Rational>>& coeffs, const Rational& rhs);
    std::size_t unknowns() const { return n_; }
    std::size_t equations() const { return count_; }

    // nullopt when inconsistent
    std::optional<std::vector<Rational>> solve();

private:
    struct Row {
        std::vector<std::pair<std::size_t, Integer>> c;  // sorted by column
        Integer rhs;
    };
    void make_primitive(Row& r);
    std::size_t n_;
    std::size_t count_ = 0;
    bool inconsistent_ = false;
    std::vector<Row> pivots_;                 // insertion order
    std::vector<long> pivot_of_col_;          // column -> index into pivots_, -1 if none
};

} // namespace qtf
