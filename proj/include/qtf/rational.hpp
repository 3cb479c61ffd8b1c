#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qtf {

using Rational = mpq_class;
using Integer = mpz_class;

// Integer lattice point / multi-index. Ordered lexicographically by std::vector.
using Index = std::vector<std::int64_t>;

// Accepts "p", "-p", "p/q". Anything else (decimals, exponents, q == 0) throws NonRational.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

int sign(const Rational& q);
Rational abs(const Rational& q);
double to_double(const Rational& q);

Index operator+(const Index& a, const Index& b);
Index operator-(const Index& a, const Index& b);
Index operator-(const Index& a);
Index zero_index(int dim);
bool is_zero(const Index& k);
std::int64_t total_degree(const Index& k);  // sum of entries
std::string to_string(const Index& k);

// floor(a / b) for b != 0
std::int64_t floor_div(std::int64_t a, std::int64_t b);

// All multi-indices nu in N_0^dim with |nu| == order, ascending lexicographic order.
std::vector<Index> multi_indices(int dim, int order);

// Lexicographically largest nu <= k componentwise with |nu| == order (requires |k| >= order, k >= 0).
Index greedy_sub_index(const Index& k, int order);

} // namespace qtf
