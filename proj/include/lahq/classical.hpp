#pragma once

// Classical triangles (unsigned Stirling numbers of both kinds, Lah numbers),
// Bell numbers, and the factorial polynomials in t used to check their
// generating relations.

#include <cstdint>
#include <memory>

#include "lahq/arith.hpp"
#include "lahq/triangle.hpp"

namespace lahq {

enum class ClassicalFamily { stirling1u, stirling2, lah };

using ClassicalTriangle = Triangle<ClassicalFamily, ExactInt>;

ExactInt factorial(std::int64_t n);

/// Binomial coefficient r(r-1)...(r-k+1)/k! for any integer r; 0 for k < 0.
ExactInt binomial(std::int64_t r, std::int64_t k);

/// Rows 0..n_max built by recurrence (the Lah table uses the closed form).
ClassicalTriangle classical_triangle(ClassicalFamily family, std::int64_t n_max);

/// Memoized table covering at least n_max rows.
std::shared_ptr<const ClassicalTriangle> classical_table(ClassicalFamily family,
                                                         std::int64_t n_max);

/// Permutations of n elements with k cycles.
ExactInt stirling1u(std::int64_t n, std::int64_t k);
/// Partitions of an n-set into k blocks.
ExactInt stirling2(std::int64_t n, std::int64_t k);
/// L(n,k) = n!/k! * C(n-1,k-1) for 1 <= k <= n; L(0,0) = 1; 0 otherwise.
ExactInt lah(std::int64_t n, std::int64_t k);

/// Brute-force Lah count: enumerates set partitions of {1..n} into k blocks
/// (restricted growth strings) and weights each by the product of the block
/// size factorials. Throws ScaleExceeded for n > 10.
ExactInt lah_oracle(std::int64_t n, std::int64_t k);

/// B_n as the row sum of the second-kind Stirling triangle.
ExactInt bell(std::int64_t n);

// Factorial polynomials in the variable t (rendered with variable "t").

/// <t>_n = t(t+1)...(t+n-1)
LaurentPoly rising_poly(std::int64_t n);
/// (t)_n = t(t-1)...(t-n+1)
LaurentPoly falling_poly(std::int64_t n);
/// (t|alpha)_n = t(t-alpha)...(t-(n-1)alpha); alpha may be any integer.
LaurentPoly generalized_falling_poly(std::int64_t n, std::int64_t alpha);

}  // namespace lahq
