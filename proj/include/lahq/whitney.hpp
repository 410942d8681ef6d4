#pragma once

// Translated Whitney numbers of the first and second kind, translated
// Whitney-Lah numbers (four independent routes), translated Dowling numbers
// and the generic two-sequence recurrence u(n,k).

#include <cstdint>
#include <functional>
#include <memory>

#include "lahq/arith.hpp"
#include "lahq/triangle.hpp"

namespace lahq {

enum class WhitneyFamily { tw1, tw2, twl };

using WhitneyTriangle = Triangle<WhitneyFamily, ExactInt>;

/// Throws InvalidAlpha unless alpha >= 1.
void require_positive_alpha(std::int64_t alpha);

/// Builds rows 0..n_max by the defining recurrences.
WhitneyTriangle whitney_triangle(WhitneyFamily family, std::int64_t alpha, std::int64_t n_max);

/// Memoized, shared across threads.
std::shared_ptr<const WhitneyTriangle> whitney_table(WhitneyFamily family, std::int64_t alpha,
                                                     std::int64_t n_max);

/// w~(n,k) = w~(n-1,k-1) + alpha(n-1) w~(n-1,k)
ExactInt tw1(std::int64_t alpha, std::int64_t n, std::int64_t k);
/// W~(n,k) = W~(n-1,k-1) + alpha k W~(n-1,k)
ExactInt tw2(std::int64_t alpha, std::int64_t n, std::int64_t k);
/// W~(n,k) from the alternating sum (alpha^k k!)^-1 sum_j (-1)^{k-j} C(k,j) (alpha j)^n.
ExactInt tw2_explicit(std::int64_t alpha, std::int64_t n, std::int64_t k);

enum class TwlMethod {
  recurrence,    ///< w^(n,k) = w^(n-1,k-1) + alpha(n+k-1) w^(n-1,k)
  explicit_sum,  ///< alpha^{n-k}/k! sum_j (-1)^{k-j} C(k,j) <j>_n
  product,       ///< alpha^{n-k} n!/k! C(n-1,n-k)
  scaled,        ///< alpha^{n-k} L(n,k)
};

ExactInt twl(std::int64_t alpha, std::int64_t n, std::int64_t k,
             TwlMethod method = TwlMethod::recurrence);

/// Sequences (a_i), (b_i) for u(n,k) = u(n-1,k-1) + (a_{n-1} + b_k) u(n-1,k).
struct MansourSpec {
  std::function<ExactRat(std::int64_t)> a;
  std::function<ExactRat(std::int64_t)> b;

  /// a_i = alpha*i, b_j = alpha*j, which turns u into the Whitney-Lah numbers.
  static MansourSpec whitney_lah(std::int64_t alpha);
};

enum class MansourRoute {
  recurrence,
  /// sum_{j<=k} prod_{i<n}(b_j + a_i) / prod_{i<=k, i!=j}(b_j - b_i)
  explicit_sum,
  /// Same sum with the denominator running over i < n instead of i <= k.
  explicit_as_printed,
};

/// Throws DuplicateBValues if an explicit route meets b_j = b_i.
ExactRat mansour_u(const MansourSpec& spec, std::int64_t n, std::int64_t k,
                   MansourRoute route = MansourRoute::recurrence);

/// D(n) = sum_k W~(n,k)
ExactInt dowling(std::int64_t alpha, std::int64_t n);

/// e^{-1/alpha} sum_i (i alpha)^n / (i! alpha^i), summed until a term past the
/// peak falls below rel_tol times the partial sum. Throws NoConvergence if
/// max_terms terms do not suffice.
double dowling_dobinski(std::int64_t alpha, std::int64_t n, double rel_tol, std::int64_t max_terms);

/// sum_j (-1)^{n-j} (sum_{k<=j} w^(j,k)) W~(n,j)
ExactInt dowling_qi(std::int64_t alpha, std::int64_t n);

/// (t/(1 - alpha t))^k / k! modulo t^(order+1).
TruncSeries<ExactRat> twl_egf_series(std::int64_t alpha, std::int64_t k, std::size_t order);

}  // namespace lahq
