#include "lahq/classical.hpp"

#include <string>
#include <vector>

namespace lahq {

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw NegativeArgument("factorial(" + std::to_string(n) + ")");
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

ExactInt binomial(std::int64_t r, std::int64_t k) {
  if (k < 0) return 0;
  ExactInt out;
  if (r >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
  } else {
    // mpz_bin_ui extends to negative upper arguments.
    const ExactInt upper = r;
    mpz_bin_ui(out.get_mpz_t(), upper.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return out;
}

ClassicalTriangle classical_triangle(ClassicalFamily family, std::int64_t n_max) {
  if (n_max < 0) throw InvalidRange("n_max must be >= 0");
  ClassicalTriangle t;
  t.family = family;
  t.alpha = 1;
  t.rows.resize(static_cast<std::size_t>(n_max + 1));
  t.rows[0] = {ExactInt(1)};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n + 1), ExactInt(0));
    for (std::int64_t k = 1; k <= n; ++k) {
      switch (family) {
        case ClassicalFamily::stirling1u:
          // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
          row[k] = t.at(n - 1, k - 1) + (n - 1) * t.at(n - 1, k);
          break;
        case ClassicalFamily::stirling2:
          row[k] = t.at(n - 1, k - 1) + k * t.at(n - 1, k);
          break;
        case ClassicalFamily::lah:
          row[k] = factorial(n) / factorial(k) * binomial(n - 1, k - 1);
          break;
      }
    }
  }
  return t;
}

namespace {

TriangleCache<ClassicalFamily, ExactInt>& cache() {
  static TriangleCache<ClassicalFamily, ExactInt> instance(
      [](ClassicalFamily f, std::int64_t, std::int64_t n_max) {
        return classical_triangle(f, n_max);
      });
  return instance;
}

ExactInt lookup(ClassicalFamily family, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return cache().get(family, 1, n)->at(n, k);
}

// Calls visit(block_sizes) for every set partition of {0..n-1} into exactly
// k blocks, generated as restricted growth strings.
template <class Visit>
void for_each_partition(std::int64_t n, std::int64_t k, Visit&& visit) {
  std::vector<std::int64_t> block_of(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> sizes;
  auto rec = [&](auto&& self, std::int64_t pos, std::int64_t blocks) -> void {
    if (n - pos < k - blocks) return;  // not enough elements left to open blocks
    if (pos == n) {
      if (blocks == k) visit(sizes);
      return;
    }
    for (std::int64_t b = 0; b < blocks; ++b) {
      ++sizes[static_cast<std::size_t>(b)];
      self(self, pos + 1, blocks);
      --sizes[static_cast<std::size_t>(b)];
    }
    if (blocks < k) {
      sizes.push_back(1);
      self(self, pos + 1, blocks + 1);
      sizes.pop_back();
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::shared_ptr<const ClassicalTriangle> classical_table(ClassicalFamily family,
                                                         std::int64_t n_max) {
  return cache().get(family, 1, n_max);
}

ExactInt stirling1u(std::int64_t n, std::int64_t k) {
  return lookup(ClassicalFamily::stirling1u, n, k);
}

ExactInt stirling2(std::int64_t n, std::int64_t k) {
  return lookup(ClassicalFamily::stirling2, n, k);
}

ExactInt lah(std::int64_t n, std::int64_t k) {
  if (n == 0 && k == 0) return 1;
  if (k < 1 || k > n) return 0;
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

ExactInt lah_oracle(std::int64_t n, std::int64_t k) {
  if (n > 10) throw ScaleExceeded("lah_oracle enumerates only n <= 10");
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt count = 0;
  for_each_partition(n, k, [&](const std::vector<std::int64_t>& sizes) {
    ExactInt orders = 1;
    for (auto s : sizes) orders *= factorial(s);
    count += orders;
  });
  return count;
}

ExactInt bell(std::int64_t n) {
  if (n < 0) return 0;
  const auto table = classical_table(ClassicalFamily::stirling2, n);
  ExactInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) sum += table->at(n, k);
  return sum;
}

LaurentPoly rising_poly(std::int64_t n) { return generalized_falling_poly(n, -1); }

LaurentPoly falling_poly(std::int64_t n) { return generalized_falling_poly(n, 1); }

LaurentPoly generalized_falling_poly(std::int64_t n, std::int64_t alpha) {
  if (n < 0) throw NegativeArgument("factorial polynomial of negative order");
  LaurentPoly out(1L);
  const LaurentPoly t = LaurentPoly::power(1);
  for (std::int64_t i = 0; i < n; ++i) out *= t - LaurentPoly(ExactInt(i * alpha));
  return out;
}

}  // namespace lahq
