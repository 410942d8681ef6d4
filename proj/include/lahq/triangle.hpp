#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace lahq {

/// Lower-triangular table rows[n][k], 0 <= k <= n <= n_max, for one family
/// and one parameter alpha. Lookups outside the triangle yield zero.
template <class Family, class Value>
struct Triangle {
  Family family{};
  std::int64_t alpha = 1;
  std::vector<std::vector<Value>> rows;

  std::int64_t n_max() const { return static_cast<std::int64_t>(rows.size()) - 1; }

  Value at(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n || n > n_max()) return Value(0);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

/// Process-wide memo of triangles keyed by (family, alpha).
///
/// Readers share the lock; a miss (or a table that is too small) rebuilds the
/// table under an exclusive lock. Published tables are immutable.
template <class Family, class Value>
class TriangleCache {
 public:
  using Table = Triangle<Family, Value>;
  using Builder = std::function<Table(Family, std::int64_t alpha, std::int64_t n_max)>;

  explicit TriangleCache(Builder builder) : builder_(std::move(builder)) {}

  std::shared_ptr<const Table> get(Family family, std::int64_t alpha, std::int64_t n_needed) {
    const Key key{static_cast<int>(family), alpha};
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end() && it->second->n_max() >= n_needed) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second->n_max() >= n_needed) return it->second;
    std::int64_t n_build = n_needed < kMinRows ? kMinRows : n_needed;
    if (it != tables_.end()) n_build = std::max(n_build, 2 * it->second->n_max());
    auto table = std::make_shared<const Table>(builder_(family, alpha, n_build));
    tables_[key] = table;
    return table;
  }

 private:
  using Key = std::pair<int, std::int64_t>;
  static constexpr std::int64_t kMinRows = 12;

  Builder builder_;
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Table>> tables_;
};

}  // namespace lahq
