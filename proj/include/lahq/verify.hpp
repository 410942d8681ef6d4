#pragma once

// Identity registry and grid runner. Every identity is a parameterized claim
// "lhs == rhs" whose two sides are compared through their canonical text.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lahq/errors.hpp"

namespace lahq {

enum class Mode { corrected, as_printed };
enum class Suite { classical, q, all };

std::string_view to_string(Mode mode);
std::string_view to_string(Suite suite);
Mode parse_mode(std::string_view text);    // throws InvalidRange
Suite parse_suite(std::string_view text);  // throws InvalidRange

/// Named integer parameters in the order declared by the identity's domain.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

/// Value of a named parameter; throws ParamsOutOfDomain if absent.
std::int64_t param(const Params& params, std::string_view name);
std::string format_params(const Params& params);

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  /// Size-like parameters are clipped to the run's n_max.
  bool capped = false;
};

struct ParamDomain {
  std::vector<ParamRange> ranges;
  /// Extra coupling between parameters (e.g. k <= n); empty means none.
  std::function<bool(const Params&)> constraint;

  bool contains(const Params& params) const;
};

struct Sides {
  std::string lhs;
  std::string rhs;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  std::string anchor;
  Suite suite = Suite::classical;
  ParamDomain domain;
  bool has_as_printed = false;
  std::function<Sides(const Params&, Mode)> evaluate;
};

struct RunConfig {
  Suite suite = Suite::all;
  /// Magnitudes of alpha to use; identities that admit negative alpha also
  /// run at -alpha.
  std::vector<std::int64_t> alpha_list{1};
  std::int64_t n_max = 6;
  Mode mode = Mode::corrected;
};

struct CheckResult {
  std::string id;
  Params params;
  bool passed = false;
  std::string lhs;
  std::string rhs;  // filled only on failure
  std::chrono::nanoseconds elapsed{0};
};

struct Report {
  RunConfig config;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<CheckResult> failed;
  std::chrono::nanoseconds wall_time{0};
};

/// All registered identities, in registration order.
const std::vector<IdentitySpec>& registry();

/// Throws UnknownIdentity.
const IdentitySpec& find_identity(std::string_view id);

/// Evaluates one identity at one parameter point. Throws UnknownIdentity or
/// ParamsOutOfDomain; evaluation errors become a failed result.
CheckResult check_identity(std::string_view id, const Params& params, Mode mode = Mode::corrected);

/// The identity's domain intersected with the run configuration.
std::vector<Params> enumerate_params(const IdentitySpec& spec, const RunConfig& config);

/// Runs every selected identity over its grid, in parallel. Failures are
/// ordered by (id, params); the result does not depend on scheduling.
Report run_suite(const RunConfig& config);

/// JSON report. wall_ms is reported as 0 unless include_timing is set, so
/// that repeated runs are byte-identical.
std::string report_to_json(const Report& report, bool include_timing = false);
std::string report_to_text(const Report& report, bool include_timing = false);

}  // namespace lahq
