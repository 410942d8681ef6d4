#include "lahq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "identities.hpp"
#include "json.hpp"
#include "lahq/errors.hpp"

namespace lahq {

std::string_view to_string(Mode mode) {
  return mode == Mode::corrected ? "corrected" : "as_printed";
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::classical: return "classical";
    case Suite::q: return "q";
    case Suite::all: return "all";
  }
  return "all";
}

Mode parse_mode(std::string_view text) {
  if (text == "corrected") return Mode::corrected;
  if (text == "as_printed" || text == "as-printed") return Mode::as_printed;
  throw InvalidRange("unknown mode '" + std::string(text) + "'");
}

Suite parse_suite(std::string_view text) {
  if (text == "classical") return Suite::classical;
  if (text == "q") return Suite::q;
  if (text == "all") return Suite::all;
  throw InvalidRange("unknown suite '" + std::string(text) + "'");
}

std::int64_t param(const Params& params, std::string_view name) {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw ParamsOutOfDomain("missing parameter '" + std::string(name) + "'");
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

bool ParamDomain::contains(const Params& params) const {
  if (params.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& r = ranges[i];
    const auto& [key, value] = params[i];
    if (key != r.name || value < r.lo || value > r.hi) return false;
    if (key == "alpha" && value == 0) return false;
  }
  return !constraint || constraint(params);
}

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> identities = [] {
    std::vector<IdentitySpec> out;
    detail::register_classical_identities(out);
    detail::register_q_identities(out);
    return out;
  }();
  return identities;
}

const IdentitySpec& find_identity(std::string_view id) {
  for (const auto& spec : registry()) {
    if (spec.id == id) return spec;
  }
  throw UnknownIdentity("'" + std::string(id) + "'");
}

namespace {

CheckResult evaluate(const IdentitySpec& spec, const Params& params, Mode mode) {
  CheckResult result;
  result.id = spec.id;
  result.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    Sides sides = spec.evaluate(params, mode);
    result.passed = sides.lhs == sides.rhs;
    result.lhs = std::move(sides.lhs);
    if (!result.passed) result.rhs = std::move(sides.rhs);
  } catch (const std::exception& e) {
    result.passed = false;
    result.lhs = std::string("error: ") + e.what();
    result.rhs = "error";
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

bool alpha_selected(std::int64_t alpha, const std::vector<std::int64_t>& alpha_list) {
  return std::any_of(alpha_list.begin(), alpha_list.end(),
                     [&](std::int64_t a) { return a == std::abs(alpha); });
}

}  // namespace

CheckResult check_identity(std::string_view id, const Params& params, Mode mode) {
  const IdentitySpec& spec = find_identity(id);
  if (!spec.domain.contains(params)) {
    throw ParamsOutOfDomain(spec.id + " at " + format_params(params));
  }
  return evaluate(spec, params, mode);
}

std::vector<Params> enumerate_params(const IdentitySpec& spec, const RunConfig& config) {
  std::vector<std::vector<std::int64_t>> axes;
  for (const auto& r : spec.domain.ranges) {
    std::vector<std::int64_t> values;
    const std::int64_t hi = r.capped ? std::min(r.hi, config.n_max) : r.hi;
    for (std::int64_t v = r.lo; v <= hi; ++v) {
      if (r.name == "alpha" && (v == 0 || !alpha_selected(v, config.alpha_list))) continue;
      values.push_back(v);
    }
    if (values.empty()) return {};
    axes.push_back(std::move(values));
  }

  std::vector<Params> out;
  std::vector<std::size_t> index(axes.size(), 0);
  while (true) {
    Params p;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      p.emplace_back(spec.domain.ranges[i].name, axes[i][index[i]]);
    }
    if (!spec.domain.constraint || spec.domain.constraint(p)) out.push_back(std::move(p));
    // odometer increment, last axis fastest
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++index[i] < axes[i].size()) break;
      index[i] = 0;
      if (i == 0) return out;
    }
    if (axes.empty()) return out;
  }
}

Report run_suite(const RunConfig& config) {
  if (config.n_max < 1) throw InvalidRange("n_max must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  struct Task {
    const IdentitySpec* spec;
    Params params;
  };
  std::vector<Task> tasks;
  for (const auto& spec : registry()) {
    if (config.suite != Suite::all && spec.suite != config.suite) continue;
    for (auto& p : enumerate_params(spec, config)) tasks.push_back({&spec, std::move(p)});
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = evaluate(*tasks[i].spec, tasks[i].params, config.mode);
    }
  };
  const std::size_t thread_count =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < thread_count; ++t) pool.emplace_back(worker);
    worker();
  }

  Report report;
  report.config = config;
  report.total = results.size();
  for (auto& r : results) {
    if (r.passed) {
      ++report.passed;
    } else {
      report.failed.push_back(std::move(r));
    }
  }
  std::sort(report.failed.begin(), report.failed.end(),
            [](const CheckResult& a, const CheckResult& b) {
              if (a.id != b.id) return a.id < b.id;
              return a.params < b.params;
            });
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::string report_to_json(const Report& report, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json config;
  config["suite"] = std::string(to_string(report.config.suite));
  config["alpha_list"] = report.config.alpha_list;
  config["n_max"] = report.config.n_max;
  config["mode"] = std::string(to_string(report.config.mode));

  ordered_json failed = ordered_json::array();
  for (const auto& r : report.failed) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    failed.push_back({{"id", r.id}, {"params", params}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  }

  ordered_json out;
  out["config"] = config;
  out["total"] = report.total;
  out["passed"] = report.passed;
  out["failed"] = failed;
  out["wall_ms"] = include_timing
                       ? std::chrono::duration_cast<std::chrono::milliseconds>(report.wall_time).count()
                       : 0;
  return out.dump(2);
}

std::string report_to_text(const Report& report, bool include_timing) {
  std::ostringstream out;
  out << "suite " << to_string(report.config.suite) << ", mode "
      << to_string(report.config.mode) << ", alpha";
  for (std::size_t i = 0; i < report.config.alpha_list.size(); ++i) {
    out << (i == 0 ? " " : ",") << report.config.alpha_list[i];
  }
  out << ", n_max " << report.config.n_max << '\n';
  out << "total " << report.total << ", passed " << report.passed << ", failed "
      << report.failed.size() << '\n';
  for (const auto& r : report.failed) {
    out << "FAIL " << r.id << ' ' << format_params(r.params) << '\n';
    out << "  lhs: " << r.lhs << '\n';
    out << "  rhs: " << r.rhs << '\n';
  }
  if (include_timing) {
    out << "wall_ms "
        << std::chrono::duration_cast<std::chrono::milliseconds>(report.wall_time).count() << '\n';
  }
  return out.str();
}

}  // namespace lahq
