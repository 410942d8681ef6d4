#include "lahq/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lahq/classical.hpp"
#include "lahq/qcalc.hpp"
#include "lahq/qwhitney.hpp"
#include "lahq/verify.hpp"
#include "lahq/whitney.hpp"

namespace lahq {

namespace {

using std::int64_t;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

enum class FamilyId {
  lah, stirling1u, stirling2, bell,
  whitney1, whitney2, whitney_lah, dowling,
  q_whitney1, q_whitney2, q_whitney_lah, q_lah, q_dowling,
};

struct FamilyInfo {
  FamilyId id;
  bool sequence;    // indexed by n only
  bool has_alpha;
  bool signed_alpha;
};

const std::map<std::string, FamilyInfo>& families() {
  static const std::map<std::string, FamilyInfo> table{
      {"lah", {FamilyId::lah, false, false, false}},
      {"stirling1u", {FamilyId::stirling1u, false, false, false}},
      {"stirling2", {FamilyId::stirling2, false, false, false}},
      {"bell", {FamilyId::bell, true, false, false}},
      {"whitney1", {FamilyId::whitney1, false, true, false}},
      {"whitney2", {FamilyId::whitney2, false, true, false}},
      {"whitney-lah", {FamilyId::whitney_lah, false, true, false}},
      {"dowling", {FamilyId::dowling, true, true, false}},
      {"q-whitney1", {FamilyId::q_whitney1, false, true, true}},
      {"q-whitney2", {FamilyId::q_whitney2, false, true, true}},
      {"q-whitney-lah", {FamilyId::q_whitney_lah, false, true, false}},
      {"q-lah", {FamilyId::q_lah, false, false, false}},
      {"q-dowling", {FamilyId::q_dowling, true, true, false}},
  };
  return table;
}

const FamilyInfo& family_info(const std::string& name) {
  auto it = families().find(name);
  if (it == families().end()) throw UsageError("unknown family '" + name + "'");
  return it->second;
}

struct Evaluator {
  FamilyInfo info;
  int64_t alpha;
  std::string method;

  Evaluator(const std::string& family, int64_t alpha_in, std::string method_in)
      : info(family_info(family)), alpha(alpha_in), method(std::move(method_in)) {
    if (!info.has_alpha && alpha != 1) throw UsageError("family '" + family + "' takes no --alpha");
    if (alpha == 0 || (alpha < 0 && !info.signed_alpha)) {
      throw InvalidAlpha("alpha " + std::to_string(alpha) + " is not allowed for '" + family + "'");
    }
    const bool has_routes = info.id == FamilyId::whitney_lah || info.id == FamilyId::q_whitney_lah ||
                            info.id == FamilyId::q_lah;
    if (!method.empty() && !has_routes) throw UsageError("--method applies only to Lah-type families");
    if (method.empty()) method = "recurrence";
    static const std::vector<std::string> twl_methods{"recurrence", "explicit", "product", "scaled"};
    static const std::vector<std::string> q_methods{"recurrence", "explicit"};
    const auto& allowed = info.id == FamilyId::whitney_lah ? twl_methods : q_methods;
    if (has_routes && std::find(allowed.begin(), allowed.end(), method) == allowed.end()) {
      throw UsageError("unknown --method '" + method + "'");
    }
  }

  TwlMethod twl_method() const {
    if (method == "explicit") return TwlMethod::explicit_sum;
    if (method == "product") return TwlMethod::product;
    if (method == "scaled") return TwlMethod::scaled;
    return TwlMethod::recurrence;
  }

  std::string operator()(int64_t n, int64_t k) const {
    switch (info.id) {
      case FamilyId::lah: return to_string(lah(n, k));
      case FamilyId::stirling1u: return to_string(stirling1u(n, k));
      case FamilyId::stirling2: return to_string(stirling2(n, k));
      case FamilyId::bell: return to_string(bell(n));
      case FamilyId::whitney1: return to_string(tw1(alpha, n, k));
      case FamilyId::whitney2: return to_string(tw2(alpha, n, k));
      case FamilyId::whitney_lah: return to_string(twl(alpha, n, k, twl_method()));
      case FamilyId::dowling: return to_string(dowling(alpha, n));
      case FamilyId::q_whitney1: return qw1(alpha, n, k).to_string();
      case FamilyId::q_whitney2: return qw2(alpha, n, k).to_string();
      case FamilyId::q_whitney_lah:
        return (method == "explicit" ? qwl_explicit(alpha, n, k) : qwl(alpha, n, k)).to_string();
      case FamilyId::q_lah:
        if (method == "explicit" && (k < 1 || k > n)) return qlah_gr(n, k).to_string();
        return qlah_gr(n, k, method == "explicit" ? QLahRoute::explicit_formula
                                                  : QLahRoute::recurrence)
            .to_string();
      case FamilyId::q_dowling: return qdowling(alpha, n).to_string();
    }
    return "0";
  }
};

void require_non_negative(int64_t value, const char* name) {
  if (value < 0) throw UsageError(std::string(name) + " must be >= 0");
}

int cmd_table(const std::string& family, int64_t alpha, int64_t n_max, const std::string& format,
              const std::string& method, std::ostream& out) {
  require_non_negative(n_max, "--n-max");
  const Evaluator eval(family, alpha, method);
  if (format == "csv") {
    out << (eval.info.sequence ? "n,value\n" : "n,k,value\n");
    for (int64_t n = 0; n <= n_max; ++n) {
      if (eval.info.sequence) {
        out << n << ',' << eval(n, 0) << '\n';
        continue;
      }
      for (int64_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << eval(n, k) << '\n';
    }
    return 0;
  }
  nlohmann::ordered_json doc;
  doc["family"] = family;
  doc["alpha"] = alpha;
  doc["n_max"] = n_max;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int64_t n = 0; n <= n_max; ++n) {
    std::vector<std::string> row;
    if (eval.info.sequence) {
      row.push_back(eval(n, 0));
    } else {
      for (int64_t k = 0; k <= n; ++k) row.push_back(eval(n, k));
    }
    rows.push_back(row);
  }
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
  return 0;
}

int cmd_eval(const std::string& family, int64_t alpha, int64_t n, std::optional<int64_t> k,
             const std::string& method, std::ostream& out) {
  require_non_negative(n, "--n");
  const Evaluator eval(family, alpha, method);
  if (!eval.info.sequence && !k) throw UsageError("family '" + family + "' needs --k");
  if (eval.info.sequence && k) throw UsageError("family '" + family + "' takes no --k");
  out << eval(n, k.value_or(0)) << '\n';
  return 0;
}

std::vector<int64_t> parse_alpha_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("--alpha-list expects positive integers separated by commas, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("--alpha-list is empty");
  return out;
}

int cmd_verify(const std::string& suite, const std::string& alpha_list, int64_t n_max,
               const std::string& mode, const std::string& format, bool timing, std::ostream& out) {
  RunConfig config;
  config.suite = parse_suite(suite);
  config.alpha_list = parse_alpha_list(alpha_list);
  config.n_max = n_max;
  config.mode = parse_mode(mode);
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  const Report report = run_suite(config);
  if (format == "json") {
    out << report_to_json(report, timing) << '\n';
  } else {
    out << report_to_text(report, timing);
  }
  return report.failed.empty() ? 0 : 1;
}

int cmd_series(const std::string& id, int64_t alpha, int64_t k, int64_t order, std::ostream& out) {
  require_non_negative(k, "--k");
  require_non_negative(order, "--order");
  const auto N = static_cast<std::size_t>(order);
  std::vector<std::string> lhs, rhs;
  if (id == "r3") {
    // coefficient of t^n: w^(n,k)/n!  versus  (t/(1-alpha t))^k / k!
    const auto series = twl_egf_series(alpha, k, N);
    for (int64_t n = 0; n <= order; ++n) {
      lhs.push_back(to_string(make_rat(twl(alpha, n, k), factorial(n))));
      rhs.push_back(to_string(series[static_cast<std::size_t>(n)]));
    }
  } else if (id == "qr1.1" || id == "qr1_1") {
    // Denominators cleared: [k]! [alpha]^k L[n,k]  versus  [n]! times the
    // t^n coefficient of the alternating product sum (factorials in q^alpha).
    const QBase base(alpha);
    const auto series = qwl_egf_series_scaled(alpha, k, N);
    const LaurentPoly scale = qfact(k, base) * lp_pow(qint(alpha), static_cast<std::uint64_t>(k));
    for (int64_t n = 0; n <= order; ++n) {
      lhs.push_back((scale * qwl(alpha, n, k)).to_string());
      rhs.push_back((qfact(n, base) * series[static_cast<std::size_t>(n)]).to_string());
    }
  } else {
    throw UsageError("unknown series id '" + id + "' (expected r3 or qr1.1)");
  }
  out << "n,lhs,rhs\n";
  for (int64_t n = 0; n <= order; ++n) {
    out << n << ',' << lhs[static_cast<std::size_t>(n)] << ',' << rhs[static_cast<std::size_t>(n)]
        << '\n';
  }
  const bool match = lhs == rhs;
  out << (match ? "match" : "mismatch") << '\n';
  return match ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lah, Stirling, Whitney and q-Whitney number tables and identity checks", "lahq"};
  app.require_subcommand(1);

  std::string family, format = "csv", method;
  int64_t alpha = 1, n_max = 0, n = 0;
  std::optional<int64_t> k;

  auto* table = app.add_subcommand("table", "Print a triangle or sequence");
  table->add_option("--family", family, "Number family")->required();
  table->add_option("--alpha", alpha, "Translation parameter");
  table->add_option("--n-max", n_max, "Largest row index")->required();
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--method", method, "Route for Lah-type families");

  auto* eval = app.add_subcommand("eval", "Print a single value");
  eval->add_option("--family", family, "Number family")->required();
  eval->add_option("--alpha", alpha, "Translation parameter");
  eval->add_option("--n", n, "Row index")->required();
  eval->add_option("--k", k, "Column index");
  eval->add_option("--method", method, "Route for Lah-type families");

  std::string suite = "all", alpha_list = "1", mode = "corrected", verify_format = "text";
  int64_t verify_n_max = 6;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check the registered identities over a grid");
  verify->add_option("--suite", suite, "classical, q or all")
      ->check(CLI::IsMember({"classical", "q", "all"}));
  verify->add_option("--alpha-list", alpha_list, "Comma-separated alpha magnitudes");
  verify->add_option("--n-max", verify_n_max, "Grid size cap");
  verify->add_option("--mode", mode, "corrected or as_printed");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "Report wall-clock time");

  std::string series_id;
  int64_t series_alpha = 1, series_k = 0, order = 8;
  auto* series = app.add_subcommand("series", "Compare generating-function coefficients");
  series->add_option("--id", series_id, "r3 or qr1.1")->required();
  series->add_option("--alpha", series_alpha, "Translation parameter");
  series->add_option("--k", series_k, "Column index")->required();
  series->add_option("--order", order, "Truncation order N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lahq: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*table) return cmd_table(family, alpha, n_max, format, method, out);
    if (*eval) return cmd_eval(family, alpha, n, k, method, out);
    if (*verify) {
      return cmd_verify(suite, alpha_list, verify_n_max, mode, verify_format, timing, out);
    }
    if (*series) return cmd_series(series_id, series_alpha, series_k, order, out);
  } catch (const Error& e) {
    err << "lahq: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lahq
