#include "qgue_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qgue/genus.hpp"
#include "qgue/gue.hpp"
#include "qgue/latex.hpp"
#include "qgue/verify.hpp"

namespace qgue::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kClosedFormBanner =
    "warning: --method closed evaluates published closed-form formulas as transcribed.\n"
    "warning: they are unverified and some are known to disagree with the definitional integral;\n"
    "warning: run `qgue verify` to see where.\n";

struct MomentArgs {
  std::string schur;
  std::optional<int> power_sum;
  std::string hermite_sq;
  int n_vars = 1;
  std::string method = "fast";
  std::string at_q;
  std::string format = "text";
};

struct VerifyArgs {
  std::string suite = "all";
  GridBounds bounds;
  std::string report;
  std::string format = "text";
};

struct TableArgs {
  bool harer_zagier = false;
  int max_m = 3;
  std::string format = "text";
};

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--hermite-sq expects m,s; got '" + text + "'");
  std::size_t used_m = 0;
  std::size_t used_s = 0;
  const std::string a = text.substr(0, comma);
  const std::string b = text.substr(comma + 1);
  int m = 0;
  int s = 0;
  try {
    m = std::stoi(a, &used_m);
    s = std::stoi(b, &used_s);
  } catch (const std::exception&) {
    throw std::invalid_argument("--hermite-sq expects m,s; got '" + text + "'");
  }
  if (used_m != a.size() || used_s != b.size())
    throw std::invalid_argument("--hermite-sq expects m,s; got '" + text + "'");
  if (m < 0 || s < 0) throw std::invalid_argument("--hermite-sq needs m, s >= 0");
  return {m, s};
}

int run_moment(const MomentArgs& a, std::ostream& out, std::ostream& err) {
  MomentQuery query;
  query.method = parse_method(a.method);
  query.n_vars = a.n_vars;
  if (a.n_vars < 1) throw std::invalid_argument("--n-vars must be at least 1");
  ojson description;
  if (!a.schur.empty()) {
    query.kind = MomentQuery::Kind::schur;
    query.kappa = Partition::parse(a.schur);
    description["schur"] = query.kappa.to_string();
  } else if (a.power_sum) {
    query.kind = MomentQuery::Kind::power_sum;
    query.degree = *a.power_sum;
    description["power_sum"] = query.degree;
  } else {
    query.kind = MomentQuery::Kind::hermite_squared;
    std::tie(query.m, query.s) = parse_pair(a.hermite_sq);
    description["hermite_sq"] = {{"m", query.m}, {"s", query.s}};
  }
  if (query.method == Method::closed_form) err << kClosedFormBanner;

  const Scalar value = evaluate(query);
  std::optional<BigRat> specialized;
  if (!a.at_q.empty()) specialized = evaluate_at(value, parse_rational(a.at_q));

  if (a.format == "json") {
    ojson j;
    j["query"] = description;
    if (query.kind != MomentQuery::Kind::hermite_squared) j["n_vars"] = query.n_vars;
    j["method"] = to_string(query.method);
    if (specialized) j["at_q"] = to_string(parse_rational(a.at_q));
    j["value"] = specialized ? to_string(*specialized) : value.to_string();
    out << j.dump(2) << "\n";
  } else if (a.format == "latex") {
    out << (specialized ? to_latex(QPolynomial::constant(*specialized)) : to_latex(value)) << "\n";
  } else {
    out << (specialized ? to_string(*specialized) : value.to_string()) << "\n";
  }
  return kOk;
}

std::string params_text(const std::vector<Param>& params) {
  std::string s;
  for (const auto& p : params) {
    if (!s.empty()) s += " ";
    s += p.name + "=";
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, int>) s += std::to_string(v);
          else s += v;
        },
        p.value);
  }
  return s;
}

void print_discrepancies(const std::vector<VerificationReport>& reports, std::ostream& out) {
  bool header = false;
  for (const auto& r : reports) {
    for (const auto& p : r.points) {
      if (p.status != PointStatus::discrepant) continue;
      if (!header) out << "\ndiscrepancies:\n";
      header = true;
      out << "  " << r.identity << " [" << params_text(p.params) << "]  closed=" << p.closed->to_string()
          << "  oracle=" << p.oracle->to_string();
      if (p.ratio) {
        out << "  ratio=" << p.ratio->to_string();
        if (!p.monomial) out << "  (not a signed power of q)";
      } else {
        out << "  (" << p.note << ")";
      }
      out << "\n";
    }
  }
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  if (a.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(a.suite)) {
    suites = {*s};
  } else {
    err << "error: unknown suite '" << a.suite << "'\n";
    return kUsage;
  }
  for (Suite s : suites) validate_bounds(s, a.bounds);

  const int threads = default_thread_count();
  std::vector<VerificationReport> reports;
  for (Suite s : suites) {
    auto part = verify_suite(s, a.bounds, threads);
    std::move(part.begin(), part.end(), std::back_inserter(reports));
  }
  const std::string json = reports_to_json(reports);
  if (!a.report.empty()) {
    std::ofstream file(a.report, std::ios::binary);
    if (!file) {
      err << "error: cannot write report to " << a.report << "\n";
      return kUsage;
    }
    file << json;
  }
  if (a.format == "json") {
    out << json;
  } else {
    out << summary_table(reports);
    print_discrepancies(reports, out);
  }
  const bool discrepant = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.has_discrepancy(); });
  return discrepant ? kDiscrepancy : kOk;
}

ojson count_json(const BigInt& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

std::string counts_text(const std::vector<BigInt>& counts) {
  std::string s;
  for (const auto& c : counts) s += (s.empty() ? "" : " ") + c.get_str();
  return s;
}

int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.harer_zagier) {
    err << "error: table needs --harer-zagier\n";
    return kUsage;
  }
  if (a.max_m < 1 || a.max_m > kGenusTableMaxM) {
    err << "error: --max-m = " << a.max_m << " is out of range (1.." << kGenusTableMaxM << ")\n";
    return kUsage;
  }
  const auto rows = genus_table(a.max_m);
  bool all_match = true;
  for (const auto& row : rows) all_match = all_match && row.match;

  if (a.format == "json") {
    ojson j;
    j["table"] = "harer-zagier";
    j["rows"] = ojson::array();
    for (const auto& row : rows) {
      ojson r;
      r["m"] = row.m;
      r["epsilon"] = ojson::array();
      for (const auto& c : row.moments) r["epsilon"].push_back(count_json(c));
      r["pairings"] = ojson::array();
      for (const auto& c : row.pairings) r["pairings"].push_back(count_json(c));
      r["match"] = row.match;
      j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
  } else if (a.format == "latex") {
    out << "\\begin{tabular}{r|l|l|c}\n$m$ & $\\varepsilon_g(m)$ & pairings & match \\\\\n\\hline\n";
    for (const auto& row : rows)
      out << row.m << " & " << counts_text(row.moments) << " & " << counts_text(row.pairings) << " & "
          << (row.match ? "yes" : "no") << " \\\\\n";
    out << "\\end{tabular}\n";
  } else {
    out << std::left << std::setw(4) << "m" << std::setw(24) << "epsilon_g (g=0,1,..)" << std::setw(24) << "pairings"
        << "match\n";
    for (const auto& row : rows)
      out << std::left << std::setw(4) << row.m << std::setw(24) << counts_text(row.moments) << std::setw(24)
          << counts_text(row.pairings) << (row.match ? "yes" : "no") << "\n";
  }
  return all_match ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qgue: exact moments of the q-deformed Gaussian unitary ensemble"};
  app.name("qgue");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "latex"});

  MomentArgs moment_args;
  auto* moment = app.add_subcommand("moment", "Exact normalized integral of one symmetric function");
  auto* schur_opt = moment->add_option("--schur", moment_args.schur, "Schur function s_kappa, parts like 3,1");
  auto* power_opt = moment->add_option("--power-sum", moment_args.power_sum, "power sum p_k of degree k")
                        ->check(CLI::NonNegativeNumber);
  auto* herm_opt = moment->add_option("--hermite-sq", moment_args.hermite_sq, "L(x^{2m} H_s^2), given as m,s");
  schur_opt->excludes(power_opt, herm_opt);
  power_opt->excludes(herm_opt);
  moment->add_option("--n-vars", moment_args.n_vars, "number of variables N")->capture_default_str();
  moment->add_option("--method", moment_args.method, "fast | oracle | closed")
      ->check(CLI::IsMember({"fast", "oracle", "closed"}))
      ->capture_default_str();
  moment->add_option("--at-q", moment_args.at_q, "specialize q to a rational number");
  moment->add_option("--format", moment_args.format, "text | json | latex")->check(formats)->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare closed forms against oracles over a grid");
  std::vector<std::string> suite_names{"all"};
  for (Suite s : all_suites()) suite_names.push_back(to_string(s));
  verify->add_option("--suite", verify_args.suite, "all | duality | ... | truncation")
      ->check(CLI::IsMember(suite_names))
      ->capture_default_str();
  verify->add_option("--max-weight", verify_args.bounds.max_weight, "largest partition weight")->capture_default_str();
  verify->add_option("--max-vars", verify_args.bounds.max_vars, "largest N")->capture_default_str();
  verify->add_option("--max-n", verify_args.bounds.max_n, "largest univariate degree")->capture_default_str();
  verify->add_option("--max-m", verify_args.bounds.max_m, "largest m")->capture_default_str();
  verify->add_option("--max-s", verify_args.bounds.max_s, "largest s")->capture_default_str();
  verify->add_option("--report", verify_args.report, "write the JSON report here");
  verify->add_option("--format", verify_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "q = 1 genus expansion table");
  table->add_flag("--harer-zagier", table_args.harer_zagier, "one-face map counts by genus");
  table->add_option("--max-m", table_args.max_m, "largest m (at most 6)")->capture_default_str();
  table->add_option("--format", table_args.format, "text | json | latex")->check(formats)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (moment->parsed()) {
      if (moment_args.schur.empty() && !moment_args.power_sum && moment_args.hermite_sq.empty()) {
        err << "error: moment needs one of --schur, --power-sum, --hermite-sq\n";
        return kUsage;
      }
      return run_moment(moment_args, out, err);
    }
    if (verify->parsed()) return run_verify(verify_args, out, err);
    if (table->parsed()) return run_table(table_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qgue::cli
