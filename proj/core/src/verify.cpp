#include "qgue/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qgue/closed_forms.hpp"
#include "qgue/gue.hpp"
#include "qgue/symschur.hpp"
#include "qgue/xpoly.hpp"

namespace qgue {

namespace {

struct SuiteName {
  Suite suite;
  const char* name;
};

constexpr SuiteName kSuiteNames[] = {
    {Suite::duality, "duality"},     {Suite::orthogonality, "orthogonality"}, {Suite::theorem1, "theorem1"},
    {Suite::theorem2, "theorem2"},   {Suite::theorem3, "theorem3"},           {Suite::theorem4, "theorem4"},
    {Suite::sigma, "sigma"},         {Suite::theorem5, "theorem5"},           {Suite::qhz, "qhz"},
    {Suite::truncation, "truncation"},
};

}  // namespace

std::string to_string(Suite s) {
  for (const auto& entry : kSuiteNames)
    if (entry.suite == s) return entry.name;
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (const auto& entry : kSuiteNames)
    if (name == entry.name) return entry.suite;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& entry : kSuiteNames) out.push_back(entry.suite);
  return out;
}

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::equal: return "equal";
    case PointStatus::discrepant: return "discrepant";
    case PointStatus::skipped: return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

void check_bound(bool ok, const std::string& flag, int value, const std::string& limit) {
  if (!ok) throw SizeError("--" + flag + " = " + std::to_string(value) + " is out of range (" + limit + ")");
}

void check_oracle(const std::string& flag, int weight, int n_vars) {
  check_bound(n_vars <= kOracleMaxVars, "max-vars", n_vars,
              "the brute-force oracle allows at most " + std::to_string(kOracleMaxVars) + " variables");
  const int degree = weight + n_vars * (n_vars - 1);
  check_bound(degree <= kOracleMaxDegree, flag, weight,
              "weight + N(N-1) = " + std::to_string(degree) + " exceeds the oracle degree limit " +
                  std::to_string(kOracleMaxDegree));
}

}  // namespace

void validate_bounds(Suite suite, const GridBounds& b) {
  check_bound(b.max_vars >= 1, "max-vars", b.max_vars, "must be at least 1");
  check_bound(b.max_weight >= 0, "max-weight", b.max_weight, "must be nonnegative");
  check_bound(b.max_n >= 0, "max-n", b.max_n, "must be nonnegative");
  check_bound(b.max_m >= 1 && b.max_m <= 8, "max-m", b.max_m, "1..8");
  check_bound(b.max_s >= 0 && b.max_s <= 8, "max-s", b.max_s, "0..8");
  switch (suite) {
    case Suite::duality: check_bound(b.max_n <= 60, "max-n", b.max_n, "duality supports up to 60"); break;
    case Suite::orthogonality: check_bound(b.max_n <= 30, "max-n", b.max_n, "orthogonality supports up to 30"); break;
    case Suite::truncation: check_bound(b.max_n <= 20, "max-n", b.max_n, "truncation supports up to 20"); break;
    case Suite::theorem1:
    case Suite::sigma: check_oracle("max-m", 2 * b.max_m, b.max_vars); break;
    case Suite::theorem2:
      check_bound(b.max_vars <= 12, "max-vars", b.max_vars, "theorem2 supports up to 12");
      check_bound(b.max_weight <= 30, "max-weight", b.max_weight, "theorem2 supports up to 30");
      break;
    case Suite::theorem3:
    case Suite::theorem4: check_oracle("max-weight", b.max_weight, b.max_vars); break;
    case Suite::theorem5:
    case Suite::qhz: break;
  }
}

// ---------------------------------------------------------------------------
// Classification and reports

VerificationPoint classify(std::vector<Param> params, const Scalar& closed, const Scalar& oracle) {
  VerificationPoint p;
  p.params = std::move(params);
  p.closed = closed;
  p.oracle = oracle;
  if (closed == oracle) {
    p.status = PointStatus::equal;
    return p;
  }
  p.status = PointStatus::discrepant;
  if (oracle.is_zero()) {
    p.note = "oracle value is zero; ratio undefined";
    return p;
  }
  p.ratio = closed / oracle;
  p.monomial = p.ratio->as_signed_q_power();
  return p;
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& p : points) {
    ++s.total;
    switch (p.status) {
      case PointStatus::equal: ++s.equal; break;
      case PointStatus::skipped: ++s.skipped; break;
      case PointStatus::discrepant:
        ++s.discrepant;
        if (p.monomial) ++s.monomial_ratios;
        else ++s.non_monomial;
        break;
    }
  }
  return s;
}

const VerificationPoint* VerificationReport::find(const std::vector<Param>& params) const {
  for (const auto& p : points) {
    bool all = true;
    for (const auto& want : params) {
      bool found = false;
      for (const auto& have : p.params) found = found || have == want;
      all = all && found;
    }
    if (all) return &p;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Task {
  std::vector<Param> params;
  std::function<std::pair<Scalar, Scalar>()> compute;  // (closed, oracle)
};

struct Identity {
  std::string name;
  std::vector<Param> grid;
  std::vector<Task> tasks;
};

VerificationPoint run_task(const Task& task) {
  try {
    auto [closed, oracle] = task.compute();
    return classify(task.params, closed, oracle);
  } catch (const DegenerateDenominator& e) {
    VerificationPoint p;
    p.params = task.params;
    p.status = PointStatus::skipped;
    p.note = e.what();
    return p;
  }
}

std::vector<VerificationPoint> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<VerificationPoint> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        out[i] = run_task(tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Scalar oracle_schur(const Partition& kappa, int n_vars) {
  if (kappa.length() > n_vars) return Scalar();  // s_kappa vanishes in N variables
  return integrate_schur(kappa, n_vars, Method::oracle);
}

// s_{(a, 1^{w-a})} for 1 <= a <= w, else the zero polynomial.
std::optional<Partition> hook_with_first_part(int first, int weight) {
  if (first < 1 || first > weight) return std::nullopt;
  return Partition::hook(first - 1, weight - first);
}

std::vector<Identity> duality_identities(const GridBounds& b) {
  Identity id{"duality", {{"max_n", b.max_n}}, {}};
  for (Base base : {Base::plain, Base::squared}) {
    for (int d = 0; d <= b.max_n; ++d) {
      id.tasks.push_back({{{"base", std::string(base == Base::plain ? "q" : "q^2")}, {"degree", d}}, [base, d] {
                            Scalar sum;
                            for (int j = 0; j <= d; ++j) {
                              Scalar term = series_coefficient(j, Series::e, base) *
                                            series_coefficient(d - j, Series::E, base);
                              sum += (d - j) % 2 == 0 ? term : -term;
                            }
                            return std::make_pair(sum, Scalar(d == 0 ? 1 : 0));
                          }});
    }
  }
  return {id};
}

std::vector<Identity> orthogonality_identities(const GridBounds& b) {
  auto hermites = std::make_shared<std::vector<XPoly>>();
  for (int n = 0; n <= b.max_n; ++n) hermites->push_back(hermite(n));
  Identity id{"orthogonality", {{"max_n", b.max_n}}, {}};
  for (int n = 0; n <= b.max_n; ++n) {
    for (int m = 0; m <= b.max_n; ++m) {
      id.tasks.push_back({{{"n", n}, {"m", m}}, [hermites, n, m] {
                            Scalar closed = n == m ? Scalar::q_power(n * (n - 1) / 2) * q_factorial(n) : Scalar();
                            const auto& h = *hermites;
                            Scalar oracle = functional_L(h[static_cast<std::size_t>(n)] * h[static_cast<std::size_t>(m)]);
                            return std::make_pair(closed, oracle);
                          }});
    }
  }
  return {id};
}

std::vector<Identity> theorem1_identities(const GridBounds& b) {
  std::vector<Param> grid{{"max_m", b.max_m}, {"max_vars", b.max_vars}};
  Identity schur{"theorem1", grid, {}};
  Identity definitional{"theorem1-definitional", grid, {}};
  for (int m = 1; m <= b.max_m; ++m) {
    for (int n = 1; n <= b.max_vars; ++n) {
      std::vector<Param> params{{"m", m}, {"N", n}};
      schur.tasks.push_back({params, [m, n] {
                               return std::make_pair(level_density_moment(XPoly::monomial(2 * m), n),
                                                     integrate_symmetric(to_schur_vector(hook_decomposition(m, n), n)));
                             }});
      definitional.tasks.push_back({params, [m, n] {
                                      return std::make_pair(level_density_moment(XPoly::monomial(2 * m), n),
                                                            integrate_power_sum(2 * m, n, Method::oracle));
                                    }});
    }
  }
  return {schur, definitional};
}

std::vector<Identity> theorem2_identities(const GridBounds& b) {
  Identity id{"theorem2", {{"max_weight", b.max_weight}, {"max_vars", b.max_vars}}, {}};
  for (int n = 1; n <= b.max_vars; ++n)
    for (int i = 0; i <= n - 1; ++i)
      for (int ell = 0; ell + 1 + i <= b.max_weight; ++ell)
        id.tasks.push_back({{{"N", n}, {"l", ell}, {"i", i}}, [n, ell, i] {
                              return std::make_pair(hook_value_from_truncation(n, ell, i),
                                                    sigma_at_zero(Partition::hook(ell, i), n));
                            }});
  return {id};
}

std::vector<Identity> theorem3_identities(const GridBounds& b) {
  Identity id{"theorem3", {{"max_weight", b.max_weight}, {"max_vars", b.max_vars}}, {}};
  for (int n = 1; n <= b.max_vars; ++n)
    for (int w = 0; w <= b.max_weight; ++w)
      for (const Partition& kappa : partitions_of(w, n))
        id.tasks.push_back({{{"kappa", kappa.to_string()}, {"N", n}}, [kappa, n] {
                              return std::make_pair(integrate_schur(kappa, n, Method::fast),
                                                    integrate_schur(kappa, n, Method::oracle));
                            }});
  return {id};
}

std::vector<Identity> theorem4_identities(const GridBounds& b) {
  Identity id{"theorem4", {{"max_weight", b.max_weight}, {"max_vars", b.max_vars}}, {}};
  for (int m = 1; 2 * m <= b.max_weight; ++m)
    for (int ell = 0; ell <= 2 * m - 1; ++ell)
      for (int n = 1; n <= b.max_vars; ++n)
        id.tasks.push_back({{{"m", m}, {"l", ell}, {"N", n}}, [m, ell, n] {
                              return std::make_pair(hook_moment_closed_form(ell, m, n),
                                                    oracle_schur(Partition::hook(ell, 2 * m - ell - 1), n));
                            }});
  return {id};
}

std::vector<Identity> sigma_identities(const GridBounds& b) {
  std::vector<Param> grid{{"max_m", b.max_m}, {"max_vars", b.max_vars}};
  Identity sigma{"sigma", grid, {}};
  Identity hooks{"sigma-hooks", grid, {}};
  Identity from_hooks{"sigma-from-theorem4", grid, {}};
  Identity step{"sigma-step", grid, {}};
  Identity p2m{"p2m", grid, {}};
  for (int m = 1; m <= b.max_m; ++m) {
    for (int n = 1; n <= b.max_vars; ++n) {
      for (int t = 0; t <= m; ++t) {
        std::vector<Param> params{{"m", m}, {"t", t}, {"N", n}};
        // sigma_{m,t} = s_{(2t,1^{2m-2t})} - s_{(2t+1,1^{2m-2t-1})}
        sigma.tasks.push_back({params, [m, t, n] {
                                 Scalar oracle;
                                 if (auto mu1 = hook_with_first_part(2 * t, 2 * m)) oracle += oracle_schur(*mu1, n);
                                 if (auto mu2 = hook_with_first_part(2 * t + 1, 2 * m)) oracle -= oracle_schur(*mu2, n);
                                 return std::make_pair(sigma_closed_form(m, t, n), oracle);
                               }});
        // the hooks of arm 2t and 2t+1, which the closed form sums over
        hooks.tasks.push_back({params, [m, t, n] {
                                 Scalar oracle;
                                 if (auto mu1 = hook_with_first_part(2 * t + 1, 2 * m)) oracle += oracle_schur(*mu1, n);
                                 if (auto mu2 = hook_with_first_part(2 * t + 2, 2 * m)) oracle -= oracle_schur(*mu2, n);
                                 return std::make_pair(sigma_closed_form(m, t, n), oracle);
                               }});
        from_hooks.tasks.push_back({params, [m, t, n] {
                                      auto printed = [&](int ell) {
                                        return ell <= 2 * m - 1 ? hook_moment_closed_form(ell, m, n) : Scalar();
                                      };
                                      return std::make_pair(sigma_closed_form(m, t, n), printed(2 * t) - printed(2 * t + 1));
                                    }});
        step.tasks.push_back({params, [m, t, n] {
                                return std::make_pair(sigma_closed_form(m, t, n), sigma_difference_form(m, t, n));
                              }});
      }
      p2m.tasks.push_back({{{"m", m}, {"N", n}}, [m, n] {
                             return std::make_pair(p2m_closed_form(m, n), integrate_power_sum(2 * m, n, Method::oracle));
                           }});
    }
  }
  return {sigma, hooks, from_hooks, step, p2m};
}

std::vector<Identity> theorem5_identities(const GridBounds& b) {
  std::vector<Param> grid{{"max_m", b.max_m}, {"max_s", b.max_s}};
  Identity printed{"theorem5", grid, {}};
  Identity shifted{"theorem5-alt-normalization", grid, {}};
  for (int m = 1; m <= b.max_m; ++m) {
    for (int s = 0; s <= b.max_s; ++s) {
      std::vector<Param> params{{"m", m}, {"s", s}};
      printed.tasks.push_back({params, [m, s] {
                                 return std::make_pair(hermite_square_closed_form(m, s),
                                                       hermite_squared_moment(m, s) / hermite_square_printed_normalization(s));
                               }});
      shifted.tasks.push_back({params, [m, s] {
                                 return std::make_pair(hermite_square_closed_form(m, s),
                                                       hermite_squared_moment(m, s) / q_harer_zagier_normalization(s));
                               }});
    }
  }
  return {printed, shifted};
}

std::vector<Identity> qhz_identities(const GridBounds& b) {
  Identity id{"qhz", {{"max_m", b.max_m}, {"max_s", b.max_s}}, {}};
  for (int m = 1; m <= b.max_m; ++m)
    for (int s = 0; s <= b.max_s; ++s)
      id.tasks.push_back({{{"m", m}, {"s", s}}, [m, s] {
                            return std::make_pair(q_harer_zagier_rhs(m, s),
                                                  hermite_squared_moment(m, s) / q_harer_zagier_normalization(s));
                          }});
  return {id};
}

std::vector<Identity> truncation_identities(const GridBounds& b) {
  Identity expansion{"truncation", {{"max_n", b.max_n}}, {}};
  for (int n = 1; n <= b.max_n; ++n) {
    for (int ell = 1; n + ell <= b.max_n; ++ell) {
      // one task per (N, l, j); the expansion is cheap enough to recompute
      for (int j = n + ell; j >= 0; j -= 2) {
        expansion.tasks.push_back({{{"N", n}, {"l", ell}, {"j", j}}, [n, ell, j] {
                                     const auto both = truncated_in_shadow_basis(n, ell);
                                     auto at = [j](const DegreeMap& m) {
                                       auto it = m.find(j);
                                       return it == m.end() ? Scalar() : it->second;
                                     };
                                     return std::make_pair(at(both.closed_form), at(both.direct));
                                   }});
      }
    }
  }
  Identity partial_sum{"qbinomial-sum", {{"max_n", b.max_n}}, {}};
  for (int n = 1; n <= b.max_n; ++n)
    for (int s = 0; s <= n; ++s)
      partial_sum.tasks.push_back({{{"n", n}, {"s", s}}, [n, s] {
                                     return std::make_pair(q_binomial_partial_sum_printed_rhs(n, s),
                                                           q_binomial_partial_sum(n, s));
                                   }});
  return {expansion, partial_sum};
}

std::vector<Identity> identities_for(Suite suite, const GridBounds& b) {
  switch (suite) {
    case Suite::duality: return duality_identities(b);
    case Suite::orthogonality: return orthogonality_identities(b);
    case Suite::theorem1: return theorem1_identities(b);
    case Suite::theorem2: return theorem2_identities(b);
    case Suite::theorem3: return theorem3_identities(b);
    case Suite::theorem4: return theorem4_identities(b);
    case Suite::sigma: return sigma_identities(b);
    case Suite::theorem5: return theorem5_identities(b);
    case Suite::qhz: return qhz_identities(b);
    case Suite::truncation: return truncation_identities(b);
  }
  throw std::logic_error("unknown suite");
}

}  // namespace

std::vector<VerificationReport> verify_suite(Suite suite, const GridBounds& bounds, int threads) {
  validate_bounds(suite, bounds);
  std::vector<VerificationReport> reports;
  for (auto& id : identities_for(suite, bounds)) {
    VerificationReport r;
    r.identity = id.name;
    r.grid = id.grid;
    r.points = run_tasks(id.tasks, threads);
    reports.push_back(std::move(r));
  }
  return reports;
}

int default_thread_count() {
  if (const char* env = std::getenv("QGUE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using ojson = nlohmann::ordered_json;

ojson params_json(const std::vector<Param>& params) {
  ojson j = ojson::object();
  for (const auto& p : params) std::visit([&](const auto& v) { j[p.name] = v; }, p.value);
  return j;
}

ojson summary_json(const ReportSummary& s) {
  ojson j;
  j["total"] = s.total;
  j["equal"] = s.equal;
  j["discrepant"] = s.discrepant;
  j["skipped"] = s.skipped;
  j["monomial_ratios"] = s.monomial_ratios;
  j["non_monomial_ratios"] = s.non_monomial;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ojson doc;
  doc["reports"] = ojson::array();
  ReportSummary total;
  for (const auto& r : reports) {
    ojson jr;
    jr["identity"] = r.identity;
    jr["grid"] = params_json(r.grid);
    jr["points"] = ojson::array();
    for (const auto& p : r.points) {
      ojson jp;
      jp["params"] = params_json(p.params);
      jp["status"] = to_string(p.status);
      if (p.closed) jp["closed"] = p.closed->to_string();
      if (p.oracle) jp["oracle"] = p.oracle->to_string();
      if (p.ratio) jp["ratio"] = p.ratio->to_string();
      if (p.monomial) {
        jp["sign"] = p.monomial->sign;
        jp["qpower"] = p.monomial->power;
      }
      if (!p.note.empty()) jp["note"] = p.note;
      jr["points"].push_back(std::move(jp));
    }
    const ReportSummary s = r.summary();
    jr["summary"] = summary_json(s);
    total.total += s.total;
    total.equal += s.equal;
    total.discrepant += s.discrepant;
    total.skipped += s.skipped;
    total.monomial_ratios += s.monomial_ratios;
    total.non_monomial += s.non_monomial;
    doc["reports"].push_back(std::move(jr));
  }
  doc["summary"] = summary_json(total);
  return doc.dump(2) + "\n";
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "identity" << std::right << std::setw(8) << "points" << std::setw(8) << "equal"
     << std::setw(12) << "discrepant" << std::setw(9) << "skipped" << std::setw(14) << "non-monomial" << "\n";
  for (const auto& r : reports) {
    const ReportSummary s = r.summary();
    os << std::left << std::setw(28) << r.identity << std::right << std::setw(8) << s.total << std::setw(8) << s.equal
       << std::setw(12) << s.discrepant << std::setw(9) << s.skipped << std::setw(14) << s.non_monomial << "\n";
  }
  return os.str();
}

}  // namespace qgue
