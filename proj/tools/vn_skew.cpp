// vn-skew: exact cumulants and skewness of von Neumann entanglement entropy,
// derivation-chain verification, Monte Carlo simulation, and figure data.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 numerical failure.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vnskew/cumulants.hpp"
#include "vnskew/density.hpp"
#include "vnskew/ensemble.hpp"
#include "vnskew/identities.hpp"
#include "vnskew/integrals.hpp"
#include "vnskew/polygamma.hpp"
#include "vnskew/schrodinger.hpp"

using json = nlohmann::json;
using namespace vnskew;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitNumerical = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// cumulants

int cmd_cumulants(long m, long n, const std::string& format,
                  const std::string& output) {
  Dims d(m, n);
  CumulantSet s = cumulant_set(d);
  std::ostringstream out;
  if (format == "json") {
    json j;
    j["m"] = m;
    j["n"] = n;
    j["kappa1"] = {{"exact", s.kappa1.str()}, {"float", s.kappa1.to_double()}};
    j["kappa2"] = {{"exact", s.kappa2.str()}, {"float", s.kappa2.to_double()}};
    j["kappa3"] = {{"exact", s.kappa3.str()}, {"float", s.kappa3.to_double()}};
    if (s.skewness_float) {
      j["skewness"] = *s.skewness_float;
    } else {
      j["skewness_note"] = "omitted: m = 1 has zero variance";
    }
    out << j.dump(2) << "\n";
  } else {
    out << "name,exact,float\n";
    out << "kappa1," << s.kappa1.str() << "," << fmt(s.kappa1.to_double()) << "\n";
    out << "kappa2," << s.kappa2.str() << "," << fmt(s.kappa2.to_double()) << "\n";
    out << "kappa3," << s.kappa3.str() << "," << fmt(s.kappa3.to_double()) << "\n";
    if (s.skewness_float) {
      out << "skewness,," << fmt(*s.skewness_float) << "\n";
    } else {
      out << "# skewness omitted: m = 1 has zero variance\n";
    }
  }
  write_output(output, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string id;
  std::string grid;
  long pass = 0;
  long fail = 0;
  std::optional<IdentityReport::Counterexample> counterexample;
};

Check from_report(const IdentityReport& r) {
  return {r.identity_id, r.grid, r.pass, r.fail, r.counterexample};
}

Check check_grid(const std::string& id, const std::string& grid_desc, long max_m,
                 long max_n, bool strict,
                 const std::function<std::pair<PolyValue, PolyValue>(long, long)>& eval) {
  std::vector<std::pair<long, long>> grid;
  for (long m = strict ? 2 : 1; m <= max_m; ++m) {
    for (long n = m + (strict ? 1 : 0); n <= max_n; ++n) grid.emplace_back(m, n);
  }
  return from_report(verify_grid(id, grid_desc, grid, eval));
}

std::vector<Check> verify_identities_scope(long max_n, int threads) {
  const auto& ids = identity_ids();
  std::vector<Check> checks(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      checks[i] = from_report(verify_identity(ids[i], max_n, 8));
    }
  };
  int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return checks;
}

std::vector<Check> verify_integrals_scope(long max_m, long max_n) {
  std::vector<Check> checks;
  std::ostringstream gd;
  gd << "2 <= m < n <= " << max_n;
  checks.push_back(check_grid("closed_IA = integral_IA", gd.str(), max_m, max_n, true,
                              [](long m, long n) {
                                Dims d(m, n);
                                return std::make_pair(closed_IA(d), integral_IA(d));
                              }));
  checks.push_back(check_grid("closed_IB = integral_IB", gd.str(), max_m, max_n, true,
                              [](long m, long n) {
                                Dims d(m, n);
                                return std::make_pair(closed_IB(d), integral_IB(d));
                              }));
  checks.push_back(check_grid("closed_IC = integral_IC", gd.str(), max_m, max_n, true,
                              [](long m, long n) {
                                Dims d(m, n);
                                return std::make_pair(closed_IC(d), integral_IC(d));
                              }));
  // Laurent-limit route against the printed block formulas; poleemission is
  // asserted inside limit_schrodinger_log itself.
  long cap = std::min<long>(max_n, 10);
  std::ostringstream gd2;
  gd2 << "1 <= m <= n <= " << cap << " over all IAI/IBI/ICI blocks";
  std::vector<std::pair<long, long>> grid;
  for (long m = 1; m <= cap; ++m) {
    for (long n = m; n <= cap; ++n) grid.emplace_back(m, n);
  }
  checks.push_back(from_report(verify_grid(
      "block formulas = Laurent limit", gd2.str(), grid, [](long m, long n) {
        Dims d(m, n);
        long a = n - m;
        auto [b1, b2] = ias_blocks(d);
        PolyValue lhs = b1 - b2;
        PolyValue rhs = limit_schrodinger_log({a + 3, a + 1, a + 1, m - 1, m - 1, 3}, 3) -
                        limit_schrodinger_log({a + 3, a + 1, a + 1, m - 2, m, 3}, 3);
        for (long k = 0; k < m && lhs == rhs; ++k) {
          lhs += ibs_blocks(d, IbsBlock::IBS1, k) + ibs_blocks(d, IbsBlock::IBS2, k);
          rhs += limit_schrodinger_log({a + 1, a, a, k, k, 1}, 1) +
                 limit_schrodinger_log({a + 2, a, a, k, k, 2}, 2);
        }
        for (long k = 0; k <= m - 2 && lhs == rhs; ++k) {
          for (long j = 0; j <= m - k - 2; ++j) {
            PolyValue ab = (k == 0) ? ibs_blocks(d, IbsBlock::IBS3, j)
                                    : ibs_blocks(d, IbsBlock::IBS4, j, k);
            PolyValue bb = (k == 0)   ? ibs_blocks(d, IbsBlock::IBS5, j)
                           : (k == 1) ? ibs_blocks(d, IbsBlock::IBS6, j)
                                      : ibs_blocks(d, IbsBlock::IBS7, j, k);
            lhs += ab + bb;
            rhs += limit_schrodinger_log({a + 1, a, a, j, k + j + 1, 1}, 1) +
                   limit_schrodinger_log({a + 2, a, a, j, k + j + 1, 2}, 2);
          }
        }
        return std::make_pair(lhs, rhs);
      })));
  return checks;
}

std::vector<Check> verify_kappa3_scope(long max_m, long max_n) {
  std::vector<Check> checks;
  std::ostringstream gd;
  gd << "1 <= m <= n <= " << max_n;
  checks.push_back(check_grid(
      "I_A - 3 I_B + 2 I_C = kappa3T", gd.str(), max_m, max_n, false,
      [](long m, long n) {
        Dims d(m, n);
        return std::make_pair(kappa3T_from_integrals(d), t_cumulants(d).kappa3T);
      }));
  checks.push_back(check_grid("kappa3 via T-cumulants = kappa3", gd.str(), max_m,
                              max_n, false, [](long m, long n) {
                                Dims d(m, n);
                                return std::make_pair(kappa3_via_T(d), kappa3(d));
                              }));
  std::vector<std::pair<long, long>> degenerate;
  for (long n = 1; n <= 50; ++n) degenerate.emplace_back(1, n);
  checks.push_back(from_report(verify_grid(
      "m = 1 cumulants vanish", "m = 1, n <= 50", degenerate, [](long m, long n) {
        Dims d(m, n);
        PolyValue all = kappa1(d) + kappa2(d) + kappa3(d);
        return std::make_pair(all, PolyValue());
      })));
  return checks;
}

int cmd_verify(const std::string& scope, std::optional<long> max_m,
               std::optional<long> max_n, const std::string& output, int threads) {
  // Scope defaults sized so a full run completes in seconds: identities 25,
  // integrals 15, kappa3 20.
  std::vector<Check> checks;
  if (scope == "identities" || scope == "all") {
    auto ids = verify_identities_scope(max_n.value_or(25), threads);
    checks.insert(checks.end(), ids.begin(), ids.end());
  }
  if (scope == "integrals" || scope == "all") {
    long cap = max_n.value_or(15);
    auto ic = verify_integrals_scope(std::min(max_m.value_or(cap), cap), cap);
    checks.insert(checks.end(), ic.begin(), ic.end());
  }
  if (scope == "kappa3" || scope == "all") {
    long cap = max_n.value_or(20);
    auto kc = verify_kappa3_scope(max_m.value_or(cap), cap);
    checks.insert(checks.end(), kc.begin(), kc.end());
  }

  long total_fail = 0;
  json j;
  j["scope"] = scope;
  if (max_m) j["max_m"] = *max_m;
  if (max_n) j["max_n"] = *max_n;
  j["checks"] = json::array();
  for (const Check& c : checks) {
    json jc;
    jc["id"] = c.id;
    jc["grid"] = c.grid;
    jc["pass"] = c.pass;
    jc["fail"] = c.fail;
    if (c.counterexample) {
      jc["counterexample"] = {{"params", c.counterexample->params},
                              {"lhs", c.counterexample->lhs},
                              {"rhs", c.counterexample->rhs}};
    }
    j["checks"].push_back(jc);
    total_fail += c.fail;
    std::cerr << (c.fail == 0 ? "PASS " : "FAIL ") << c.id << " [" << c.grid
              << "]: " << c.pass << " pass, " << c.fail << " fail\n";
  }
  j["total_fail"] = total_fail;
  write_output(output, j.dump(2) + "\n");
  return total_fail == 0 ? 0 : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(long m, long n, long samples, std::uint64_t seed,
                 const std::string& output, int threads) {
  Dims d(m, n);
  std::vector<double> collected;
  SampleStats stats =
      run_batch(d, samples, seed, threads, output.empty() ? nullptr : &collected);
  CumulantEstimates est = empirical_cumulants(stats);
  CumulantSet closed = cumulant_set(d);

  std::ostringstream out;
  out << "m,n,samples,seed\n"
      << m << "," << n << "," << samples << "," << seed << "\n";
  out << "statistic,empirical,closed_form,stderr,z\n";
  auto row = [&](const char* name, double emp, double exact, double se) {
    out << name << "," << fmt(emp) << "," << fmt(exact) << ",";
    if (std::isnan(se)) {
      out << ",\n";
    } else {
      double z = se > 0 ? (emp - exact) / se : 0.0;
      out << fmt(se) << "," << fmt(z) << "\n";
    }
  };
  row("kappa1", est.k1, closed.kappa1.to_double(), est.se1);
  row("kappa2", est.k2, closed.kappa2.to_double(), est.se2);
  row("kappa3", est.k3, closed.kappa3.to_double(), est.se3);
  out << "S_min," << fmt(stats.min_value()) << ",0,,\n";
  out << "S_max," << fmt(stats.max_value()) << "," << fmt(std::log(double(m)))
      << ",,\n";
  std::cout << out.str();

  if (!output.empty()) {
    std::ostringstream csv;
    csv << "sample_index,S\n";
    for (std::size_t i = 0; i < collected.size(); ++i) {
      csv << i << "," << fmt(collected[i]) << "\n";
    }
    write_output(output, csv.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(long m, long n, long samples, std::uint64_t seed,
                const std::string& output, int threads) {
  if (m < 2) {
    throw std::invalid_argument("density: requires m >= 2 (zero variance at m = 1)");
  }
  Dims d(m, n);
  CumulantSet closed = cumulant_set(d);
  std::vector<double> raw;
  run_batch(d, samples, seed, threads, &raw);
  std::vector<double> std_samples =
      standardize(raw, closed.kappa1.to_double(), closed.kappa2.to_double());
  DensityTable table =
      make_density_table(std_samples, *closed.skewness_float, default_grid());
  write_output(output, density_table_csv(table));
  double l1_gauss = l1_distance(table.grid, table.empirical, table.gaussian);
  double l1_gc = l1_distance(table.grid, table.empirical, table.gram_charlier);
  std::cerr << "L1(empirical, gaussian) = " << fmt(l1_gauss) << "\n"
            << "L1(empirical, gram_charlier) = " << fmt(l1_gc) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// scaling

int cmd_scaling(double c_ratio, const std::vector<long>& n_list, long samples,
                std::uint64_t seed, int threads) {
  std::ostringstream out;
  out << "n,m,kappa2,n2_kappa2,kappa3,n4_kappa3,gamma1,n_gamma1";
  if (samples > 0) out << ",empirical_kappa2,empirical_kappa3";
  out << "\n";
  for (long n : n_list) {
    double m_real = c_ratio * n;
    long m = std::lround(m_real);
    if (std::abs(m_real - m) > 1e-9 || m < 1) {
      throw std::invalid_argument("scaling: c * n must be a positive integer for n = " +
                                  std::to_string(n));
    }
    Dims d(m, n);
    double k2 = kappa2(d).to_double();
    double k3 = kappa3(d).to_double();
    double g1 = skewness(d);
    double dn = static_cast<double>(n);
    out << n << "," << m << "," << fmt(k2) << "," << fmt(dn * dn * k2) << ","
        << fmt(k3) << "," << fmt(dn * dn * dn * dn * k3) << "," << fmt(g1) << ","
        << fmt(dn * g1);
    if (samples > 0) {
      SampleStats stats = run_batch(d, samples, seed, threads);
      CumulantEstimates est = empirical_cumulants(stats);
      out << "," << fmt(est.k2) << "," << fmt(est.k3);
    }
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cumulants and skewness of von Neumann entanglement entropy"};
  app.require_subcommand(1);

  long m = 2, n = 2, samples = 100000, max_m = 20, max_n = 20;
  long scaling_samples = 0;
  std::uint64_t seed = 1;
  std::string format = "csv", output, scope = "all";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  double c_ratio = 0.5;
  std::vector<long> n_list{16, 32, 64};

  auto* cumulants_cmd = app.add_subcommand("cumulants", "Exact kappa_1..3 and skewness");
  cumulants_cmd->add_option("--m", m, "smaller subsystem dimension");
  cumulants_cmd->add_option("--n", n, "larger subsystem dimension");
  cumulants_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cumulants_cmd->add_option("--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Exact verification sweeps");
  verify_cmd->add_option("scope", scope)
      ->check(CLI::IsMember({"identities", "integrals", "kappa3", "all"}));
  auto* max_m_opt = verify_cmd->add_option("--max-m", max_m);
  auto* max_n_opt = verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--output", output);
  verify_cmd->add_option("--threads", threads);

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo entropy sampling");
  simulate_cmd->add_option("--m", m);
  simulate_cmd->add_option("--n", n);
  simulate_cmd->add_option("--samples", samples);
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_option("--output", output, "raw-sample CSV path");
  simulate_cmd->add_option("--threads", threads);

  auto* density_cmd =
      app.add_subcommand("density", "Figure-data CSV over the standard grid");
  density_cmd->add_option("--m", m);
  density_cmd->add_option("--n", n);
  density_cmd->add_option("--samples", samples);
  density_cmd->add_option("--seed", seed);
  density_cmd->add_option("--output", output);
  density_cmd->add_option("--threads", threads);

  auto* scaling_cmd =
      app.add_subcommand("scaling", "Closed-form scaling table along m/n = c");
  scaling_cmd->add_option("--c-ratio", c_ratio);
  scaling_cmd->add_option("--n-list", n_list)->delimiter(',');
  scaling_cmd->add_option("--samples", scaling_samples,
                          "adds empirical columns when > 0");
  scaling_cmd->add_option("--seed", seed);
  scaling_cmd->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadArgs;
  }

  try {
    if (cumulants_cmd->parsed()) return cmd_cumulants(m, n, format, output);
    if (verify_cmd->parsed()) {
      std::optional<long> om, on;
      if (max_m_opt->count() > 0) om = max_m;
      if (max_n_opt->count() > 0) on = max_n;
      return cmd_verify(scope, om, on, output, threads);
    }
    if (simulate_cmd->parsed()) return cmd_simulate(m, n, samples, seed, output, threads);
    if (density_cmd->parsed()) return cmd_density(m, n, samples, seed, output, threads);
    if (scaling_cmd->parsed()) {
      return cmd_scaling(c_ratio, n_list, scaling_samples, seed, threads);
    }
  } catch (const PoleResidueError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
