// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fractal/cli.hpp"
#include "fractal/io.hpp"
#include "fractal/measure.hpp"
#include "fractal/operators.hpp"
#include "fractal/spectral.hpp"
#include "fractal/ssm.hpp"
#include "fractal/verify.hpp"

using namespace fractal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_seconds <= 0.0 || secs < limit_seconds;
  const bool ok = o.passed && in_time;
  failures += !ok;
  char timing[64];
  if (limit_seconds > 0.0) {
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
  }
  std::printf("%s %2d %-26s %-12s %s%s\n", ok ? "PASS" : "FAIL", id, name, timing, o.summary.c_str(),
              in_time ? "" : " (over time limit)");
  std::fflush(stdout);
}

Outcome from(const OracleReport& r, const std::string& label = "max_dev") {
  return {r.passed, label + "=" + sci(r.max_deviation) + " tol=" + sci(r.tolerance) +
                        (r.note.empty() ? "" : " [" + r.note + "]")};
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fractal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

const std::vector<double> kDecile = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

int main() {
  criterion(1, "diagonal invariance", 60.0, [] {
    const OracleReport r = check_diagonal_invariance(kDecile, 64);
    double exact = 0.0, nodal = 0.0;
    for (const auto& row : r.detail) {
      exact = std::max(exact, row[1]);
      nodal = std::max(nodal, row[2]);
    }
    return Outcome{r.passed, "high-precision dev=" + sci(exact) + " tol=1e-10 (quadrature dev=" + sci(nodal) + ", not gated)"};
  });

  criterion(2, "LegS recovery", 10.0, [] {
    const OracleReport a = check_legs_recovery(64);
    const OracleReport b = check_legs_input(64);
    return Outcome{a.passed && b.passed, "A dev=" + sci(a.max_deviation) + " tol=1e-10, B dev=" +
                                             sci(b.max_deviation) + " tol=1e-12"};
  });

  criterion(3, "printed N=5 matrices", 1.0, [] {
    const OracleReport a = check_printed_matrix(0.0);
    const OracleReport b = check_printed_matrix(0.5);
    std::string worst;
    for (const OracleReport* r : {&a, &b}) {
      for (const auto& row : r->detail) {
        if (row[4] > r->tolerance) {
          char buf[96];
          std::snprintf(buf, sizeof buf, " %s A%d%d=%.7f printed %.2f;", r == &a ? "a=0" : "a=0.5",
                        static_cast<int>(row[0]), static_cast<int>(row[1]), row[2], row[3]);
          worst += buf;
        }
      }
    }
    return Outcome{a.passed && b.passed, "dev(0)=" + sci(a.max_deviation) + " dev(0.5)=" +
                                             sci(b.max_deviation) + " tol=5e-3" + worst};
  });

  criterion(4, "eigenvalue invariance", 30.0, [] {
    const int sizes[] = {8, 16, 32, 64};
    return from(check_eigenvalue_invariance(kDecile, sizes));
  });

  criterion(5, "condition numbers", 60.0, [] {
    double worst = 1.0;
    int worst_n = 0;
    double worst_a = 0.0;
    bool within = true;
    std::vector<std::vector<double>> kappa(4, std::vector<double>(6));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 6; ++j) {
        const int N = kPrintedConditionSizes[i];
        const double a = kPrintedConditionAlphas[j];
        kappa[i][j] = condition_number(eig_triangular(build_A(a, N)).V);
        const double ratio = std::max(kappa[i][j] / kPrintedConditionNumbers[i][j],
                                      kPrintedConditionNumbers[i][j] / kappa[i][j]);
        within = within && ratio <= 10.0;
        if (ratio > worst) {
          worst = ratio;
          worst_n = N;
          worst_a = a;
        }
      }
    }
    int violations = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (i > 0) violations += !(kappa[i][j] >= kappa[i - 1][j]);
        if (j > 0) violations += !(kappa[i][j] >= kappa[i][j - 1]);
      }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "worst ratio=%.3e at N=%d a=%.1f (limit 10), kappa(8,0)=%.3e printed 1.2e1, "
                  "monotonicity violations=%d",
                  worst, worst_n, worst_a, kappa[0][0], violations);
    return Outcome{within && violations == 0, buf};
  });

  criterion(6, "measure normalization", 0.0, [] {
    std::vector<double> grid;
    for (int i = 0; i <= 19; ++i) grid.push_back(0.05 * i);
    return from(check_measure_normalization(grid));
  });

  criterion(7, "memory CDF", 0.0, [] {
    const double v = mass_oldest(0.5, 0.1);
    const double dev = std::abs(v - (1.0 - std::pow(0.9, 0.5)));
    char buf[96];
    std::snprintf(buf, sizeof buf, "mass_oldest(0.5,0.1)=%.6f (%.1f%%) dev=%s tol=1e-12", v, 100 * v,
                  sci(dev).c_str());
    return Outcome{dev <= 1e-12 && std::abs(100 * v - 5.1) < 0.05, buf};
  });

  criterion(8, "scale invariance", 0.0, [] {
    return from(check_scale_invariance(kDecile, 16, 20, 2024));
  });

  criterion(9, "ODE consistency", 0.0, [] {
    const double alphas[] = {0.0, 0.5, 0.9};
    const OracleReport dev = check_ode_consistency(alphas, 8);
    const OracleReport conv = check_ode_convergence(alphas, 8);
    std::string per;
    for (std::size_t i = 0; i < dev.detail.size(); ++i) {
      char buf[96];
      std::snprintf(buf, sizeof buf, " a=%.1f:res=%.2e,ratio=%.2f;", dev.detail[i][0], dev.detail[i][1],
                    conv.detail[i][3]);
      per += buf;
    }
    return Outcome{dev.passed && conv.passed, "tol=1e-6 ratio in [3.5,4.5]" + per};
  });

  criterion(10, "off-diagonal monotonicity", 0.0, [] {
    const OracleReport m = check_offdiag_monotonicity(kDecile, 16);
    const OracleReport g = check_gap_amplification(kDecile, 16);
    return Outcome{m.passed && g.passed, "monotonicity violations=" + std::to_string(int(m.max_deviation)) +
                                             " growth-ordering violations=" +
                                             std::to_string(int(g.max_deviation))};
  });

  criterion(11, "scan equivalence", 0.0, [] {
    const int lengths[] = {1, 64, 1024, 8192, 65536};
    const OracleReport r = check_scan_equivalence(50, 64, lengths, 99);
    std::ostringstream out, err;
    const char* argv[] = {"fractal", "--json", "bench", "--n", "64", "--len", "65536", "--repeat", "1"};
    const int code = run_cli(9, argv, out, err);
    const io::json bench = io::json::parse(out.str());
    char buf[160];
    std::snprintf(buf, sizeof buf, " bench: seq %.4fs scan %.4fs speedup %.2f dev %.2e",
                  bench["sequential_seconds"].get<double>(), bench["scan_seconds"].get<double>(),
                  bench["speedup"].get<double>(), bench["max_relative_deviation"].get<double>());
    const Outcome o = from(r, "max_rel_dev");
    return Outcome{o.passed && code == 0, o.summary + buf};
  });

  criterion(12, "ZOH limit", 0.0, [] {
    const OracleReport r = check_zoh_limit(kDecile, 16);
    double modulus = 0.0;  // max |lambda_bar| over states, steps and alphas
    for (double a : {0.0, 0.5, 0.9}) {
      const SpectralInit init = spectral_init(a, 64, 1);
      for (double delta : {1e-12, 1e-6, 1e-3, 1e-1, 1.0, 100.0}) {
        modulus = std::max(modulus, zoh_discretize(init, delta).lambda_bar.cwiseAbs().maxCoeff());
      }
    }
    const Outcome o = from(r, "max_rel_dev@1e-6");
    return Outcome{o.passed && modulus < 1.0, o.summary + " min(1-|lambda_bar|)=" + sci(1.0 - modulus)};
  });

  criterion(13, "end-to-end determinism", 0.0, [] {
    const fs::path dir = fs::temp_directory_path() / "fractal_acceptance";
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };
    bool ok = true;
    ok &= cli({"matrix", "--alpha", "0.5", "--n", "32", "--out", p("op1.json")}) == 0;
    ok &= cli({"matrix", "--alpha", "0.5", "--n", "32", "--out", p("op2.json")}) == 0;
    ok &= cli({"--seed", "5", "init-model", "--k", "4", "--block-state", "8", "--input-width", "2",
               "--output-width", "2", "--out", p("model.json")}) == 0;
    std::string csv = "t,u_0,u_1\n";
    for (int k = 0; k < 512; ++k) {
      csv += std::to_string(k) + "," + io::format_double(std::sin(0.05 * k)) + "," +
             io::format_double(std::cos(0.11 * k)) + "\n";
    }
    io::write_file(p("in.csv"), csv);
    ok &= cli({"run", "--model", p("model.json"), "--input", p("in.csv"), "--out", p("out1.csv")}) == 0;
    ok &= cli({"run", "--model", p("model.json"), "--input", p("in.csv"), "--out", p("out2.csv")}) == 0;
    const bool same_matrix = io::read_file(p("op1.json")) == io::read_file(p("op2.json"));
    const bool same_run = io::read_file(p("out1.csv")) == io::read_file(p("out2.csv"));
    fs::remove_all(dir);
    return Outcome{ok && same_matrix && same_run, std::string("matrix identical=") +
                                                      (same_matrix ? "yes" : "no") +
                                                      " run identical=" + (same_run ? "yes" : "no")};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
