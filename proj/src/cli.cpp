#include "fractal/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <random>

#include "fractal/error.hpp"
#include "fractal/io.hpp"
#include "fractal/measure.hpp"
#include "fractal/operators.hpp"
#include "fractal/signal.hpp"
#include "fractal/spectral.hpp"
#include "fractal/specfun.hpp"
#include "fractal/ssm.hpp"
#include "fractal/verify.hpp"

namespace fractal {

namespace {

using io::json;

struct Globals {
  bool json_output = false;
  std::uint64_t seed = 0;
  int quad_order = 0;
};

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string cell = text.substr(pos, comma - pos);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("malformed ") + what + " entry '" + cell + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

int env_quad_order() {
  const char* env = std::getenv("FRACTAL_QUAD_ORDER");
  if (!env || !*env) return 0;
  int v = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("FRACTAL_QUAD_ORDER must be a non-negative integer");
  }
  return v;
}

OperatorOptions operator_options(const Globals& g, int order) {
  OperatorOptions o;
  o.order = order > 0 ? order : g.quad_order;
  return o;
}

// 53 random mantissa bits mapped to [-1, 1), independent of the standard library.
double symmetric_unit(std::mt19937_64& rng) {
  return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int report_outcome(std::ostream& out, const Globals& g, std::span<const OracleReport> reports) {
  if (g.json_output) {
    out << dump(io::reports_to_json(reports));
  } else {
    out << io::format_reports(reports);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional HiPPO operators, spectral initialization and diagonal SSM layers",
               "fractal"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::optional<int> quad_flag;
  app.add_flag("--json", g.json_output, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for randomized test signals and weights");
  app.add_option("--quad-order", quad_flag, "Quadrature order (overrides FRACTAL_QUAD_ORDER)")
      ->check(CLI::NonNegativeNumber);

  const CLI::Range state_range(1, kMaxStateDim);
  const CLI::Range at_least_one(1, std::numeric_limits<int>::max());

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Build A(alpha) and B(alpha) and write fractal-op/1 JSON");
  double m_alpha = 0.0;
  int m_n = 0, m_order = 0;
  std::string m_out;
  matrix->add_option("--alpha", m_alpha, "Singularity index in [0, 0.95]")->required();
  matrix->add_option("--n", m_n, "State size")->required()->check(state_range);
  matrix->add_option("--order", m_order, "Quadrature order (>= 2N)")->check(CLI::NonNegativeNumber);
  matrix->add_option("--out", m_out, "Output path (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the oracle suite over an alpha grid");
  std::string v_grid;
  int v_n = 8;
  verify->add_option("--alpha-grid", v_grid, "Comma-separated alphas in [0, 0.95]")->required();
  verify->add_option("--n", v_n, "Largest state size")->check(state_range);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and eigenvector conditioning of A(alpha)");
  double s_alpha = 0.0;
  int s_n = 0, s_u = 1;
  std::string s_out;
  spectrum->add_option("--alpha", s_alpha, "Singularity index")->required();
  spectrum->add_option("--n", s_n, "State size")->required()->check(state_range);
  spectrum->add_option("--u", s_u, "Input width of the spectral initialization")->check(at_least_one);
  spectrum->add_option("--out", s_out, "Write the fractal-spectral/1 initialization here");

  // measure
  auto* measure = app.add_subcommand("measure", "Measure density profiles as CSV");
  std::string me_alphas;
  int me_samples = 100;
  double me_t = 1.0;
  std::string me_out;
  measure->add_option("--alphas", me_alphas, "Comma-separated alphas")->required();
  measure->add_option("--samples", me_samples, "Grid points")->check(CLI::Range(2, 10000000));
  measure->add_option("--t", me_t, "Window length")->check(CLI::PositiveNumber);
  measure->add_option("--out", me_out, "Output CSV path (stdout when omitted)");

  // run
  auto* run = app.add_subcommand("run", "Run a gated filter-bank layer over an input CSV");
  std::string r_model, r_input, r_out, r_mode = "sequential";
  run->add_option("--model", r_model, "fractal-model/1 file")->required();
  run->add_option("--input", r_input, "Input CSV with header t,u_0,...")->required();
  run->add_option("--out", r_out, "Output CSV path (stdout when omitted)");
  run->add_option("--mode", r_mode, "sequential or scan")->check(CLI::IsMember({"sequential", "scan"}));

  // bench
  auto* bench = app.add_subcommand("bench", "Time sequential recurrence against the parallel scan");
  int b_n = 64, b_len = 4096, b_channels = 1, b_repeat = 3, b_chunks = 0;
  double b_alpha = 0.0, b_delta = kDefaultDelta;
  bench->add_option("--n", b_n, "State size")->check(state_range);
  bench->add_option("--len", b_len, "Sequence length")->check(at_least_one);
  bench->add_option("--channels", b_channels, "Input width")->check(at_least_one);
  bench->add_option("--repeat", b_repeat, "Timed repetitions")->check(at_least_one);
  bench->add_option("--chunks", b_chunks, "Scan chunks (0: thread count)")->check(CLI::NonNegativeNumber);
  bench->add_option("--alpha", b_alpha, "Singularity index of the benchmarked system");
  bench->add_option("--delta", b_delta, "ZOH step");

  // discretize
  auto* discretize = app.add_subcommand("discretize", "Zero-order-hold discretize a spectral initialization");
  std::string d_init, d_out;
  double d_delta = kDefaultDelta;
  discretize->add_option("--init", d_init, "fractal-spectral/1 file")->required();
  discretize->add_option("--delta", d_delta, "Step size");
  discretize->add_option("--out", d_out, "Output path (stdout when omitted)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Finite-difference check of the continuous dynamics");
  double o_alpha = 0.0, o_t = 3.0, o_h = 0.0, o_tol = 1e-6;
  int o_n = 8;
  std::string o_signal = "sin";
  oracle->add_option("--alpha", o_alpha, "Singularity index")->required();
  oracle->add_option("--n", o_n, "State size")->check(state_range);
  oracle->add_option("--t", o_t, "Evaluation time")->check(CLI::PositiveNumber);
  oracle->add_option("--step", o_h, "Central-difference step (default 1e-4 t)");
  oracle->add_option("--signal", o_signal, "const, sin, poly or square")
      ->check(CLI::IsMember({"const", "sin", "poly", "square"}));
  oracle->add_option("--tol", o_tol, "Pass tolerance")->check(CLI::PositiveNumber);

  // init-model
  auto* init_model = app.add_subcommand("init-model", "Write a randomly initialized fractal-model/1 file");
  int i_k = 1, i_block = 4, i_in = 1, i_outw = 1;
  std::string i_alphas, i_out;
  double i_delta = kDefaultDelta;
  init_model->add_option("--k", i_k, "Number of channels")->check(at_least_one);
  init_model->add_option("--block-state", i_block, "State size per channel")->check(state_range);
  init_model->add_option("--input-width", i_in, "Input width U")->check(at_least_one);
  init_model->add_option("--output-width", i_outw, "Output width M")->check(at_least_one);
  init_model->add_option("--alphas", i_alphas, "Comma-separated per-channel alphas");
  init_model->add_option("--delta", i_delta, "ZOH step for every channel");
  init_model->add_option("--out", i_out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.quad_order = quad_flag ? *quad_flag : env_quad_order();

    if (*matrix) {
      const HippoOperators op = build_operators(m_alpha, m_n, operator_options(g, m_order));
      emit(out, m_out, dump(io::operators_to_json(op)));
      return kExitOk;
    }

    if (*verify) {
      const std::vector<double> grid = parse_reals(v_grid, "alpha grid");
      for (double a : grid) require_alpha(a, kMaxConstructionAlpha, true);
      SuiteOptions options;
      options.seed = g.seed;
      options.quad_order = g.quad_order;
      const auto reports = run_full_suite(grid, v_n, options);
      return report_outcome(out, g, reports);
    }

    if (*spectrum) {
      SpectralOptions options;
      options.operators = operator_options(g, 0);
      const SpectralInit init = spectral_init(s_alpha, s_n, s_u, options);
      const TriangularEigen eig = eig_triangular(build_A(s_alpha, s_n, options.operators));
      if (!s_out.empty()) io::write_file(s_out, dump(io::spectral_to_json(init)));
      if (g.json_output) {
        std::vector<double> ev(eig.eigenvalues.begin(), eig.eigenvalues.end());
        out << dump({{"alpha", s_alpha}, {"n", s_n}, {"eigenvalues", ev}, {"cond_v", init.cond_V}});
      } else {
        out << "eigenvalues:";
        for (double v : eig.eigenvalues) out << ' ' << io::format_double(v);
        out << "\ncond(V): " << io::format_double(init.cond_V) << '\n';
      }
      return kExitOk;
    }

    if (*measure) {
      const std::vector<double> alphas = parse_reals(me_alphas, "alpha list");
      emit(out, me_out, io::table_to_csv(measure_profile(alphas, me_samples, me_t)));
      return kExitOk;
    }

    if (*run) {
      const io::Model model = io::model_from_json(json::parse(io::read_file(r_model)));
      const SequenceBatch u = io::parse_input_csv(io::read_file(r_input));
      const auto ssms = discretize_filter_bank(model.config, model.channels);
      const Execution mode = r_mode == "scan" ? Execution::Scan : Execution::Sequential;
      const SequenceBatch z = layer_forward(model.config, model.weights, ssms, u, mode);
      emit(out, r_out, io::output_to_csv(z));
      return kExitOk;
    }

    if (*bench) {
      const SpectralInit init = spectral_init(b_alpha, b_n, b_channels);
      const DiscreteDiagonalSSM ssm = zoh_discretize(init, b_delta);
      std::mt19937_64 rng(g.seed);
      SequenceBatch u;
      u.values = Eigen::MatrixXd::NullaryExpr(b_len, b_channels, [&] { return symmetric_unit(rng); });
      using clock = std::chrono::steady_clock;
      double t_seq = INFINITY, t_scan = INFINITY;
      StateTrajectory seq, par;
      for (int r = 0; r < b_repeat; ++r) {
        const auto t0 = clock::now();
        seq = recur_sequential(ssm, u);
        const auto t1 = clock::now();
        par = recur_scan(ssm, u, b_chunks);
        const auto t2 = clock::now();
        t_seq = std::min(t_seq, std::chrono::duration<double>(t1 - t0).count());
        t_scan = std::min(t_scan, std::chrono::duration<double>(t2 - t1).count());
      }
      const double deviation = max_relative_deviation(seq, par);
      const double speedup = t_scan > 0.0 ? t_seq / t_scan : 0.0;
      if (g.json_output) {
        out << dump({{"n", b_n}, {"len", b_len}, {"channels", b_channels}, {"repeat", b_repeat},
                     {"sequential_seconds", t_seq}, {"scan_seconds", t_scan},
                     {"speedup", speedup}, {"max_relative_deviation", deviation}});
      } else {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "n=%d len=%d channels=%d repeat=%d\nsequential %.6f s\nscan       %.6f s\n"
                      "speedup    %.3f\nmax relative deviation %.3e\n",
                      b_n, b_len, b_channels, b_repeat, t_seq, t_scan, speedup, deviation);
        out << buf;
      }
      return deviation <= 1e-10 ? kExitOk : kExitFailure;
    }

    if (*discretize) {
      const SpectralInit init = io::spectral_from_json(json::parse(io::read_file(d_init)));
      emit(out, d_out, dump(io::ssm_to_json(zoh_discretize(init, d_delta))));
      return kExitOk;
    }

    if (*oracle) {
      const double h = o_h > 0.0 ? o_h : 1e-4 * o_t;
      const OracleReport r = ode_consistency(o_alpha, o_n, named_signal(o_signal), o_t, h,
                                             operator_options(g, 0), o_tol);
      return report_outcome(out, g, std::span<const OracleReport>(&r, 1));
    }

    if (*init_model) {
      io::Model model;
      model.config = FilterBankConfig::with_defaults(i_k, i_block, i_in, i_outw);
      if (!i_alphas.empty()) model.config.alphas = parse_reals(i_alphas, "alpha list");
      model.config.delta.assign(static_cast<std::size_t>(i_k), i_delta);
      model.config.validate();
      model.channels = build_filter_bank(model.config, operator_options(g, 0));
      model.weights = LayerWeights::zeros(model.config);
      std::mt19937_64 rng(g.seed);
      const double c_scale = 1.0 / std::sqrt(static_cast<double>(model.config.total_state()));
      const double g_scale = 1.0 / std::sqrt(static_cast<double>(i_in));
      for (Eigen::Index i = 0; i < model.weights.C_tilde.size(); ++i) {
        const double re = symmetric_unit(rng);
        const double im = symmetric_unit(rng);
        model.weights.C_tilde(i) = c_scale * std::complex<double>(re, im);
      }
      for (Eigen::Index i = 0; i < model.weights.W_gate.size(); ++i) {
        model.weights.W_gate(i) = g_scale * symmetric_unit(rng);
      }
      emit(out, i_out, dump(io::model_to_json(model)));
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // DomainError, ShapeError and bad paths.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fractal
