#include "fractal/ssm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fractal/error.hpp"
#include "fractal/scan.hpp"
#include "fractal/specfun.hpp"

namespace fractal {

namespace {

using cd = std::complex<double>;

// exp(z) - 1 without cancellation for small |z|.
cd expm1_complex(cd z) {
  const double x = z.real();
  const double y = z.imag();
  const double half = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half * half, std::exp(x) * std::sin(y)};
}

void require_width(const DiscreteDiagonalSSM& ssm, const SequenceBatch& u) {
  if (u.width() != ssm.input_width()) {
    throw ShapeError("input width " + std::to_string(u.width()) + " does not match system input width " +
                     std::to_string(ssm.input_width()));
  }
}

}  // namespace

DiscreteDiagonalSSM zoh_discretize(const SpectralInit& init, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("ZOH step delta must be > 0");
  }
  const Eigen::Index N = init.lambda.size();
  if (init.B_tilde.rows() != N) throw ShapeError("B_tilde rows must equal the state size");
  DiscreteDiagonalSSM ssm;
  ssm.delta = delta;
  ssm.lambda_bar.resize(N);
  ssm.b_bar.resize(N, init.B_tilde.cols());
  for (Eigen::Index n = 0; n < N; ++n) {
    const cd lambda = init.lambda(n);
    if (lambda == cd{0.0, 0.0}) throw DomainError("ZOH requires nonzero eigenvalues");
    ssm.lambda_bar(n) = std::exp(delta * lambda);
    const cd gain = expm1_complex(delta * lambda) / lambda;
    ssm.b_bar.row(n) = gain * init.B_tilde.row(n);
  }
  if (!ssm.lambda_bar.allFinite() || !ssm.b_bar.allFinite()) {
    throw NumericError("ZOH discretization produced non-finite values");
  }
  return ssm;
}

StateTrajectory recur_sequential(const DiscreteDiagonalSSM& ssm, const SequenceBatch& u) {
  require_width(ssm, u);
  const int L = u.length();
  const int N = ssm.state_dim();
  StateTrajectory x(L, N);
  if (L == 0) return x;
  const Eigen::MatrixXcd drive = u.values.cast<cd>() * ssm.b_bar.transpose();  // L x N
  x.row(0) = drive.row(0);
  for (int k = 1; k < L; ++k) {
    x.row(k) = ssm.lambda_bar.transpose().cwiseProduct(x.row(k - 1)) + drive.row(k);
  }
  return x;
}

StateTrajectory recur_scan(const DiscreteDiagonalSSM& ssm, const SequenceBatch& u, int chunks) {
  require_width(ssm, u);
  const int L = u.length();
  const int N = ssm.state_dim();
  StateTrajectory x(L, N);
  if (L == 0) return x;
  const Eigen::MatrixXcd drive = u.values.cast<cd>() * ssm.b_bar.transpose();
  std::vector<LinearElement> elements(static_cast<std::size_t>(L));
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < L; ++k) elements[k] = {ssm.lambda_bar(n), drive(k, n)};
    inclusive_scan_parallel(std::span<LinearElement>(elements), combine,
                            LinearElement::identity(), chunks);
    for (int k = 0; k < L; ++k) x(k, n) = elements[k].b;
  }
  return x;
}

double max_relative_deviation(const StateTrajectory& ref, const StateTrajectory& got) {
  if (ref.rows() != got.rows() || ref.cols() != got.cols()) throw ShapeError("trajectory shapes differ");
  double worst = 0.0;
  for (Eigen::Index n = 0; n < ref.cols(); ++n) {
    const double peak = ref.size() ? ref.col(n).cwiseAbs().maxCoeff() : 0.0;
    const double scale = peak > 0.0 ? peak : 1.0;
    for (Eigen::Index k = 0; k < ref.rows(); ++k) {
      worst = std::max(worst, std::abs(got(k, n) - ref(k, n)) / scale);
    }
  }
  return worst;
}

std::vector<double> linspace_alphas(int K, double lo, double hi) {
  if (K < 1) throw DomainError("linspace_alphas requires K >= 1");
  std::vector<double> out(static_cast<std::size_t>(K), lo);
  for (int k = 1; k < K; ++k) out[k] = lo + (hi - lo) * k / (K - 1);
  if (K > 1) out.back() = hi;
  return out;
}

FilterBankConfig FilterBankConfig::with_defaults(int K, int block_state, int input_width,
                                                 int output_width) {
  FilterBankConfig c;
  c.K = K;
  c.block_state = block_state;
  c.alphas = linspace_alphas(K);
  c.delta.assign(static_cast<std::size_t>(std::max(K, 0)), kDefaultDelta);
  c.input_width = input_width;
  c.output_width = output_width;
  c.validate();
  return c;
}

void FilterBankConfig::validate() const {
  if (K < 1) throw DomainError("filter bank needs K >= 1 channels");
  if (block_state < 1) throw DomainError("block_state must be >= 1");
  if (input_width < 1 || output_width < 1) throw DomainError("input/output widths must be >= 1");
  if (static_cast<int>(alphas.size()) != K) throw ShapeError("alphas must have K entries");
  if (static_cast<int>(delta.size()) != K) throw ShapeError("delta must have K entries");
  for (double a : alphas) require_alpha(a, kMaxConstructionAlpha, true);
  for (double d : delta) {
    if (!(d > 0.0)) throw DomainError("per-channel delta must be > 0");
  }
}

LayerWeights LayerWeights::zeros(const FilterBankConfig& config) {
  const int M = config.output_width;
  const int U = config.input_width;
  LayerWeights w;
  w.C_tilde = Eigen::MatrixXcd::Zero(M, config.total_state());
  w.W_out = Eigen::MatrixXd::Identity(M, M);
  w.W_gate = Eigen::MatrixXd::Zero(M, U);
  w.D = Eigen::MatrixXd::Zero(M, U);
  return w;
}

void LayerWeights::validate(const FilterBankConfig& config) const {
  const int M = config.output_width;
  const int U = config.input_width;
  auto check = [](bool ok, const char* what) {
    if (!ok) throw ShapeError(std::string("layer weight shape mismatch: ") + what);
  };
  check(C_tilde.rows() == M && C_tilde.cols() == config.total_state(), "C_tilde");
  check(W_out.rows() == M && W_out.cols() == M, "W_out");
  check(W_gate.rows() == M && W_gate.cols() == U, "W_gate");
  check(D.rows() == M && D.cols() == U, "D");
}

std::vector<SpectralInit> build_filter_bank(const FilterBankConfig& config,
                                            const OperatorOptions& options) {
  config.validate();
  SpectralOptions so;
  so.operators = options;
  std::vector<SpectralInit> inits;
  inits.reserve(config.K);
  for (int k = 0; k < config.K; ++k) {
    inits.push_back(spectral_init(config.alphas[k], config.block_state, config.input_width, so));
  }
  return inits;
}

std::vector<DiscreteDiagonalSSM> discretize_filter_bank(const FilterBankConfig& config,
                                                        std::span<const SpectralInit> inits) {
  config.validate();
  if (static_cast<int>(inits.size()) != config.K) throw ShapeError("need one init per channel");
  std::vector<DiscreteDiagonalSSM> out;
  out.reserve(inits.size());
  for (int k = 0; k < config.K; ++k) out.push_back(zoh_discretize(inits[k], config.delta[k]));
  return out;
}

double silu(double v) { return v / (1.0 + std::exp(-v)); }

SequenceBatch layer_forward(const FilterBankConfig& config, const LayerWeights& weights,
                            std::span<const DiscreteDiagonalSSM> ssms, const SequenceBatch& z_in,
                            Execution mode) {
  config.validate();
  weights.validate(config);
  if (static_cast<int>(ssms.size()) != config.K) throw ShapeError("need one system per channel");
  if (z_in.width() != config.input_width) {
    throw ShapeError("input width " + std::to_string(z_in.width()) + " does not match model input width " +
                     std::to_string(config.input_width));
  }
  const int L = z_in.length();
  StateTrajectory states(L, config.total_state());
  for (int k = 0; k < config.K; ++k) {
    if (ssms[k].state_dim() != config.block_state) throw ShapeError("channel state size mismatch");
    states.middleCols(static_cast<Eigen::Index>(k) * config.block_state, config.block_state) =
        mode == Execution::Scan ? recur_scan(ssms[k], z_in) : recur_sequential(ssms[k], z_in);
  }
  const Eigen::MatrixXd y =
      (states * weights.C_tilde.transpose()).real() + z_in.values * weights.D.transpose();
  const Eigen::MatrixXd gate =
      (z_in.values * weights.W_gate.transpose()).unaryExpr([](double v) { return silu(v); });
  SequenceBatch out;
  out.values = (y * weights.W_out.transpose()).cwiseProduct(gate);
  if (!out.values.allFinite()) throw NumericError("layer output is not finite");
  return out;
}

}  // namespace fractal
