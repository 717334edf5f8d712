#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "fractal/spectral.hpp"

namespace fractal {

inline constexpr double kDefaultDelta = 1e-2;

/// ZOH-discretized diagonal recurrence x_k = lambda_bar .* x_{k-1} + b_bar u_k.
struct DiscreteDiagonalSSM {
  Eigen::VectorXcd lambda_bar;
  Eigen::MatrixXcd b_bar;  // N x U
  double delta = kDefaultDelta;

  int state_dim() const { return static_cast<int>(lambda_bar.size()); }
  int input_width() const { return static_cast<int>(b_bar.cols()); }
};

// L x U block of input samples, one row per timestep.
struct SequenceBatch {
  Eigen::MatrixXd values;

  int length() const { return static_cast<int>(values.rows()); }
  int width() const { return static_cast<int>(values.cols()); }
};

// L x N complex states; column n is the trajectory of state n.
using StateTrajectory = Eigen::MatrixXcd;

DiscreteDiagonalSSM zoh_discretize(const SpectralInit& init, double delta);

/// Reference recurrence with zero initial state: x_0 = b_bar u_0.
StateTrajectory recur_sequential(const DiscreteDiagonalSSM& ssm, const SequenceBatch& u);

/// Same trajectory through an inclusive associative scan per state. `chunks` <= 0 uses
/// the available threads.
StateTrajectory recur_scan(const DiscreteDiagonalSSM& ssm, const SequenceBatch& u,
                           int chunks = 0);

/// Max over states n and steps k of |got - ref| / max_k |ref(., n)|; zero-peak states
/// compare absolutely.
double max_relative_deviation(const StateTrajectory& ref, const StateTrajectory& got);

/// Evenly spaced singularity indices over [lo, hi], endpoints included; K = 1 gives {lo}.
std::vector<double> linspace_alphas(int K, double lo = 0.0, double hi = 0.9);

struct FilterBankConfig {
  int K = 1;
  int block_state = 1;
  std::vector<double> alphas;  // one per channel
  std::vector<double> delta;   // one per channel
  int input_width = 1;
  int output_width = 1;

  /// Linearly spaced alphas over [0, 0.9] and delta = 1e-2 per channel.
  static FilterBankConfig with_defaults(int K, int block_state, int input_width,
                                        int output_width);
  void validate() const;
  int total_state() const { return K * block_state; }
};

// Output side of the gated layer. M = output width, U = input width.
struct LayerWeights {
  Eigen::MatrixXcd C_tilde;  // M x (K * block_state)
  Eigen::MatrixXd W_out;     // M x M
  Eigen::MatrixXd W_gate;    // M x U
  Eigen::MatrixXd D;         // M x U, zero unless set

  static LayerWeights zeros(const FilterBankConfig& config);
  void validate(const FilterBankConfig& config) const;
};

/// One spectral initialization per channel: spectral_init(alpha_k, block_state, U).
std::vector<SpectralInit> build_filter_bank(const FilterBankConfig& config,
                                            const OperatorOptions& options = {});

/// zoh_discretize of every channel with its configured delta.
std::vector<DiscreteDiagonalSSM> discretize_filter_bank(const FilterBankConfig& config,
                                                        std::span<const SpectralInit> inits);

double silu(double v);

enum class Execution { Sequential, Scan };

/// z_out = (W_out y) .* silu(W_gate z_in) with y = Re(C_tilde x) + D z_in and x the
/// concatenated channel states.
SequenceBatch layer_forward(const FilterBankConfig& config, const LayerWeights& weights,
                            std::span<const DiscreteDiagonalSSM> ssms, const SequenceBatch& z_in,
                            Execution mode = Execution::Sequential);

}  // namespace fractal
