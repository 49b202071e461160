#pragma once

#include <span>
#include <vector>

namespace jifdr::rapps {

struct SteeringPlan {
  double alpha = 0.5;
  std::vector<double> flow_split;        // [m][u], rows over m sum to 1 per user
  std::vector<double> predicted_demand;  // [u] packets/s
  int num_rus = 0;
  int num_users = 0;
  int frame = 0;

  double phi(int m, int u) const {
    return flow_split[static_cast<std::size_t>(m) * num_users + u];
  }
  double& phi(int m, int u) {
    return flow_split[static_cast<std::size_t>(m) * num_users + u];
  }
};

struct BandwidthSplitConfig {
  double alpha_min = 0.05;
  double alpha_max = 0.95;
  double tau_em_th_s = 2e-3;    // eMBB latency threshold (config default)
  double tau_ur_th_s = 0.5e-3;  // = D_ur
};

// alpha* = (sum_ur lambda / sum_em lambda) * (tau_em/tau_ur), clamped.
// Zero eMBB demand with positive uRLLC demand returns alpha_max.
double bandwidth_split(std::span<const double> demand_embb,
                       std::span<const double> demand_urllc,
                       const BandwidthSplitConfig& cfg = {});

// phi*_{m,u} = mean recent rate of (m,u) / sum over m; all-zero history for a
// user falls back to the uniform 1/M split. rate_history: [m][u] mean of the
// last W achieved rates.
std::vector<double> flow_split(std::span<const double> mean_rate, int num_rus,
                               int num_users);

// Algorithm start: phi = 1/M everywhere, alpha = 1/2, empty queues.
SteeringPlan initial_plan(int num_rus, int num_users);

// Concentrate a user's split on its strongest path (used for uRLLC flows and
// the single-connectivity scheme).
void make_one_hot(SteeringPlan& plan, int user);

}  // namespace jifdr::rapps
