#include "jifdr/rapps.hpp"

#include <algorithm>
#include <stdexcept>

namespace jifdr::rapps {

double bandwidth_split(std::span<const double> demand_embb,
                       std::span<const double> demand_urllc,
                       const BandwidthSplitConfig& cfg) {
  if (cfg.tau_em_th_s <= 0.0 || cfg.tau_ur_th_s <= 0.0)
    throw std::invalid_argument("latency thresholds must be positive");
  double sum_ur = 0.0, sum_em = 0.0;
  for (double d : demand_urllc) sum_ur += d;
  for (double d : demand_embb) sum_em += d;
  if (sum_em <= 0.0) return cfg.alpha_max;  // all-uRLLC degenerate case
  double raw = (sum_ur / sum_em) * (cfg.tau_em_th_s / cfg.tau_ur_th_s);
  return std::clamp(raw, cfg.alpha_min, cfg.alpha_max);
}

std::vector<double> flow_split(std::span<const double> mean_rate, int num_rus,
                               int num_users) {
  if (num_rus < 1) throw std::invalid_argument("need at least one RU");
  std::vector<double> phi(static_cast<std::size_t>(num_rus) * num_users, 0.0);
  for (int u = 0; u < num_users; ++u) {
    double total = 0.0;
    for (int m = 0; m < num_rus; ++m) total += mean_rate[static_cast<std::size_t>(m) * num_users + u];
    for (int m = 0; m < num_rus; ++m) {
      std::size_t i = static_cast<std::size_t>(m) * num_users + u;
      phi[i] = total > 0.0 ? mean_rate[i] / total : 1.0 / num_rus;
    }
  }
  return phi;
}

SteeringPlan initial_plan(int num_rus, int num_users) {
  if (num_rus < 1) throw std::invalid_argument("need at least one RU");
  SteeringPlan p;
  p.num_rus = num_rus;
  p.num_users = num_users;
  p.alpha = 0.5;
  p.frame = 0;
  p.flow_split.assign(static_cast<std::size_t>(num_rus) * num_users, 1.0 / num_rus);
  p.predicted_demand.assign(num_users, 0.0);
  return p;
}

void make_one_hot(SteeringPlan& plan, int user) {
  int best = 0;
  double best_phi = -1.0;
  for (int m = 0; m < plan.num_rus; ++m) {
    if (plan.phi(m, user) > best_phi) {
      best_phi = plan.phi(m, user);
      best = m;
    }
  }
  for (int m = 0; m < plan.num_rus; ++m) plan.phi(m, user) = (m == best) ? 1.0 : 0.0;
}

}  // namespace jifdr::rapps
