#include "jifdr/rate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jifdr::rate {

namespace {
double gaussian_q(double y) { return 0.5 * std::erfc(y / std::sqrt(2.0)); }
}  // namespace

double q_inverse(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("q_inverse: x outside (0,1)");
  // Q is strictly decreasing; Q(-40) ~ 1, Q(40) ~ 0 covers any representable x.
  double lo = -40.0, hi = 40.0;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (gaussian_q(mid) > x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double embb_rate(std::span<const double> p_w, std::span<const double> g, double beta_hz,
                 double n0_w) {
  double r = 0.0;
  for (std::size_t f = 0; f < p_w.size(); ++f) {
    r += beta_hz * std::log2(1.0 + p_w[f] * g[f] / n0_w);
  }
  return r;
}

double urllc_rate(std::span<const double> p_w, std::span<const double> pi,
                  std::span<const double> g, double beta_hz, double delta_s, double pe,
                  double n0_w) {
  const double dispersion = q_inverse(pe) / std::sqrt(delta_s * beta_hz);
  double r = 0.0;
  for (std::size_t f = 0; f < p_w.size(); ++f) {
    double sub = std::log2(1.0 + p_w[f] * g[f] / n0_w) - pi[f] * dispersion;
    if (sub > 0.0) r += beta_hz * sub;
  }
  return r;
}

bool urllc_snr_floor_ok(std::span<const double> p_w, std::span<const double> pi,
                        std::span<const double> g, double n0_w, double gamma0) {
  for (std::size_t f = 0; f < p_w.size(); ++f) {
    if (pi[f] > 0.5 && p_w[f] * g[f] / n0_w < gamma0 * (1.0 - 1e-9)) return false;
  }
  return true;
}

LatencyCommon latency_common(double lambda_total_pps,
                             std::span<const double> urllc_flow_bits_per_ru,
                             const LatencyParams& par) {
  LatencyCommon c;
  if (par.mm1_response) {
    c.tau_pro_cu = lambda_total_pps < par.mu_cu
                       ? 1.0 / (par.mu_cu - lambda_total_pps)
                       : std::numeric_limits<double>::infinity();
    c.tau_pro_du = lambda_total_pps < par.mu_du
                       ? 1.0 / (par.mu_du - lambda_total_pps)
                       : std::numeric_limits<double>::infinity();
  } else {
    c.tau_pro_cu = lambda_total_pps / par.mu_cu;
    c.tau_pro_du = lambda_total_pps / par.mu_du;
  }
  c.tau_tx_cu_du = lambda_total_pps * par.mh_packet_bytes * 8.0 / par.mh_capacity_bps;
  double worst = 0.0;
  for (double flow : urllc_flow_bits_per_ru) {
    worst = std::max(worst, flow / par.fh_capacity_bps);
  }
  c.tau_tx_du_ru = worst;
  c.fixed_total =
      c.tau_pro_cu + c.tau_tx_cu_du + c.tau_pro_du + c.tau_tx_du_ru + par.tau_pro_ru_s;
  return c;
}

LatencyBreakdown latency_breakdown(const LatencyCommon& common,
                                   std::span<const double> phi, double lambda_pps,
                                   std::span<const double> rate_bps,
                                   const LatencyParams& par) {
  LatencyBreakdown b;
  b.tau_pro_cu = common.tau_pro_cu;
  b.tau_tx_cu_du = common.tau_tx_cu_du;
  b.tau_pro_du = common.tau_pro_du;
  b.tau_tx_du_ru = common.tau_tx_du_ru;
  b.tau_pro_ru = par.tau_pro_ru_s;
  b.budget = par.budget_s;

  double worst = 0.0;
  bool any_serving = false;
  bool any_served = false;
  for (std::size_t m = 0; m < phi.size(); ++m) {
    double flow_bits = phi[m] * lambda_pps * par.z_ur_bytes * 8.0;
    if (flow_bits <= 0.0) continue;
    any_serving = true;
    if (rate_bps[m] > 0.0) {
      any_served = true;
      worst = std::max(worst, flow_bits / rate_bps[m]);
    }
  }
  if (any_serving && !any_served) {
    b.unserved = true;
    b.tau_tx_ru_u = std::numeric_limits<double>::infinity();
  } else {
    b.tau_tx_ru_u = worst;
  }
  b.total = b.tau_pro_cu + b.tau_tx_cu_du + b.tau_pro_du + b.tau_tx_du_ru +
            b.tau_tx_ru_u + b.tau_pro_ru;
  return b;
}

}  // namespace jifdr::rate
