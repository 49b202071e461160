#pragma once

#include <span>
#include <vector>

namespace jifdr::rate {

constexpr double kNoisePowerW = 1e-14;        // -110 dBm
constexpr double kSnrFloorLin = 3.1622776601683795;  // Gamma_0 = 5 dB
constexpr double kErrorProb = 1e-3;           // P_e

// Inverse Gaussian Q-function by bracketed bisection on erfc, |Q(y)-x| <= 1e-10.
// Throws std::domain_error for x outside (0,1).
double q_inverse(double x);

// Shannon sum over sub-bands: sum_f beta*log2(1 + p_f*g_f/N0)  [bit/s]
double embb_rate(std::span<const double> p_w, std::span<const double> g, double beta_hz,
                 double n0_w = kNoisePowerW);

// Short-blocklength rate with V=1:
//   sum_f beta*[log2(1+p g/N0) - pi_f * Qinv(Pe)/sqrt(delta*beta)], floored at 0
// per sub-band so an unassigned RB's dispersion cannot go negative.
double urllc_rate(std::span<const double> p_w, std::span<const double> pi,
                  std::span<const double> g, double beta_hz, double delta_s, double pe,
                  double n0_w = kNoisePowerW);

// true iff p*g/N0 >= Gamma_0 wherever pi = 1 (the V~=1 precondition)
bool urllc_snr_floor_ok(std::span<const double> p_w, std::span<const double> pi,
                        std::span<const double> g, double n0_w = kNoisePowerW,
                        double gamma0 = kSnrFloorLin);

struct LatencyParams {
  double mu_cu = 1e7;    // tasks/s
  double mu_du = 1e7;
  double mh_capacity_bps = 50e9;
  double fh_capacity_bps = 1e9;
  double z_ur_bytes = 1024.0;
  double mh_packet_bytes = 1024.0;  // packet size used in the midhaul term
  double tau_pro_ru_s = 3.0 * (0.125e-3 / 7.0);  // three OFDM symbols, uRLLC numerology
  double budget_s = 0.5e-3;                      // D_ur
  bool mm1_response = false;  // use 1/(mu-Lambda) instead of Lambda/mu
};

// Components shared by every uRLLC user in a frame.
struct LatencyCommon {
  double tau_pro_cu = 0;
  double tau_tx_cu_du = 0;
  double tau_pro_du = 0;
  double tau_tx_du_ru = 0;
  double fixed_total = 0;  // the above plus tau_pro_ru
};

// lambda_total: sum of all users' demand [pkt/s]; urllc_flow_bits[m] =
// sum_{u in ur} phi*lambda*Z_ur*8 routed through RU m [bit/s].
LatencyCommon latency_common(double lambda_total_pps,
                             std::span<const double> urllc_flow_bits_per_ru,
                             const LatencyParams& par);

struct LatencyBreakdown {
  double tau_pro_cu = 0;
  double tau_tx_cu_du = 0;
  double tau_pro_du = 0;
  double tau_tx_du_ru = 0;
  double tau_tx_ru_u = 0;
  double tau_pro_ru = 0;
  double total = 0;
  double budget = 0;
  bool unserved = false;  // phi*lambda > 0 but r = 0 on every serving RU
};

// Per-user chain: tau_tx_ru_u = max over serving RUs (phi>0, r>0) of
// phi*lambda*Z_ur*8/r; unserved is flagged (total = inf) when every serving RU
// has zero rate.
LatencyBreakdown latency_breakdown(const LatencyCommon& common,
                                   std::span<const double> phi,
                                   double lambda_pps,
                                   std::span<const double> rate_bps,
                                   const LatencyParams& par);

}  // namespace jifdr::rate
