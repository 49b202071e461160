#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace jifdr::model {

enum class Service { embb, urllc };

constexpr double kFrameLengthS = 10e-3;  // Delta
constexpr int kSymbolsPerTti = 7;

// 5G NR parameter set for one service slice: mini-slot duration
// delta = 1/2^(gamma+1) ms, S_i = Delta/delta TTIs per frame.
struct Numerology {
  int index = 0;             // i
  int scs_index = 0;         // gamma
  double rb_bandwidth_hz = 0;  // beta_i
  double tti_duration_s = 0;   // delta_i
  int ttis_per_frame = 0;      // S_i

  double symbol_duration_s() const { return tti_duration_s / kSymbolsPerTti; }
};

// embb -> i=1 (360 kHz, 0.25 ms, S=40); urllc -> i=2 (720 kHz, 0.125 ms, S=80)
Numerology build_numerology(Service service);

// LTE-style single numerology used by the FIX-NUM benchmark scheme:
// 180 kHz RBs, 0.5 ms TTI, S=20.
Numerology legacy_numerology();

struct Topology {
  int num_rus = 4;
  int num_embb = 12;
  int num_urllc = 8;
  int antennas = 4;
  std::vector<std::array<double, 2>> ru_positions;    // meters
  std::vector<std::array<double, 2>> user_positions;  // eMBB users first, then uRLLC
  double p_max_w = 39.810717055349734;                // 46 dBm
  double fh_capacity_bps = 1e9;
  double mh_capacity_bps = 50e9;
  double cell_radius_m = 500.0;

  int num_users() const { return num_embb + num_urllc; }
  // global user index of the v-th uRLLC user
  int urllc_user(int v) const { return num_embb + v; }
  double distance_m(int ru, int user) const;
};

// One central RU plus three sector RUs at 250 m; users uniform in the disk,
// re-drawn if closer than 1 m to an RU.
Topology make_topology(int num_rus, int num_embb, int num_urllc, int antennas,
                       double cell_radius_m, std::uint64_t seed);

struct BwpPartition {
  double total_bandwidth_hz = 0;
  double alpha = 0;
  double guard_band_hz = 0;
  double slice_bandwidth_hz[2] = {0, 0};  // [0]=eMBB (B_1), [1]=uRLLC (B_2)
  int rb_count[2] = {0, 0};               // F_1, F_2
  bool degenerate = false;                // some slice ended up with zero RBs

  int rbs_per_frame(int slice, const Numerology& n) const {
    return rb_count[slice] * n.ttis_per_frame;
  }
};

// B_2 = alpha*B, B_1 = (1-alpha)*B - B_G clamped at 0, F_i = floor(B_i/beta_i).
// Throws std::invalid_argument for alpha outside [0,1] or B <= B_G.
BwpPartition partition_bandwidth(double total_hz, double alpha, double guard_hz,
                                 const Numerology& embb, const Numerology& urllc);

// 128.1 + 37.6 log10(d/1000) dB, d in meters
double path_loss_db(double distance_m);

// Effective scalar channel gains g = |h|^2 over K antennas for one slice grid.
struct ChannelRealization {
  int num_rus = 0;
  int num_users = 0;
  int num_subbands = 0;
  int num_ttis = 0;
  std::vector<double> gains;        // [m][u][f][ts]
  std::vector<double> large_scale;  // zeta[m][u]
  double rician_factor = 0;

  double gain(int m, int u, int f, int ts) const {
    return gains[((static_cast<std::size_t>(m) * num_users + u) * num_subbands + f) *
                     num_ttis +
                 ts];
  }
  double zeta(int m, int u) const { return large_scale[static_cast<std::size_t>(m) * num_users + u]; }
};

// Rician fading with deterministic all-ones LoS; rician_factor = 0 reduces to
// Rayleigh (the default). Large-scale part is fixed per frame (pure path loss),
// small-scale redrawn per TTI. Identical (seed, frame, numerology) give
// bit-identical gains; num_subbands should be the largest F_i the sweep can use
// so draws do not depend on the per-frame alpha.
ChannelRealization sample_channels(const Topology& topo, const Numerology& num,
                                   int frame, std::uint64_t seed, int num_subbands,
                                   double rician_factor = 0.0);

}  // namespace jifdr::model
