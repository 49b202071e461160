#include "jifdr/model.hpp"

#include <cmath>
#include <stdexcept>

#include "jifdr/rng.hpp"

namespace jifdr::model {

Numerology build_numerology(Service service) {
  Numerology n;
  if (service == Service::embb) {
    n.index = 1;
    n.scs_index = 1;
    n.rb_bandwidth_hz = 360e3;
  } else {
    n.index = 2;
    n.scs_index = 2;
    n.rb_bandwidth_hz = 720e3;
  }
  n.tti_duration_s = 1e-3 / std::pow(2.0, n.scs_index + 1);
  n.ttis_per_frame = static_cast<int>(std::llround(kFrameLengthS / n.tti_duration_s));
  return n;
}

Numerology legacy_numerology() {
  Numerology n;
  n.index = 0;
  n.scs_index = 0;
  n.rb_bandwidth_hz = 180e3;
  n.tti_duration_s = 0.5e-3;
  n.ttis_per_frame = static_cast<int>(std::llround(kFrameLengthS / n.tti_duration_s));
  return n;
}

double Topology::distance_m(int ru, int user) const {
  const auto& r = ru_positions[ru];
  const auto& u = user_positions[user];
  return std::hypot(r[0] - u[0], r[1] - u[1]);
}

Topology make_topology(int num_rus, int num_embb, int num_urllc, int antennas,
                       double cell_radius_m, std::uint64_t seed) {
  Topology t;
  t.num_rus = num_rus;
  t.num_embb = num_embb;
  t.num_urllc = num_urllc;
  t.antennas = antennas;
  t.cell_radius_m = cell_radius_m;

  t.ru_positions.clear();
  t.ru_positions.push_back({0.0, 0.0});
  const double ring = cell_radius_m / 2.0;
  for (int k = 1; k < num_rus; ++k) {
    // sector RUs on a ring, first at 90 degrees
    double ang = 2.0 * M_PI * (k - 1) / std::max(1, num_rus - 1) + M_PI / 2.0;
    t.ru_positions.push_back({ring * std::cos(ang), ring * std::sin(ang)});
  }

  auto eng = rng::engine(rng::stream_seed(seed, rng::Stream::topology));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  t.user_positions.clear();
  while (static_cast<int>(t.user_positions.size()) < num_embb + num_urllc) {
    double r = cell_radius_m * std::sqrt(unif(eng));
    double a = 2.0 * M_PI * unif(eng);
    std::array<double, 2> pos = {r * std::cos(a), r * std::sin(a)};
    bool ok = true;
    for (const auto& rp : t.ru_positions) {
      if (std::hypot(rp[0] - pos[0], rp[1] - pos[1]) < 1.0) ok = false;
    }
    if (ok) t.user_positions.push_back(pos);
  }
  return t;
}

BwpPartition partition_bandwidth(double total_hz, double alpha, double guard_hz,
                                 const Numerology& embb, const Numerology& urllc) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha outside [0,1]");
  if (!(total_hz > guard_hz)) throw std::invalid_argument("bandwidth must exceed guard band");

  BwpPartition p;
  p.total_bandwidth_hz = total_hz;
  p.alpha = alpha;
  p.guard_band_hz = guard_hz;
  p.slice_bandwidth_hz[1] = alpha * total_hz;
  p.slice_bandwidth_hz[0] = std::max(0.0, (1.0 - alpha) * total_hz - guard_hz);
  p.rb_count[0] = static_cast<int>(std::floor(p.slice_bandwidth_hz[0] / embb.rb_bandwidth_hz));
  p.rb_count[1] = static_cast<int>(std::floor(p.slice_bandwidth_hz[1] / urllc.rb_bandwidth_hz));
  p.degenerate = (p.rb_count[0] == 0 || p.rb_count[1] == 0);
  return p;
}

double path_loss_db(double distance_m) {
  return 128.1 + 37.6 * std::log10(distance_m / 1000.0);
}

ChannelRealization sample_channels(const Topology& topo, const Numerology& num,
                                   int frame, std::uint64_t seed, int num_subbands,
                                   double rician_factor) {
  ChannelRealization ch;
  ch.num_rus = topo.num_rus;
  ch.num_users = topo.num_users();
  ch.num_subbands = num_subbands;
  ch.num_ttis = num.ttis_per_frame;
  ch.rician_factor = rician_factor;
  ch.large_scale.resize(static_cast<std::size_t>(ch.num_rus) * ch.num_users);
  ch.gains.resize(static_cast<std::size_t>(ch.num_rus) * ch.num_users * num_subbands *
                  ch.num_ttis);

  const int K = topo.antennas;
  const double los = std::sqrt(rician_factor / (rician_factor + 1.0));
  const double nlos = std::sqrt(1.0 / (rician_factor + 1.0));

  auto eng = rng::engine(rng::stream_seed(seed, rng::Stream::channel,
                                          static_cast<std::uint64_t>(frame),
                                          static_cast<std::uint64_t>(num.index)));
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));

  std::size_t idx = 0;
  for (int m = 0; m < ch.num_rus; ++m) {
    for (int u = 0; u < ch.num_users; ++u) {
      double d = topo.distance_m(m, u);
      if (d <= 0.0) throw std::invalid_argument("zero RU-user distance");
      double zeta = std::pow(10.0, -path_loss_db(d) / 10.0);
      ch.large_scale[static_cast<std::size_t>(m) * ch.num_users + u] = zeta;
      for (int f = 0; f < num_subbands; ++f) {
        for (int ts = 0; ts < ch.num_ttis; ++ts) {
          double g = 0.0;
          for (int k = 0; k < K; ++k) {
            // LoS component is the all-ones steering vector
            double re = los * 1.0 + nlos * gauss(eng);
            double im = nlos * gauss(eng);
            g += re * re + im * im;
          }
          ch.gains[idx++] = zeta * g;
        }
      }
    }
  }
  return ch;
}

}  // namespace jifdr::model
