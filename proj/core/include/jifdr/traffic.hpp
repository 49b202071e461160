#pragma once

#include <cstdint>
#include <vector>

namespace jifdr::traffic {

constexpr double kPacketEmbbBytes = 128000.0;  // 125 KB
constexpr double kPacketUrllcBytes = 1024.0;   // 1 KB

struct TrafficState {
  std::vector<std::vector<double>> demand;  // [u][t] packets/s
  double packet_size_embb = kPacketEmbbBytes;
  double packet_size_urllc = kPacketUrllcBytes;
  double demand_cap = 0;  // lambda_max
};

// i.i.d. Poisson(mean) per frame, capped at cap (<=0 means 10x mean).
// Throws std::invalid_argument if mean <= 0.
std::vector<double> generate_arrivals(double mean, int frames, std::uint64_t seed,
                                      double cap = 0.0);

// One step of the transmission-queue recursion, bytes:
//   q' = max(q + phi*lambda*Z*delta - rate*delta/8, 0)
// The bits->bytes conversion of the service term lives here and only here.
double update_queue(double q_bytes, double phi, double lambda_pps, double z_bytes,
                    double rate_bps, double delta_s);

struct QueueMatrix {
  int num_rus = 0;
  int num_users = 0;
  std::vector<double> q;  // bytes, [m][u]
  double capacity_bytes = 10240.0;  // Q_max per RU

  QueueMatrix() = default;
  QueueMatrix(int m, int u, double cap)
      : num_rus(m), num_users(u), q(static_cast<std::size_t>(m) * u, 0.0),
        capacity_bytes(cap) {}
  double& at(int m, int u) { return q[static_cast<std::size_t>(m) * num_users + u]; }
  double at(int m, int u) const { return q[static_cast<std::size_t>(m) * num_users + u]; }
  double ru_total(int m) const;
  double mean() const;
};

struct BufferCheck {
  bool ok = true;
  std::vector<int> violating_rus;
};

// true iff sum_u q[m][u] <= Q_max for every RU (inclusive).
BufferCheck buffer_ok(const QueueMatrix& qm);

}  // namespace jifdr::traffic
