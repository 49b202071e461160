#include "jifdr/traffic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "jifdr/rng.hpp"

namespace jifdr::traffic {

std::vector<double> generate_arrivals(double mean, int frames, std::uint64_t seed,
                                      double cap) {
  if (mean <= 0.0) throw std::invalid_argument("arrival mean must be positive");
  if (cap <= 0.0) cap = 10.0 * mean;
  auto eng = rng::engine(seed);
  std::poisson_distribution<long> pois(mean);
  std::vector<double> out(frames);
  for (int t = 0; t < frames; ++t) {
    out[t] = std::min(static_cast<double>(pois(eng)), cap);
  }
  return out;
}

double update_queue(double q_bytes, double phi, double lambda_pps, double z_bytes,
                    double rate_bps, double delta_s) {
  double arrivals = phi * lambda_pps * z_bytes * delta_s;
  double service = rate_bps * delta_s / 8.0;
  return std::max(q_bytes + arrivals - service, 0.0);
}

double QueueMatrix::ru_total(int m) const {
  double s = 0.0;
  for (int u = 0; u < num_users; ++u) s += at(m, u);
  return s;
}

double QueueMatrix::mean() const {
  if (q.empty()) return 0.0;
  double s = 0.0;
  for (double v : q) s += v;
  return s / static_cast<double>(q.size());
}

BufferCheck buffer_ok(const QueueMatrix& qm) {
  BufferCheck c;
  for (int m = 0; m < qm.num_rus; ++m) {
    if (qm.ru_total(m) > qm.capacity_bytes) {
      c.ok = false;
      c.violating_rus.push_back(m);
    }
  }
  return c;
}

}  // namespace jifdr::traffic
