#pragma once

#include <cstddef>
#include <vector>

namespace hstbeam {

// One carriage's link at one instant, after beamforming and allocation.
struct LinkSample {
  double signal_w = 0.0;        // received useful power
  double interference_w = 0.0;  // received power from beams shared with others
  double sinr = 0.0;
  double rate_nats = 0.0;       // log(1 + sinr), natural units per channel use
};

LinkSample link_sample(double signal_w, double interference_w, double noise_w);

// Running time integral of a per-carriage rate signal, trapezoidal in the
// sample spacing. Totals stay exact for affine-in-time rates.
class ServiceTrace {
 public:
  explicit ServiceTrace(std::size_t carriage_count);

  // Fold in the rates at the next instant, dt after the previous one. The
  // first call sets the initial sample and accumulates nothing.
  void step(const std::vector<double>& rates_nats, double dt_s);

  const std::vector<double>& totals() const { return totals_; }
  double grand_total() const;
  std::size_t samples() const { return samples_; }

 private:
  std::vector<double> totals_;
  std::vector<double> previous_;
  std::size_t samples_ = 0;
};

}  // namespace hstbeam
