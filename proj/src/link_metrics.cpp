#include "hstbeam/link_metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hstbeam {

LinkSample link_sample(double signal_w, double interference_w, double noise_w) {
  if (!(noise_w > 0.0)) throw std::invalid_argument("noise power must be positive");
  LinkSample sample;
  sample.signal_w = signal_w;
  sample.interference_w = interference_w;
  sample.sinr = signal_w / (interference_w + noise_w);
  sample.rate_nats = std::log1p(sample.sinr);
  return sample;
}

ServiceTrace::ServiceTrace(std::size_t carriage_count)
    : totals_(carriage_count, 0.0), previous_(carriage_count, 0.0) {}

void ServiceTrace::step(const std::vector<double>& rates_nats, double dt_s) {
  if (rates_nats.size() != totals_.size())
    throw std::invalid_argument("rate sample has the wrong carriage count");
  if (!(dt_s > 0.0)) throw std::invalid_argument("sample spacing must be positive");
  if (samples_ > 0)
    for (std::size_t k = 0; k < totals_.size(); ++k)
      totals_[k] += 0.5 * dt_s * (previous_[k] + rates_nats[k]);
  previous_ = rates_nats;
  ++samples_;
}

double ServiceTrace::grand_total() const {
  return std::accumulate(totals_.begin(), totals_.end(), 0.0);
}

}  // namespace hstbeam
