#include "hstbeam/channel.hpp"

#include <cmath>

namespace hstbeam {

double path_gain(double distance_m, double path_loss_exponent) {
  return std::pow(distance_m, -0.5 * path_loss_exponent);
}

double effective_gain(double distance_m, double path_loss_exponent, double noise_power_w) {
  const double amplitude = path_gain(distance_m, path_loss_exponent);
  return amplitude * amplitude / noise_power_w;
}

}  // namespace hstbeam
