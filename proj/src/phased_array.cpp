#include "hstbeam/phased_array.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <utility>

namespace hstbeam {

namespace {

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [a, b]. Newton iteration on the Legendre
// recurrence; roots converge to machine precision in a handful of steps.
Quadrature gauss_legendre(std::size_t n, double a, double b) {
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double mid = 0.5 * (b + a);
  const double half = 0.5 * (b - a);
  const std::size_t upper = (n + 1) / 2;
  for (std::size_t i = 0; i < upper; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double derivative = 0.0;
    for (;;) {
      double p_curr = 1.0;
      double p_prev = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p_old = p_prev;
        p_prev = p_curr;
        const double jd = static_cast<double>(j);
        p_curr = ((2.0 * jd + 1.0) * z * p_prev - jd * p_old) / (jd + 1.0);
      }
      derivative = static_cast<double>(n) * (z * p_curr - p_prev) / (z * z - 1.0);
      const double step = p_curr / derivative;
      z -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    q.nodes[i] = mid - half * z;
    q.nodes[n - 1 - i] = mid + half * z;
    q.weights[i] = 2.0 * half / ((1.0 - z * z) * derivative * derivative);
    q.weights[n - 1 - i] = q.weights[i];
  }
  return q;
}

constexpr std::size_t kNormPoints = 4096;

const Quadrature& norm_rule() {
  static const Quadrature rule = gauss_legendre(kNormPoints, 0.0, std::numbers::pi);
  return rule;
}

// Normalisation integrals for a whole fan, computed once per beam_count.
// References into the node-based map stay valid after later insertions.
const std::vector<double>& norms_for(std::size_t beam_count) {
  static std::mutex guard;
  static std::map<std::size_t, std::vector<double>> cache;
  std::scoped_lock lock(guard);
  const auto [it, inserted] = cache.try_emplace(beam_count);
  if (inserted) {
    const Quadrature& rule = norm_rule();
    it->second.resize(beam_count);
    for (std::size_t beam = 0; beam < beam_count; ++beam) {
      double sum = 0.0;
      for (std::size_t i = 0; i < kNormPoints; ++i) {
        const double af = array_factor(beam, beam_count, rule.nodes[i]);
        sum += rule.weights[i] * af * af * std::sin(rule.nodes[i]);
      }
      it->second[beam] = sum;
    }
  }
  return it->second;
}

}  // namespace

double beam_offset(std::size_t beam, std::size_t beam_count) {
  return static_cast<double>(beam) - 0.5 * (static_cast<double>(beam_count) - 1.0);
}

double array_factor(std::size_t beam, std::size_t beam_count, double theta_rad) {
  const double u = std::numbers::pi * (0.5 * static_cast<double>(beam_count) *
                                           std::cos(theta_rad) -
                                       beam_offset(beam, beam_count));
  if (std::abs(u) < 1e-9) return 1.0;
  return std::sin(u) / u;
}

double pattern_norm(std::size_t beam, std::size_t beam_count) {
  return norms_for(beam_count)[beam];
}

double directivity(std::size_t beam, std::size_t beam_count, double theta_rad) {
  const double af = array_factor(beam, beam_count, theta_rad);
  return 2.0 * af * af / pattern_norm(beam, beam_count);
}

std::vector<double> fan_directivities(std::size_t beam_count, double theta_rad) {
  const std::vector<double>& norms = norms_for(beam_count);
  std::vector<double> out(beam_count);
  for (std::size_t beam = 0; beam < beam_count; ++beam) {
    const double af = array_factor(beam, beam_count, theta_rad);
    out[beam] = 2.0 * af * af / norms[beam];
  }
  return out;
}

std::vector<std::size_t> rank_beams(std::size_t beam_count, double theta_rad) {
  const std::vector<double> gains = fan_directivities(beam_count, theta_rad);
  std::vector<std::size_t> order(beam_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gains[a] != gains[b]) return gains[a] > gains[b];
    const double off_a = std::abs(beam_offset(a, beam_count));
    const double off_b = std::abs(beam_offset(b, beam_count));
    if (off_a != off_b) return off_a < off_b;
    return a < b;
  });
  return order;
}

}  // namespace hstbeam
