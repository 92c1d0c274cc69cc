#include "hstbeam/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "hstbeam/beam_scheduler.hpp"
#include "hstbeam/channel.hpp"
#include "hstbeam/errors.hpp"
#include "hstbeam/geometry.hpp"
#include "hstbeam/link_metrics.hpp"
#include "hstbeam/phased_array.hpp"
#include "hstbeam/power_allocation.hpp"

namespace hstbeam {

namespace {

std::vector<std::string> split_fields(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

void append_g17(std::string& line, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  line += buf;
}

}  // namespace

RunMode RunMode::parse(const std::string& spec) {
  const std::vector<std::string> parts = split_fields(spec, ':');
  if (parts.size() > 3)
    throw config_error("mode spec '" + spec + "' has more than three fields");
  RunMode mode;
  if (parts[0] == "bf") {
    mode.beamforming = true;
  } else if (parts[0] == "nobf") {
    mode.beamforming = false;
  } else {
    throw config_error("mode spec '" + spec + "': expected bf or nobf, got '" + parts[0] + "'");
  }
  mode.allocation = AllocationKind::equal;
  mode.interference_elimination = false;
  if (parts.size() > 1) {
    if (parts[1] == "waterfill") {
      mode.allocation = AllocationKind::waterfill;
    } else if (parts[1] == "equal") {
      mode.allocation = AllocationKind::equal;
    } else {
      throw config_error("mode spec '" + spec + "': expected waterfill or equal, got '" +
                         parts[1] + "'");
    }
  }
  if (parts.size() > 2) {
    if (parts[2] == "on") {
      mode.interference_elimination = true;
    } else if (parts[2] == "off") {
      mode.interference_elimination = false;
    } else {
      throw config_error("mode spec '" + spec + "': expected on or off, got '" + parts[2] + "'");
    }
  }
  if (!mode.beamforming && mode.allocation == AllocationKind::waterfill)
    throw config_error("mode spec '" + spec + "': beamforming off forces equal allocation");
  return mode;
}

std::string RunMode::label() const {
  std::string text = beamforming ? "bf" : "nobf";
  text += allocation == AllocationKind::waterfill ? "_waterfill" : "_equal";
  text += interference_elimination ? "_on" : "_off";
  return text;
}

double RunResult::final_total() const {
  return total_service_nats.empty() ? 0.0 : total_service_nats.back();
}

RunResult run(const ScenarioConfig& cfg_in, const RunMode& mode) {
  ScenarioConfig cfg = cfg_in;
  if (mode.beams_per_carriage) cfg.beams_per_carriage = *mode.beams_per_carriage;
  cfg.validate();

  const std::size_t carriages = cfg.carriage_count;
  const std::size_t beams = cfg.beam_count;
  const std::size_t per_carriage = cfg.beams_per_carriage;
  const double power = cfg.total_power_w;
  const double window = service_time(cfg);
  const auto steps = static_cast<std::size_t>(std::floor(window / cfg.dt_s + 1e-9));
  const std::size_t instants = steps + 1;

  RunResult out;
  out.times_s.resize(instants);
  out.signal_w = Grid<double>(instants, carriages, 0.0);
  out.interference_w = Grid<double>(instants, carriages, 0.0);
  out.sinr = Grid<double>(instants, carriages, 0.0);
  out.rate_nats = Grid<double>(instants, carriages, 0.0);
  out.service_nats = Grid<double>(instants, carriages, 0.0);
  out.total_service_nats.resize(instants);

  ServiceTrace trace(carriages);
  std::vector<double> distance(carriages);
  std::vector<double> theta_true(carriages);
  std::vector<double> theta_believed(carriages);
  std::vector<double> g2(carriages);
  std::vector<double> rates(carriages);

  // Interference exists only when carriages hold several beams each; the
  // single-beam schedule keeps beams disjoint by construction.
  const bool track_interference = mode.beamforming && per_carriage > 1;

  for (std::size_t i = 0; i < instants; ++i) {
    const double t = static_cast<double>(i) * cfg.dt_s;
    out.times_s[i] = t;

    for (std::size_t k = 0; k < carriages; ++k) {
      const CarriageState state = carriage_state(cfg, k, t);
      distance[k] = state.distance_m;
      theta_true[k] = state.theta_rad;
      const double amplitude = path_gain(state.distance_m, cfg.path_loss_exponent);
      g2[k] = amplitude * amplitude;
    }

    std::vector<double> signal(carriages, 0.0);
    std::vector<double> interference(carriages, 0.0);

    if (!mode.beamforming) {
      // Omnidirectional baseline: unit directivity, equal split.
      const double share = power / static_cast<double>(carriages);
      for (std::size_t k = 0; k < carriages; ++k) signal[k] = share * g2[k];
    } else {
      // Selection, scheduling and allocation see the believed angles; the
      // radiated power is evaluated at the true ones.
      for (std::size_t k = 0; k < carriages; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        theta_believed[k] =
            std::clamp(theta_true[k] + sign * cfg.theta_bias_rad, 1e-9,
                       std::numbers::pi - 1e-9);
      }

      BeamAssignment assignment = select_beams(theta_believed, beams, per_carriage);
      if (mode.interference_elimination)
        assignment = resolve_conflicts(assignment, theta_believed, distance, beams);

      Grid<double> dir_believed(carriages, per_carriage, 0.0);
      Grid<double> dir_true(carriages, per_carriage, 0.0);
      std::vector<double> gains(carriages);
      for (std::size_t k = 0; k < carriages; ++k) {
        const std::vector<double> fan_believed = fan_directivities(beams, theta_believed[k]);
        const std::vector<double> fan_true = fan_directivities(beams, theta_true[k]);
        double believed_sum = 0.0;
        for (std::size_t slot = 0; slot < per_carriage; ++slot) {
          const std::size_t beam = assignment(k, slot);
          dir_believed(k, slot) = fan_believed[beam];
          dir_true(k, slot) = fan_true[beam];
          believed_sum += fan_believed[beam];
        }
        gains[k] = believed_sum * g2[k] / cfg.noise_power_w;
      }

      const Allocation alloc = mode.allocation == AllocationKind::waterfill
                                   ? waterfill(gains, power)
                                   : equal_allocation(carriages);

      Grid<double> beam_share(carriages, per_carriage, 0.0);
      for (std::size_t k = 0; k < carriages; ++k) {
        double believed_sum = 0.0;
        for (std::size_t slot = 0; slot < per_carriage; ++slot)
          believed_sum += dir_believed(k, slot);
        for (std::size_t slot = 0; slot < per_carriage; ++slot) {
          if (cfg.beam_split == BeamSplit::directivity_weighted && believed_sum > 0.0) {
            beam_share(k, slot) =
                alloc.fractions[k] * dir_believed(k, slot) / believed_sum;
          } else {
            beam_share(k, slot) = alloc.fractions[k] / static_cast<double>(per_carriage);
          }
        }
      }

      for (std::size_t k = 0; k < carriages; ++k) {
        double received = 0.0;
        for (std::size_t slot = 0; slot < per_carriage; ++slot)
          received += beam_share(k, slot) * dir_true(k, slot);
        signal[k] = power * received * g2[k];
      }

      if (track_interference) {
        for (std::size_t k = 0; k < carriages; ++k) {
          double acc = 0.0;
          for (std::size_t j = 0; j < carriages; ++j) {
            if (j == k) continue;
            const double scale =
                cfg.interference_gain == InterferenceGain::interferer ? g2[j] : g2[k];
            // Rows are sorted by beam index, so shared beams fall out of a
            // single merge pass.
            const auto row_j = assignment.row(j);
            const auto row_k = assignment.row(k);
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < per_carriage && b < per_carriage) {
              if (row_j[a] < row_k[b]) {
                ++a;
              } else if (row_j[a] > row_k[b]) {
                ++b;
              } else {
                acc += power * beam_share(j, a) * dir_true(j, a) * scale;
                ++a;
                ++b;
              }
            }
          }
          interference[k] = acc;
        }
      }
    }

    for (std::size_t k = 0; k < carriages; ++k) {
      const LinkSample sample = link_sample(signal[k], interference[k], cfg.noise_power_w);
      out.signal_w(i, k) = sample.signal_w;
      out.interference_w(i, k) = sample.interference_w;
      out.sinr(i, k) = sample.sinr;
      out.rate_nats(i, k) = sample.rate_nats;
      rates[k] = sample.rate_nats;
    }
    trace.step(rates, cfg.dt_s);
    for (std::size_t k = 0; k < carriages; ++k) out.service_nats(i, k) = trace.totals()[k];
    out.total_service_nats[i] = trace.grand_total();
  }
  return out;
}

CompareResult compare(const ScenarioConfig& cfg, const std::vector<RunMode>& modes) {
  if (modes.size() < 2) throw config_error("compare needs at least two modes");
  CompareResult out;
  out.modes = modes;
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const RunResult result = run(cfg, modes[j]);
    if (j == 0) {
      out.times_s = result.times_s;
      out.totals_nats = Grid<double>(result.times_s.size(), modes.size(), 0.0);
    }
    for (std::size_t i = 0; i < result.total_service_nats.size(); ++i)
      out.totals_nats(i, j) = result.total_service_nats[i];
  }
  return out;
}

void write_trace_csv(std::ostream& out, const RunResult& result) {
  out << "t_s,k,P_w,I_w,sinr,rate_nats,S_k,S_total\n";
  std::string line;
  for (std::size_t i = 0; i < result.times_s.size(); ++i) {
    for (std::size_t k = 0; k < result.signal_w.cols(); ++k) {
      line.clear();
      append_g17(line, result.times_s[i]);
      line += ',';
      line += std::to_string(k + 1);
      line += ',';
      append_g17(line, result.signal_w(i, k));
      line += ',';
      append_g17(line, result.interference_w(i, k));
      line += ',';
      append_g17(line, result.sinr(i, k));
      line += ',';
      append_g17(line, result.rate_nats(i, k));
      line += ',';
      append_g17(line, result.service_nats(i, k));
      line += ',';
      append_g17(line, result.total_service_nats[i]);
      line += '\n';
      out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
  }
}

void write_compare_csv(std::ostream& out, const CompareResult& result) {
  out << "t_s";
  for (std::size_t j = 0; j < result.modes.size(); ++j)
    out << ",S_total_m" << (j + 1) << "_" << result.modes[j].label();
  out << "\n";
  std::string line;
  for (std::size_t i = 0; i < result.times_s.size(); ++i) {
    line.clear();
    append_g17(line, result.times_s[i]);
    for (std::size_t j = 0; j < result.modes.size(); ++j) {
      line += ',';
      append_g17(line, result.totals_nats(i, j));
    }
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

}  // namespace hstbeam
