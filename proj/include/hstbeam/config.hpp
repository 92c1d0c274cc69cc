#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace hstbeam {

// How a carriage's power budget is divided among its selected beams.
enum class BeamSplit { equal, directivity_weighted };

// Whose large-scale gain scales an interference term: the interfering
// link's (the modelled default) or the victim carriage's.
enum class InterferenceGain { interferer, victim };

// Scenario description in SI units. Config files carry km/h and dBm and the
// parser converts on load. Defaults are the reference scenario used across
// the test suite.
struct ScenarioConfig {
  double velocity_mps = 100.0;                    // train speed, > 0
  double antenna_height_m = 50.0;                 // perpendicular BS offset from the track, > 0
  std::size_t carriage_count = 16;                // served carriages, one receiver each
  double carriage_length_m = 25.0;                // midpoint-to-midpoint spacing
  double cell_half_span_m = 500.0;                // track coordinate runs -X..+X
  std::size_t beam_count = 32;                    // fixed beams; array elements equal this
  double path_loss_exponent = 3.0;                // in [2, 5]
  double total_power_w = 1.0;                     // 30 dBm, shared by all beams
  double noise_power_w = 3.9810717055349693e-14;  // -104 dBm
  double dt_s = 1e-3;                             // trace step
  std::size_t beams_per_carriage = 1;             // simultaneous beams per carriage
  double theta_bias_rad = 0.0;                    // beam-selection angle error, alternating
                                                  // sign across carriages
  BeamSplit beam_split = BeamSplit::equal;
  InterferenceGain interference_gain = InterferenceGain::interferer;

  // The fan uses one element per beam.
  std::size_t element_count() const { return beam_count; }

  // Throws config_error on out-of-range values, infeasible_error when the
  // carriages request more beams than the array has.
  void validate() const;
};

double dbm_to_watt(double dbm);

// Flat key=value text. Recognised keys: velocity_kmh, h_m, K, Lc_m, X_m, N,
// alpha, power_dbm, noise_dbm, dt_s, Ns, theta_bias_rad. Blank lines and
// '#' comments are ignored; unknown or repeated keys are errors. Missing
// keys keep their defaults.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

}  // namespace hstbeam
