#pragma once

namespace hstbeam {

// Large-scale amplitude gain over a line-of-sight range: d^(-alpha/2) with
// unit gain pinned at 1 m. Ranges under a metre amplify; the geometry here
// keeps d >= antenna_height_m so that regime never occurs in traces.
double path_gain(double distance_m, double path_loss_exponent);

// Power gain over noise for a unit-power transmission without directivity:
// d^(-alpha) / noise_power. This is the per-carriage quality the allocator
// ranks by.
double effective_gain(double distance_m, double path_loss_exponent, double noise_power_w);

}  // namespace hstbeam
