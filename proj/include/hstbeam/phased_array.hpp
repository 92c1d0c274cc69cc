#pragma once

#include <cstddef>
#include <vector>

namespace hstbeam {

// Fixed fan of beam_count beams from a half-wavelength uniform linear array
// laid along the track. Beam i (0-based) points where cos(theta) equals
// 2 * beam_offset(i) / beam_count; offsets are symmetric around broadside.
double beam_offset(std::size_t beam, std::size_t beam_count);

// Raw array factor of one beam, sin(u)/u with
// u = pi * (beam_count * cos(theta) / 2 - beam_offset). Signed; peaks at 1.
double array_factor(std::size_t beam, std::size_t beam_count, double theta_rad);

// Directivity of one beam at an angle: the squared array factor against its
// own average over the sphere. The fan satisfies
// (1/2) * integral of directivity(i, N, t) * sin(t) dt = 1 for every beam.
double directivity(std::size_t beam, std::size_t beam_count, double theta_rad);

// Normalisation integral of the squared array factor over [0, pi] with the
// sin weight. Exposed for verification; directivity() uses it internally.
double pattern_norm(std::size_t beam, std::size_t beam_count);

// Directivities of every beam at one angle, indexed by beam.
std::vector<double> fan_directivities(std::size_t beam_count, double theta_rad);

// Beams sorted best-first for a receiver at theta: descending directivity,
// then smaller |offset|, then lower index. Deterministic for equal keys.
std::vector<std::size_t> rank_beams(std::size_t beam_count, double theta_rad);

}  // namespace hstbeam
