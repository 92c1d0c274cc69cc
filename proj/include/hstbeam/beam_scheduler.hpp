#pragma once

#include <cstddef>
#include <vector>

#include "hstbeam/grid.hpp"

namespace hstbeam {

// Per-carriage beam choices: row k lists the beams_per_carriage beam indices
// serving carriage k, in ascending beam order.
using BeamAssignment = Grid<std::size_t>;

// Each carriage independently takes its top beams_per_carriage beams from
// rank_beams at its own angle. Rows may overlap. Throws infeasible_error
// when carriage_count * beams_per_carriage exceeds beam_count.
BeamAssignment select_beams(const std::vector<double>& theta_rad,
                            std::size_t beam_count,
                            std::size_t beams_per_carriage);

// Rewrites an assignment so no beam serves two carriages. Carriages settle
// in order of increasing range (ties to the lower index); a settling
// carriage's beams are stripped from its not-yet-settled track neighbours,
// who re-rank over beams no settled carriage holds. A final sweep gives any
// still-shared beam to its closest holder and refills shorted carriages
// from wholly-unclaimed beams. Idempotent; the capacity bound guarantees
// every carriage ends with a full row.
BeamAssignment resolve_conflicts(const BeamAssignment& chosen,
                                 const std::vector<double>& theta_rad,
                                 const std::vector<double>& distance_m,
                                 std::size_t beam_count);

// True when some beam appears in more than one row.
bool has_conflicts(const BeamAssignment& assignment);

}  // namespace hstbeam
