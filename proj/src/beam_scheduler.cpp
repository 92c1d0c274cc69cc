#include "hstbeam/beam_scheduler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "hstbeam/errors.hpp"
#include "hstbeam/phased_array.hpp"

namespace hstbeam {

namespace {

void check_capacity(std::size_t carriage_count, std::size_t beams_per_carriage,
                    std::size_t beam_count) {
  if (carriage_count == 0 || beams_per_carriage == 0)
    throw std::invalid_argument("scheduler needs at least one carriage and one beam each");
  // Overflow-safe carriage_count * beams_per_carriage > beam_count.
  if (carriage_count > beam_count / beams_per_carriage)
    throw infeasible_error("scheduler needs " + std::to_string(carriage_count) + " x " +
                           std::to_string(beams_per_carriage) +
                           " beams but the array has only " + std::to_string(beam_count));
}

std::size_t closest_of(const std::vector<std::size_t>& candidates,
                       const std::vector<double>& distance_m) {
  std::size_t best = candidates.front();
  for (const std::size_t k : candidates)
    if (distance_m[k] < distance_m[best]) best = k;
  return best;
}

}  // namespace

BeamAssignment select_beams(const std::vector<double>& theta_rad,
                            std::size_t beam_count,
                            std::size_t beams_per_carriage) {
  check_capacity(theta_rad.size(), beams_per_carriage, beam_count);
  BeamAssignment rows(theta_rad.size(), beams_per_carriage, 0);
  for (std::size_t k = 0; k < theta_rad.size(); ++k) {
    std::vector<std::size_t> order = rank_beams(beam_count, theta_rad[k]);
    order.resize(beams_per_carriage);
    std::sort(order.begin(), order.end());
    std::copy(order.begin(), order.end(), rows.row(k).begin());
  }
  return rows;
}

bool has_conflicts(const BeamAssignment& assignment) {
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t k = 0; k < assignment.rows(); ++k)
    for (const std::size_t beam : assignment.row(k)) {
      const auto [it, inserted] = owner.try_emplace(beam, k);
      if (!inserted && it->second != k) return true;
    }
  return false;
}

BeamAssignment resolve_conflicts(const BeamAssignment& chosen,
                                 const std::vector<double>& theta_rad,
                                 const std::vector<double>& distance_m,
                                 std::size_t beam_count) {
  const std::size_t carriage_count = chosen.rows();
  const std::size_t beams_per_carriage = chosen.cols();
  if (theta_rad.size() != carriage_count || distance_m.size() != carriage_count)
    throw std::invalid_argument("assignment, angles and distances disagree on carriage count");
  check_capacity(carriage_count, beams_per_carriage, beam_count);

  // Membership matrix; rows shrink and refill during the passes below.
  Grid<unsigned char> sel(carriage_count, beam_count, 0);
  for (std::size_t k = 0; k < carriage_count; ++k)
    for (const std::size_t beam : chosen.row(k)) {
      if (beam >= beam_count)
        throw std::invalid_argument("assignment references beam " + std::to_string(beam) +
                                    " of a " + std::to_string(beam_count) + "-beam array");
      sel(k, beam) = 1;
    }

  std::vector<std::vector<std::size_t>> ranking(carriage_count);
  for (std::size_t k = 0; k < carriage_count; ++k)
    ranking[k] = rank_beams(beam_count, theta_rad[k]);

  const auto row_size = [&](std::size_t k) {
    std::size_t n = 0;
    for (std::size_t beam = 0; beam < beam_count; ++beam) n += sel(k, beam);
    return n;
  };

  // Carriages settle closest-first and keep whatever they hold at that
  // moment. A settling carriage evicts its beams from unsettled track
  // neighbours, who immediately re-rank over beams no settled carriage
  // holds; conflicts between non-neighbours survive to the sweep below.
  std::vector<unsigned char> settled(carriage_count, 0);
  std::vector<unsigned char> settled_claim(beam_count, 0);
  for (std::size_t round = 0; round < carriage_count; ++round) {
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < carriage_count; ++k)
      if (!settled[k]) open.push_back(k);
    const std::size_t pick = closest_of(open, distance_m);

    std::vector<std::size_t> neighbours;
    if (pick > 0) neighbours.push_back(pick - 1);
    if (pick + 1 < carriage_count) neighbours.push_back(pick + 1);
    for (const std::size_t nb : neighbours) {
      if (settled[nb]) continue;
      bool stripped = false;
      for (std::size_t beam = 0; beam < beam_count; ++beam)
        if (sel(pick, beam) && sel(nb, beam)) {
          sel(nb, beam) = 0;
          stripped = true;
        }
      if (!stripped) continue;
      std::size_t need = beams_per_carriage - row_size(nb);
      for (const std::size_t beam : ranking[nb]) {
        if (need == 0) break;
        if (settled_claim[beam] || sel(pick, beam) || sel(nb, beam)) continue;
        sel(nb, beam) = 1;
        --need;
      }
    }

    settled[pick] = 1;
    for (std::size_t beam = 0; beam < beam_count; ++beam)
      if (sel(pick, beam)) settled_claim[beam] = 1;
  }

  // Residual shared beams go to the closest holder.
  for (std::size_t beam = 0; beam < beam_count; ++beam) {
    std::vector<std::size_t> holders;
    for (std::size_t k = 0; k < carriage_count; ++k)
      if (sel(k, beam)) holders.push_back(k);
    if (holders.size() < 2) continue;
    const std::size_t keep = closest_of(holders, distance_m);
    for (const std::size_t k : holders)
      if (k != keep) sel(k, beam) = 0;
  }

  // Refill shorted carriages, closest-first, from beams nobody holds. The
  // capacity bound leaves at least as many free beams as the total
  // shortfall, so every row returns to full size.
  std::vector<unsigned char> claimed(beam_count, 0);
  for (std::size_t k = 0; k < carriage_count; ++k)
    for (std::size_t beam = 0; beam < beam_count; ++beam)
      if (sel(k, beam)) claimed[beam] = 1;
  std::vector<std::size_t> refill_order(carriage_count);
  for (std::size_t k = 0; k < carriage_count; ++k) refill_order[k] = k;
  std::sort(refill_order.begin(), refill_order.end(), [&](std::size_t a, std::size_t b) {
    if (distance_m[a] != distance_m[b]) return distance_m[a] < distance_m[b];
    return a < b;
  });
  for (const std::size_t k : refill_order) {
    std::size_t need = beams_per_carriage - row_size(k);
    for (const std::size_t beam : ranking[k]) {
      if (need == 0) break;
      if (claimed[beam]) continue;
      sel(k, beam) = 1;
      claimed[beam] = 1;
      --need;
    }
  }

  BeamAssignment out(carriage_count, beams_per_carriage, 0);
  for (std::size_t k = 0; k < carriage_count; ++k) {
    std::size_t slot = 0;
    for (std::size_t beam = 0; beam < beam_count; ++beam)
      if (sel(k, beam)) out(k, slot++) = beam;
    if (slot != beams_per_carriage)
      throw std::logic_error("conflict resolution left a carriage short of beams");
  }
  return out;
}

}  // namespace hstbeam
