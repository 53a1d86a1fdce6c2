#pragma once

#include <vector>

#include "eh/locus.hpp"

namespace eh {

// Mechanical catalog sweep: every case, both families, every level n whose
// kernel genus lands in (5, gmax], bucketed by genus and sorted. This is an
// independent route to the classified actions; it never consults the
// statement tables.
struct SweepResult {
  long gmin = 6;
  long gmax = 6;
  std::vector<std::vector<CatalogedAction>> buckets;  // index g - gmin

  const std::vector<CatalogedAction>& at(long g) const;
};

SweepResult sweep_actions_serial(long gmax);
SweepResult sweep_actions_parallel(long gmax);

bool sweep_equal(const SweepResult& x, const SweepResult& y);

}  // namespace eh
