#pragma once

#include <cstdint>

#include "sata/model.hpp"
#include "sata/solver.hpp"

namespace sata {

// Guard on the exact oracle's enumeration: (max_tasks+1)^max_workers mappings
// must stay within 1e8.
struct MappingBound {
  int max_workers = 8;
  int max_tasks = 3;
};

// Exact optimum by enumerating every worker -> (task | unassigned) mapping.
// For a fixed mapping each required skill goes to the cheapest mapped worker
// offering it (transport is paid once per mapped worker); a task completes
// iff covered and within budget, else it contributes nothing and its
// contracts are voided. Ties between mappings break toward the
// lexicographically smallest one (unassigned < task 0 < task 1 ...).
// Throws UsageError naming the limits when the instance exceeds the bound.
Assignment exact_optimal(const Instance& inst, const MappingBound& bound = {});

// Random baseline: visits tasks in shuffled order; for each task repeatedly
// contracts a uniformly random pool worker owning an uncovered required
// skill, using that worker's ratio-optimal subset, with the same
// skip-infeasible / rollback-on-dead-end behavior as the greedy.
// Deterministic given the seed.
Assignment solve_random(const Instance& inst, std::uint64_t seed,
                        SolveStats* stats = nullptr);

}  // namespace sata
