#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sata/model.hpp"

namespace sata {

// A worker's offer for the current task state: a subset of the still-uncovered
// skills together with reward-per-covered-skill.
struct Candidate {
  WorkerId worker = 0;
  std::vector<SkillId> subset;  // sorted, non-empty
  Money cost = 0.0;             // worker_reward(worker, task, subset)
  double ratio = 0.0;           // cost / |subset|
};

// Peak bytes of solver-owned working structures (pool, masks, contracts).
struct SolveStats {
  std::size_t peak_bytes = 0;
};

// The subset of `remaining` minimizing reward/|subset| for this worker.
//
// Computed by the prefix rule: keep the worker's skills that lie in
// `remaining`, sort them by (fee, id), and evaluate every prefix
// (gamma*dist + prefix fee sum)/k. For fixed k the cheapest k fees minimize
// the numerator, so the best prefix is the global argmin over all subsets.
// Ties: lower ratio, then lexicographically smaller sorted id sequence.
// Returns nothing when the worker owns no skill in `remaining`.
std::optional<Candidate> best_subset_for_worker(const Instance& inst,
                                                WorkerId w, TaskId t,
                                                std::span<const SkillId> remaining);

// Greedy set-cover step for one task. Each pool worker offers its full
// intersection with the remaining skills; the worker minimizing
// reward/|intersection| among budget-feasible offers is contracted and
// leaves the pool, until the task is covered. If no feasible offer extends
// coverage the task is abandoned: returns nothing and the pool is restored.
std::optional<std::vector<Contract>> greedy_cover_task(const Instance& inst,
                                                       TaskId t,
                                                       std::vector<WorkerId>& pool);

// Total-budget heuristic: tasks in descending budget (ties: ascending id),
// each covered greedily against the shared shrinking worker pool.
Assignment solve_tba(const Instance& inst, SolveStats* stats = nullptr);

// Average-budget heuristic: identical to solve_tba except tasks are ordered
// by descending budget/|required| (ties: ascending id).
Assignment solve_aba(const Instance& inst, SolveStats* stats = nullptr);

}  // namespace sata
